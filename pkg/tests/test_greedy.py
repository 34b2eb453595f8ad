import pytest

from src.core.packing.geometry import Orientation, is_feasible
from src.core.packing.relations import is_bl_stable
from src.core.solver.greedy import find_greedy_gap, greedy_exhaustive, solve_greedy
from tests.conftest import A, B, C, make_instance


def test_greedy_demo_order(demo_instance, demo_packing):
    result = solve_greedy(demo_instance, [A, B, C])
    assert result.success
    assert result.packing == demo_packing


def test_greedy_demo_reverse_order_fails(demo_instance):
    result = solve_greedy(demo_instance, [C, B, A])
    assert not result.success
    assert result.failed_id == A
    assert result.packing.ids == [B, C]


def test_greedy_single_rectangle():
    instance = make_instance((4, 3), (2, 2))
    result = solve_greedy(instance, [1])
    assert result.success
    assert result.packing.get(1).left == 0
    assert result.packing.get(1).bottom == 0


def test_greedy_orientation_sequence_and_mapping():
    instance = make_instance((4, 2), (2, 3), (1, 2))
    by_position = solve_greedy(instance, [1, 2], [Orientation.VERTICAL, Orientation.HORIZONTAL])
    by_id = solve_greedy(instance, [1, 2], {1: Orientation.VERTICAL})
    assert by_position.success
    assert by_position.packing == by_id.packing
    assert not solve_greedy(instance, [1, 2]).success


def test_greedy_success_is_stable(demo_instance):
    result = solve_greedy(demo_instance, [B, A, C])
    assert result.success
    assert is_feasible(result.packing)
    assert is_bl_stable(result.packing)


def test_greedy_rejects_bad_order(demo_instance):
    with pytest.raises(ValueError):
        solve_greedy(demo_instance, [A, B])
    with pytest.raises(ValueError):
        solve_greedy(demo_instance, [A, B, C], [Orientation.HORIZONTAL])


def test_greedy_exhaustive(demo_instance):
    found = greedy_exhaustive(demo_instance)
    assert found is not None
    order, orientations = found
    assert solve_greedy(demo_instance, order, orientations).success
    assert greedy_exhaustive(make_instance((3, 3), (2, 2), (2, 2))) is None


def test_greedy_exhaustive_finds_rotation():
    instance = make_instance((3, 2), (2, 3))
    order, orientations = greedy_exhaustive(instance)
    assert order == [1]
    assert orientations[1] is Orientation.VERTICAL


def test_find_greedy_gap_skips_solvable_and_infeasible(demo_instance):
    instances = [demo_instance, make_instance((3, 3), (2, 2), (2, 2))]
    assert find_greedy_gap(instances) is None
