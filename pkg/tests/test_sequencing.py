import random

import pytest
from hypothesis import given, settings, strategies as st

from src.core.packing.errors import (
    ActionNotACornerError,
    DuplicateActionError,
    InfeasiblePackingError,
    UnknownRectError,
    UnstablePackingError,
)
from src.core.packing.geometry import Orientation, Packing, Placement, is_feasible, total_coordinate
from src.core.packing.relations import is_bl_stable
from src.core.packing.sequencing import (
    PlacementAction,
    PlacementSequence,
    escape_candidate,
    escape_walk,
    extract_sequence,
    extraction_order,
    replay,
    stabilize,
)
from src.core.solver.corpus import random_instance, random_stable_packing
from tests.conftest import A, B, C, make_instance, make_packing

H = Orientation.HORIZONTAL


def demo_sequence(instance):
    return PlacementSequence(instance, (
        PlacementAction(A, H, 0, 0),
        PlacementAction(B, H, 2, 0),
        PlacementAction(C, H, 2, 2),
    ))


def test_escape_candidate(demo_packing):
    assert escape_candidate(demo_packing) == C
    assert escape_candidate(demo_packing.without(C)) == B
    lone = make_instance((4, 3), (1, 1))
    assert escape_candidate(make_packing(lone, {1: (2, 1)})) == 1


def test_escape_walk_follows_rectangles_over():
    # rect 2 sits over rect 1 with a gap; the walk starts at rect 1 and jumps to rect 2
    instance = make_instance((4, 4), (2, 1), (2, 1))
    packing = make_packing(instance, {1: (2, 0), 2: (1, 3)})
    assert escape_walk(packing) == [1, 2]


def test_escape_candidate_rejects_empty(demo_instance):
    with pytest.raises(InfeasiblePackingError):
        escape_candidate(Packing.empty(demo_instance))


def test_extraction_order(demo_packing, stacked_packing):
    assert extraction_order(demo_packing) == [C, B, A]
    assert extraction_order(stacked_packing) == [2, 1]
    lone = make_instance((4, 3), (1, 1))
    assert extraction_order(make_packing(lone, {1: (0, 0)})) == [1]


def test_extraction_order_rejects_infeasible(demo_packing):
    with pytest.raises(InfeasiblePackingError):
        extraction_order(demo_packing.place(B, Placement(1, 0)))


def test_stabilize_stable_packing_is_identity(demo_packing):
    stable, sequence = stabilize(demo_packing)
    assert stable == demo_packing
    assert sequence == demo_sequence(demo_packing.instance)


def test_stabilize_moves_to_corner():
    instance = make_instance((4, 3), (2, 2))
    stable, sequence = stabilize(make_packing(instance, {1: (1, 1)}))
    assert stable.get(1).placement == Placement(0, 0)
    assert sequence.actions == (PlacementAction(1, H, 0, 0),)


def test_stabilize_empty(demo_instance):
    stable, sequence = stabilize(Packing.empty(demo_instance))
    assert len(stable) == 0
    assert len(sequence) == 0


def test_stabilize_keeps_orientation_and_lowers_coordinates():
    instance = make_instance((5, 5), (3, 1), (1, 2), (2, 2))
    loose = make_packing(instance, {1: (1, 0, "v"), 2: (3, 1), 3: (2, 3)})
    assert is_feasible(loose)
    stable, sequence = stabilize(loose)
    assert is_feasible(stable)
    assert is_bl_stable(stable)
    assert total_coordinate(stable) <= total_coordinate(loose)
    assert stable.get(1).placement.v is Orientation.VERTICAL
    assert replay(instance, sequence) == stable


def test_extract_sequence(demo_packing, stacked_packing):
    sequence = extract_sequence(demo_packing)
    assert sequence == demo_sequence(demo_packing.instance)
    assert replay(demo_packing.instance, sequence) == demo_packing
    assert extract_sequence(stacked_packing).order == [1, 2]


def test_extract_sequence_single():
    lone = make_instance((4, 3), (1, 1))
    sequence = extract_sequence(make_packing(lone, {1: (0, 0)}))
    assert sequence.actions == (PlacementAction(1, H, 0, 0),)


def test_extract_sequence_rejects_unstable():
    instance = make_instance((4, 3), (2, 2))
    with pytest.raises(UnstablePackingError):
        extract_sequence(make_packing(instance, {1: (1, 1)}))


def test_replay(demo_packing):
    instance = demo_packing.instance
    assert replay(instance, demo_sequence(instance)) == demo_packing
    assert replay(instance, PlacementSequence(instance, ())) == Packing.empty(instance)


def test_replay_rejects_tampered_corner(demo_instance):
    actions = list(demo_sequence(demo_instance).actions)
    actions[1] = PlacementAction(B, H, 2, 1)
    with pytest.raises(ActionNotACornerError) as excinfo:
        replay(demo_instance, PlacementSequence(demo_instance, tuple(actions)))
    assert excinfo.value.index == 1
    assert str(excinfo.value).startswith("action-not-a-corner: action 1")


def test_replay_rejects_duplicates_and_unknown_ids(demo_instance):
    twice = PlacementSequence(demo_instance, (PlacementAction(A, H, 0, 0), PlacementAction(A, H, 2, 0)))
    with pytest.raises(DuplicateActionError) as excinfo:
        replay(demo_instance, twice)
    assert excinfo.value.index == 1
    unknown = PlacementSequence(demo_instance, (PlacementAction(7, H, 0, 0),))
    with pytest.raises(UnknownRectError):
        replay(demo_instance, unknown)


@settings(max_examples=100, deadline=None)
@given(st.integers(min_value=0, max_value=2**31 - 1))
def test_complete_stable_packings_round_trip(seed):
    rng = random.Random(seed)
    instance = random_instance(rng, max_n=5, max_side=6, max_rect_side=3)
    packing = random_stable_packing(rng, instance)
    if packing is None:
        return
    assert packing.is_complete
    assert is_bl_stable(packing)
    sequence = extract_sequence(packing)
    assert sorted(sequence.order) == instance.ids
    assert replay(instance, sequence) == packing
