import pytest
from hypothesis import given, settings

from src.core.packing.errors import InfeasiblePackingError
from src.core.packing.geometry import Packing, Placement, is_feasible, x_overlap, y_overlap
from src.core.packing.relations import (
    Direction,
    can_move_freely,
    is_bl_stable,
    is_bl_stable_rect,
    is_blocked,
    is_over,
    is_right_of,
    max_slide,
    settle,
)
from tests.conftest import A, B, C, feasible_packings, make_instance, make_packing

PROPERTY_SETTINGS = settings(max_examples=200, deadline=None)


def test_is_over(demo_packing):
    a, b, c = (demo_packing.get(i) for i in (A, B, C))
    assert is_over(c, b)
    assert not is_over(b, c)
    assert not is_over(a, c)


def test_is_over_counts_gapped_rectangles():
    instance = make_instance((2, 4), (2, 1), (2, 1))
    packing = make_packing(instance, {1: (0, 0), 2: (0, 3)})
    assert is_over(packing.get(2), packing.get(1))


def test_is_right_of(demo_packing):
    a, b, c = (demo_packing.get(i) for i in (A, B, C))
    assert is_right_of(b, a)
    assert not is_right_of(a, b)
    assert is_right_of(c, a)


def test_can_move_freely(demo_packing):
    assert can_move_freely(C, demo_packing, Direction.UP)
    # B and C touch A's x-range only at x=2
    assert can_move_freely(A, demo_packing, Direction.UP)
    assert not can_move_freely(A, demo_packing, Direction.RIGHT)
    lone = make_instance((4, 3), (1, 1))
    packing = make_packing(lone, {1: (1, 1)})
    assert can_move_freely(1, packing, Direction.UP)
    assert can_move_freely(1, packing, Direction.RIGHT)


def test_can_move_freely_rejects_down(demo_packing):
    with pytest.raises(ValueError):
        can_move_freely(A, demo_packing, Direction.DOWN)


def test_is_blocked(demo_packing):
    assert is_blocked(B, demo_packing, Direction.LEFT)
    assert is_blocked(C, demo_packing, Direction.DOWN)
    lone = make_instance((4, 3), (2, 2))
    packing = make_packing(lone, {1: (1, 0)})
    assert not is_blocked(1, packing, Direction.LEFT)
    assert is_blocked(1, packing, Direction.DOWN)


def test_corner_contact_does_not_block():
    # rect 2 touches rect 1 only at the point (1, 1)
    instance = make_instance((3, 3), (1, 1), (1, 1))
    packing = make_packing(instance, {1: (0, 0), 2: (1, 1)})
    assert not is_blocked(2, packing, Direction.DOWN)
    assert not is_blocked(2, packing, Direction.LEFT)


def test_is_blocked_requires_feasible(demo_packing):
    with pytest.raises(InfeasiblePackingError):
        is_blocked(A, demo_packing.place(B, Placement(1, 0)), Direction.LEFT)


def test_is_bl_stable(demo_packing):
    assert is_bl_stable(demo_packing)
    assert is_bl_stable(Packing.empty(demo_packing.instance))
    tall = make_instance((4, 4), (2, 3), (2, 2), (2, 1))
    packing = make_packing(tall, {A: (0, 0), B: (2, 0), C: (2, 3)})
    assert not is_bl_stable_rect(C, packing)
    assert not is_bl_stable(packing)


def test_max_slide():
    instance = make_instance((4, 3), (2, 3), (2, 2))
    lifted = make_packing(instance, {1: (0, 0), 2: (2, 1)})
    assert max_slide(2, lifted, Direction.DOWN) == 1
    dropped = lifted.place(2, Placement(2, 0))
    assert max_slide(2, dropped, Direction.LEFT) == 0
    lone = make_instance((4, 3), (1, 1))
    packing = make_packing(lone, {1: (3, 2)})
    assert max_slide(1, packing, Direction.LEFT) == 3


def test_max_slide_up_and_right_stop_at_borders(demo_packing):
    assert max_slide(A, demo_packing, Direction.UP) == 0
    assert max_slide(B, demo_packing, Direction.RIGHT) == 0
    lone = make_instance((4, 3), (1, 1))
    packing = make_packing(lone, {1: (1, 1)})
    assert max_slide(1, packing, Direction.UP) == 1
    assert max_slide(1, packing, Direction.RIGHT) == 2


def test_settle():
    instance = make_instance((4, 3), (2, 3), (2, 2))
    lifted = make_packing(instance, {1: (0, 0), 2: (2, 1)})
    assert settle(2, lifted) == Placement(2, 0)
    lone = make_instance((4, 3), (1, 1))
    assert settle(1, make_packing(lone, {1: (3, 2)})) == Placement(0, 0)


def test_settle_leaves_stable_rectangles(demo_packing):
    for rid in (A, B, C):
        assert settle(rid, demo_packing) == demo_packing.get(rid).placement


def test_settle_alternates_until_stuck():
    # the 1x1 drops onto rect 1, slides left off its edge, then drops to the floor
    instance = make_instance((4, 4), (1, 1), (1, 1))
    packing = make_packing(instance, {1: (1, 0), 2: (1, 3)})
    assert settle(2, packing) == Placement(0, 0)


# --- properties over random feasible packings --------------------------------

@PROPERTY_SETTINGS
@given(feasible_packings())
def test_over_and_right_of_are_dual(packing):
    for i in packing.rects:
        for j in packing.others(i.id):
            if x_overlap(i, j) > 0:
                assert is_over(i, j) != is_over(j, i)
            if y_overlap(i, j) > 0:
                assert is_right_of(i, j) != is_right_of(j, i)


@PROPERTY_SETTINGS
@given(feasible_packings())
def test_blocked_iff_no_slide(packing):
    for rid in packing.ids:
        for direction in (Direction.DOWN, Direction.LEFT):
            assert is_blocked(rid, packing, direction) == (max_slide(rid, packing, direction) == 0)


@PROPERTY_SETTINGS
@given(feasible_packings())
def test_settle_gives_stable_feasible_lower_position(packing):
    for rid in packing.ids:
        before = packing.get(rid).placement
        final = settle(rid, packing)
        settled = packing.place(rid, final)
        assert is_feasible(settled)
        assert is_bl_stable_rect(rid, settled)
        assert final.v is before.v
        assert final.x + final.y <= before.x + before.y
        # settling again changes nothing
        assert settle(rid, settled) == final


@PROPERTY_SETTINGS
@given(feasible_packings())
def test_top_right_corners_are_distinct(packing):
    corners = [(r.right, r.top) for r in packing.rects]
    assert len(set(corners)) == len(corners)
