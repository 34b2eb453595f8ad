import random

import pytest
from hypothesis import strategies as st

from src.core.packing.geometry import Dims, Instance, Orientation, Packing, Placement
from src.core.solver.corpus import perturb_packing, random_greedy_packing, random_instance

# Demo layout: container 4x3; A=2x3 at (0,0), B=2x2 at (2,0), C=2x1 at (2,2)
A, B, C = 1, 2, 3


def make_instance(container, *dims):
    """Instance with ids 1..n from (w, h) pairs."""
    return Instance.from_dims(Dims(*container), [Dims(w, h) for w, h in dims])


def make_packing(instance, placements):
    """Packing from {id: (x, y)} or {id: (x, y, "v")}."""
    return Packing.from_placements(instance, {
        rid: Placement(pos[0], pos[1], Orientation(pos[2]) if len(pos) > 2 else Orientation.HORIZONTAL)
        for rid, pos in placements.items()
    })


@pytest.fixture
def demo_instance():
    return make_instance((4, 3), (2, 3), (2, 2), (2, 1))


@pytest.fixture
def demo_packing(demo_instance):
    return make_packing(demo_instance, {A: (0, 0), B: (2, 0), C: (2, 2)})


@pytest.fixture
def stacked_packing():
    # lower L and upper U, both 2x1, in a 2x2 container
    instance = make_instance((2, 2), (2, 1), (2, 1))
    return make_packing(instance, {1: (0, 0), 2: (0, 1)})


# Hypothesis strategies: draw a seed, build the packing from a seeded RNG
@st.composite
def feasible_packings(draw, integral=False):
    """Greedy packings with some rectangles removed and the rest pushed up and right."""
    rng = random.Random(draw(st.integers(min_value=0, max_value=2**31 - 1)))
    instance = random_instance(rng, max_n=5, max_side=6, max_rect_side=3)
    packing = random_greedy_packing(rng, instance)
    for rid in packing.ids:
        if rng.random() < 0.3:
            packing = packing.without(rid)
    return perturb_packing(rng, packing, steps=1 if integral else 4)


@st.composite
def packings_with_free_rect(draw, integral=False):
    """A feasible packing plus the id of a rectangle it leaves unplaced."""
    packing = draw(feasible_packings(integral=integral))
    missing = [rid for rid in packing.instance.ids if rid not in packing]
    if not missing:
        rid = draw(st.sampled_from(packing.ids))
        # removing a rectangle keeps the packing feasible
        return packing.without(rid), rid
    return packing, draw(st.sampled_from(missing))
