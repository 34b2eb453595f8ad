"""
Instance and packing generators for sweeps and property checks.

All generators take an explicit random.Random so corpora are reproducible
from a seed.
"""

import itertools
import logging
import random
from fractions import Fraction
from typing import Iterator, List, Optional, Sequence

from ..packing.geometry import Dims, Instance, Orientation, Packing
from ..packing.relations import Direction, max_slide
from .greedy import solve_greedy

# Set up logging
logger = logging.getLogger(__name__)


def enumerate_integer_instances(max_side: int, max_n: int,
                                dim_values: Sequence[int] = (1, 2, 3),
                                min_n: int = 1) -> Iterator[Instance]:
    """
    Every integer instance with container sides in 1..max_side (W <= H) and
    every multiset of min_n..max_n rectangles with sides from `dim_values`.

    Rectangles are rotatable, so each shape is listed once with w <= h, and
    containers are listed once up to transposition.
    """
    shapes = sorted({(min(a, b), max(a, b)) for a in dim_values for b in dim_values})
    for width in range(1, max_side + 1):
        for height in range(width, max_side + 1):
            container = Dims(width, height)
            for n in range(min_n, max_n + 1):
                for combo in itertools.combinations_with_replacement(shapes, n):
                    yield Instance.from_dims(container, [Dims(w, h) for w, h in combo])


def random_instance(rng: random.Random, max_n: int = 6, max_side: int = 6,
                    max_rect_side: Optional[int] = None, min_n: int = 1) -> Instance:
    """A random integer instance with up to `max_n` rectangles in a container up to max_side^2."""
    width = rng.randint(1, max_side)
    height = rng.randint(1, max_side)
    limit = max_rect_side or max_side
    n = rng.randint(min_n, max_n)
    rects = [Dims(rng.randint(1, limit), rng.randint(1, limit)) for _ in range(n)]
    return Instance.from_dims(Dims(width, height), rects)


def random_orientations(rng: random.Random, instance: Instance) -> dict:
    return {rid: rng.choice((Orientation.HORIZONTAL, Orientation.VERTICAL)) for rid in instance.ids}


def random_stable_packing(rng: random.Random, instance: Instance,
                          attempts: int = 20) -> Optional[Packing]:
    """
    A bottom-left stable packing of the whole instance produced by the greedy
    heuristic with a random order and random orientations, or None when no
    attempt succeeds.
    """
    ids = instance.ids
    for _ in range(attempts):
        order = ids[:]
        rng.shuffle(order)
        result = solve_greedy(instance, order, random_orientations(rng, instance))
        if result.success:
            return result.packing
    return None


def random_greedy_packing(rng: random.Random, instance: Instance) -> Packing:
    """
    The (possibly partial) bottom-left stable packing from one random greedy
    run. Never fails: a run that gets stuck keeps what it placed.
    """
    order = instance.ids
    rng.shuffle(order)
    return solve_greedy(instance, order, random_orientations(rng, instance)).packing


def perturb_packing(rng: random.Random, packing: Packing, steps: int = 4) -> Packing:
    """
    Move rectangles up and right by random amounts while staying feasible.

    Each move goes a random fraction k/steps of the free distance in that
    direction, so the result is feasible and generally not stable.
    """
    current = packing
    ids = packing.ids
    rng.shuffle(ids)
    for rid in ids:
        for direction in (Direction.UP, Direction.RIGHT):
            room = max_slide(rid, current, direction)
            if not room:
                continue
            delta = room * Fraction(rng.randint(0, steps), steps)
            r = current.get(rid)
            if direction is Direction.UP:
                current = current.with_rect(r.moved_to(r.left, r.bottom + delta))
            else:
                current = current.with_rect(r.moved_to(r.left + delta, r.bottom))
    return current


def stable_corpus(seed: int, size: int, max_n: int = 6, max_side: int = 6) -> List[Packing]:
    """`size` bottom-left stable packings from random greedy runs on random instances."""
    rng = random.Random(seed)
    corpus: List[Packing] = []
    while len(corpus) < size:
        instance = random_instance(rng, max_n=max_n, max_side=max_side, max_rect_side=3)
        packing = random_greedy_packing(rng, instance)
        if packing.rects:
            corpus.append(packing)
    logger.debug(f"Built stable corpus of {size} packings from seed {seed}")
    return corpus
