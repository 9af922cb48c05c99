import random

import pytest

from polynorm.generators import (
    gen_bruns_gubeladze,
    gen_random_3polytope,
    gen_random_fibered,
    gen_reeve,
)
from polynorm.lattice import convex_hull

UNIT_CUBE = convex_hull(
    [(x, y, z) for x in (0, 1) for y in (0, 1) for z in (0, 1)]
)


def corpus_3d():
    """The named 3-polytope corpus: Reeve and Minkowski-sum families for
    q = 1..5, the unit cube, and a handful of seeded random instances."""
    named = [(f"reeve-{q}", gen_reeve(q)) for q in range(1, 6)]
    named += [(f"bg-{q}", gen_bruns_gubeladze(q)) for q in range(1, 6)]
    named.append(("cube", UNIT_CUBE))
    named += [
        (f"fibered-{s}", gen_random_fibered(s, 5).polytope) for s in range(1, 4)
    ]
    named += [(f"random-{s}", gen_random_3polytope(s, 5)) for s in range(1, 4)]
    return named


@pytest.fixture(scope="session")
def corpus():
    return corpus_3d()


@pytest.fixture
def rng():
    return random.Random(20260826)
