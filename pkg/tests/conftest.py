import random

import pytest

from orthinst import TensorSpec, flatten
from orthinst.specfile import load_bundled


def random_skew(size, rng, box=3):
    rows = [[0] * size for _ in range(size)]
    for i in range(size):
        for j in range(i + 1, size):
            x = rng.randint(-box, box)
            rows[i][j] = x
            rows[j][i] = -x
    return tuple(tuple(r) for r in rows)


def random_spec(rng, cs=(3, 4, 5, 6), ns=(3, 4), max_terms=3):
    c = rng.choice(cs)
    n = rng.choice(ns)
    t = rng.randint(1, max_terms)
    return TensorSpec(c, n, tuple((random_skew(c, rng), random_skew(n + 1, rng)) for _ in range(t)))


@pytest.fixture(scope="session")
def c6p3():
    return load_bundled("c6p3")


@pytest.fixture(scope="session")
def c5p3():
    return load_bundled("c5p3")


@pytest.fixture(scope="session")
def F6(c6p3):
    return c6p3.flatten()


@pytest.fixture(scope="session")
def F5(c5p3):
    return c5p3.flatten()


# a frozen two-term form of deficient rank 8 = 2*3 + 2 whose witness search
# comes up empty: exercises the sampled nondegeneracy tier
DEFICIENT_TERMS = (
    (
        ((0, 0, -2), (0, 0, 1), (2, -1, 0)),
        ((0, -1, 1, 2), (1, 0, 0, 0), (-1, 0, 0, -2), (-2, 0, 2, 0)),
    ),
    (
        ((0, -2, -2), (2, 0, 1), (2, -1, 0)),
        ((0, 0, -2, 0), (0, 0, 0, 2), (2, 0, 0, -1), (0, -2, 1, 0)),
    ),
)


@pytest.fixture(scope="session")
def F_deficient():
    return flatten(TensorSpec(3, 3, DEFICIENT_TERMS))
