import random
from fractions import Fraction

import pytest

from quartic_acm.algebra import Polynomial, monomial_basis
from quartic_acm.picard import PicardLattice
from quartic_acm.schemes import make_cube_points, make_twisted_cubic_points


def random_homogeneous(rng, degree, lo=-9, hi=9, p=None):
    """Random nonzero homogeneous form with integer coefficients."""
    while True:
        terms = {e: rng.randint(lo, hi) for e in monomial_basis(degree)}
        poly = Polynomial(terms, p)
        if poly:
            return poly


def random_skew_int(rng, n, lo=-9, hi=9):
    m = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            v = rng.randint(lo, hi)
            m[i][j] = v
            m[j][i] = -v
    return m


def random_invertible_int_matrix(rng, n=4):
    """Invertible n x n integer matrix (for projective coordinate changes)."""
    while True:
        m = [[Fraction(rng.randint(-5, 5)) for _ in range(n)] for _ in range(n)]
        if _det_leibniz_fraction(m) != 0:
            return m


def _det_leibniz_fraction(m):
    import itertools

    n = len(m)
    total = Fraction(0)
    for perm in itertools.permutations(range(n)):
        sign = 1
        seen = list(perm)
        for i in range(n):
            for j in range(i + 1, n):
                if seen[i] > seen[j]:
                    sign = -sign
        prod = Fraction(1)
        for i in range(n):
            prod *= m[i][perm[i]]
        total += sign * prod
    return total


@pytest.fixture
def rng():
    return random.Random(20240817)


@pytest.fixture
def cube():
    return make_cube_points()


@pytest.fixture
def tc8():
    return make_twisted_cubic_points(list(range(8)))


@pytest.fixture
def elliptic_lattice():
    # h and an elliptic quartic class D with D^2 = 0, Dh = 4
    return PicardLattice(((4, 4), (4, 0)), (1, 0))


@pytest.fixture
def quintic_lattice():
    # D^2 = 2, Dh = 5
    return PicardLattice(((4, 5), (5, 2)), (1, 0))


@pytest.fixture
def sextic_lattice():
    # D^2 = 4, Dh = 6
    return PicardLattice(((4, 6), (6, 4)), (1, 0))
