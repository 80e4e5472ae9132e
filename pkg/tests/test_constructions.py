import random
from fractions import Fraction as F
from itertools import combinations

import pytest

from multithreshold import theorems
from multithreshold.constructions import (
    ConstructionError,
    pk2_c_t,
    pk2_epsilon,
    pk2_two_threshold,
    two_k3_c_t,
    two_k3_epsilon,
)
from multithreshold.graphs import build_family, pK2, pK3
from multithreshold.representation import weight

RNG = random.Random(20241)


def random_rational(lo, hi, rng=RNG):
    """A rational in ``(lo, hi]``."""
    den = rng.randint(1, 50)
    span = (hi - lo) * den
    return lo + F(rng.randint(1, int(span)), den)


def test_pk2_two_threshold_examples():
    assert list(pk2_two_threshold(1).ranks) == [-2, 2]
    assert list(pk2_two_threshold(2).ranks) == [-2, 2, -4, 4]
    assert pk2_two_threshold(5).graph == build_family(pK2(5))


@pytest.mark.parametrize("p", range(1, 7))
def test_pk2_two_threshold_verifies(p):
    assert pk2_two_threshold(p).verify()


def test_pk2_c_t_examples():
    rep = pk2_c_t(2, 3)
    assert pk2_epsilon(2, 3) == 1
    assert list(rep.ranks) == [0, 0, -2, 2]
    assert pk2_epsilon(4, 6) == F(1, 10)
    rep = pk2_c_t(4, 6)
    nonedge = max(weight(rep.ranks, u, v) for u, v in combinations(range(8), 2)
                  if not rep.graph.has_edge(u, v))
    assert nonedge == F(11, 2) < 6
    assert pk2_c_t(3, 4).verify() and list(pk2_c_t(3, 4).thresholds) == [-1, 1, 4]


@pytest.mark.parametrize("p", range(2, 7))
def test_pk2_c_t_random_t(p):
    for _ in range(20):
        t = random_rational(2 * p - 3, 2 * p + 10)
        rep = pk2_c_t(p, t)
        assert rep.verify()
        assert all(weight(rep.ranks, u, v) == 0 for u, v in rep.graph.edges)


def test_pk2_c_t_rejects_small_t():
    with pytest.raises(ConstructionError, match="2p-3"):
        pk2_c_t(3, 3)
    with pytest.raises(ConstructionError):
        pk2_c_t(1, 5)


def test_two_k3_examples():
    rep = two_k3_c_t(5)
    assert two_k3_epsilon(5) == 1
    assert list(rep.ranks) == [0] * 3 + [F(5, 2)] * 3
    rep = two_k3_c_t(F(3, 2))
    assert two_k3_epsilon(F(3, 2)) == F(1, 4)
    assert list(rep.ranks) == [F(3, 8)] * 3 + [F(3, 4)] * 3
    assert weight(rep.ranks, 0, 3) == F(9, 8)
    assert two_k3_c_t(100).verify()
    assert rep.graph == build_family(pK3(2))


def test_two_k3_random_t():
    for _ in range(20):
        rep = two_k3_c_t(random_rational(1, 1000))
        assert rep.verify()
        assert theorems.triangle_multisets(rep) == [(1, 1, 1), (2, 2, 2)]


def test_two_k3_rejects_small_t():
    for t in (1, F(1, 2), -3):
        with pytest.raises(ConstructionError):
            two_k3_c_t(t)
