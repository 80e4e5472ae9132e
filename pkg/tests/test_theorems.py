import logging
from fractions import Fraction as F
from math import comb

import pytest

from multithreshold import theorems
from multithreshold.constructions import two_k3_c_t
from multithreshold.graphs import (
    CompleteMultipartite,
    Graph,
    build_family,
    complete_graph,
    complete_multipartite,
    is_threshold,
    pK2,
    pK3,
)
from multithreshold.representation import Representation
from multithreshold.solver import decide_k

from oracles import all_graph_masks, mask_edges


def test_triangle_multisets():
    assert theorems.triangle_multisets(two_k3_c_t(5)) == [(1, 1, 1), (2, 2, 2)]
    single = Representation(build_family(pK3(1)), (-1, 1), [0, 0, 0])
    assert theorems.triangle_multisets(single) == [(1, 1, 1)]
    assert theorems.rainbow_check(single)


def test_triangle_multisets_rejects_other_graphs():
    rep = Representation(build_family(pK2(2)), (-1, 1), [-2, 2, -4, 4])
    with pytest.raises(theorems.NotDisjointTrianglesError):
        theorems.triangle_multisets(rep)


def test_rainbow_on_solver_witnesses():
    assert theorems.rainbow_check(two_k3_c_t(F(3, 2)))
    rep = decide_k(build_family(pK3(2)), 3)
    assert theorems.rainbow_check(rep)
    rep = decide_k(build_family(pK3(3)), 5)
    assert rep is not None and theorems.rainbow_check(rep)


def test_rainbow_failure_is_loud(caplog):
    # two triangles with identical colours cannot come from a valid
    # representation, so build one unchecked
    fake = Representation.unchecked(build_family(pK3(2)), (-1, 1), [0] * 6)
    with caplog.at_level(logging.ERROR):
        assert not theorems.rainbow_check(fake)
    assert "colour multiset" in caplog.text


@pytest.mark.parametrize("k,bound", [(1, 1), (2, 4), (3, 10), (4, 20)])
def test_pigeonhole_bound(k, bound):
    assert theorems.pigeonhole_bound(k) == bound == comb(k + 2, 3)


@pytest.mark.parametrize("p,k", [(1, 1), (4, 2), (5, 3), (10, 3), (11, 4)])
def test_theta_lower_pk3(p, k):
    assert theorems.theta_lower_pk3(p).k == k


def test_theta_lower_crude():
    # least c with 8c^3 >= 6p, i.e. ceil((6p)^(1/3) / 2)
    assert theorems.theta_lower_pk3(1).crude == 1
    assert theorems.theta_lower_pk3(36).crude == 3
    assert theorems.theta_lower_pk3(37).crude == 4


@pytest.mark.parametrize("parts,t", [((3, 3), 3), ((1, 5), 1), ((2, 3, 7), 3), ((7, 3, 2), 3), ((4,), 1)])
def test_cozzens_tdim(parts, t):
    assert theorems.cozzens_tdim(parts) == t


def test_tdim_examples():
    assert theorems.tdim_bruteforce(build_family(CompleteMultipartite(3, 3))) == 3
    assert theorems.tdim_bruteforce(build_family(pK2(2))) == 2
    assert theorems.tdim_bruteforce(build_family(pK2(3))) == 3
    assert theorems.tdim_bruteforce(complete_graph(4)) == 1
    assert theorems.tdim_bruteforce(Graph(3)) == 1


def test_tdim_limit_and_guard():
    assert theorems.tdim_bruteforce(build_family(CompleteMultipartite(3, 3)), limit=2) is None
    assert theorems.tdim_bruteforce(build_family(CompleteMultipartite(3, 3)), limit=3) == 3
    with pytest.raises(theorems.GraphTooLargeError):
        theorems.tdim_bruteforce(Graph(8))


@pytest.mark.parametrize("n", range(1, 6))
def test_tdim_one_iff_threshold(n):
    for mask in all_graph_masks(n):
        g = Graph(n, frozenset(mask_edges(n, mask)))
        assert (theorems.tdim_bruteforce(g, limit=1) == 1) == is_threshold(g)


def partitions(n, largest=None):
    if n == 0:
        yield ()
        return
    for a in range(min(n, largest or n), 0, -1):
        for rest in partitions(n - a, a):
            yield (a,) + rest


def test_cozzens_matches_bruteforce_up_to_7():
    seen = 0
    for n in range(1, 8):
        for parts in partitions(n):
            g = complete_multipartite(parts)
            assert theorems.tdim_bruteforce(g) == theorems.cozzens_tdim(parts), parts
            seen += 1
    assert seen == 44


@pytest.mark.parametrize("p,k", [(1, 1), (2, 3), (3, 5)])
def test_pigeonhole_consequence(p, k):
    rep = decide_k(build_family(pK3(p)), k)
    assert rep is not None
    assert p <= theorems.pigeonhole_bound(k)
    assert len(set(theorems.triangle_multisets(rep))) == p
