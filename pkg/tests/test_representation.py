from fractions import Fraction as F
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from multithreshold.graphs import Graph, build_family, pK2, pK3
from multithreshold.lp import Interval
from multithreshold.representation import (
    RankAssignment,
    Representation,
    RepresentationError,
    ThresholdVector,
    affine_normalize,
    edge_color,
    induced_graph,
    parity_adjacent,
    verify,
    weight,
)

TH2 = ThresholdVector((-1, 1))
TH5 = ThresholdVector((-1, 1, 5))
TWO_K3_T5 = [F(1, 4)] * 3 + [F(5, 2)] * 3


def test_weight():
    assert weight(RankAssignment([-2, 2]), 0, 1) == 0
    assert weight(RankAssignment([0, 0]), 0, 1) == 0
    assert weight(RankAssignment([F(3, 2), F(5, 2)]), 0, 1) == 4
    assert weight(RankAssignment([F(3, 2), F(5, 2)]), 1, 0) == 4
    with pytest.raises(RepresentationError):
        weight(RankAssignment([0, 0]), 0, 2)
    with pytest.raises(RepresentationError):
        weight(RankAssignment([0, 0]), 1, 1)


def test_parity_adjacent():
    assert parity_adjacent(TH2, 0)
    assert not parity_adjacent(TH2, 1)
    assert parity_adjacent(TH5, 6)
    assert parity_adjacent(TH2, -1) and not parity_adjacent(TH2, F(-3, 2))


def test_induced_graph():
    assert induced_graph(4, TH2, [-2, 2, -4, 4]) == build_family(pK2(2))
    assert induced_graph(2, ThresholdVector((0,)), [0, 0]) == Graph(2, frozenset({(0, 1)}))
    assert induced_graph(6, TH5, TWO_K3_T5) == build_family(pK3(2))


def test_two_triangle_weights_pair_by_pair():
    # all 15 weights of the t = 5 picture
    for u, v in combinations(range(6), 2):
        w = TWO_K3_T5[u] + TWO_K3_T5[v]
        same = (u < 3) == (v < 3)
        expected = F(1, 2) if same and u < 3 else 5 if same else F(11, 4)
        assert w == expected


def test_verify_and_certificate():
    g = build_family(pK2(2))
    assert verify(g, TH2, [-2, 2, -4, 4])
    ok, bad = verify(g, TH2, [0, 0, 0, 0], certificate=True)
    assert not ok
    assert bad.pair == (0, 2) and bad.weight == 0 and not bad.in_graph
    assert bad.interval == Interval(-1, 1, True, False)
    assert "(0, 2)" in str(bad)
    assert verify(build_family(pK3(2)), TH5, TWO_K3_T5)


def test_edge_color():
    r = RankAssignment([0, 0, F(5, 2), F(5, 2)])
    assert edge_color(TH5, r, (0, 1)) == 1
    assert edge_color(TH5, r, (2, 3)) == 2
    assert edge_color(TH2, r, (0, 1)) == 1
    with pytest.raises(RepresentationError):
        edge_color(TH2, RankAssignment([1, 1]), (0, 1))


def test_representation_constructor_checks():
    with pytest.raises(RepresentationError):
        Representation(build_family(pK2(2)), TH2, [0, 0, 0, 0])
    bad = Representation.unchecked(build_family(pK2(2)), TH2, [0, 0, 0, 0])
    assert not bad.verify()


def test_threshold_vector_validation():
    with pytest.raises(RepresentationError):
        ThresholdVector((1, 1))
    with pytest.raises(RepresentationError):
        ThresholdVector(())
    with pytest.raises(TypeError):
        ThresholdVector((0.5,))


def test_json_round_trip():
    rep = Representation(build_family(pK3(2)), TH5, TWO_K3_T5)
    obj = rep.to_json()
    assert obj["thetas"] == ["-1", "1", "5"] and obj["ranks"][0] == "1/4"
    assert Representation.from_json(obj) == rep


def test_affine_normalize():
    rep = Representation(build_family(pK2(2)), TH2, [-2, 2, -4, 4])
    out = affine_normalize(rep, (0, 4))
    assert list(out.ranks) == [-3, 5, -7, 9]
    assert out.verify()
    assert affine_normalize(rep, TH2) == rep
    rep5 = Representation(build_family(pK3(2)), TH5, TWO_K3_T5)
    with pytest.raises(RepresentationError, match="affine"):
        affine_normalize(rep5, (-1, 1, 7))
    with pytest.raises(RepresentationError):
        affine_normalize(rep, (-1, 1, 7))


def test_affine_normalize_k1_is_translation():
    rep = Representation(Graph(2, frozenset({(0, 1)})), ThresholdVector((0,)), [0, 0])
    out = affine_normalize(rep, (4,))
    assert list(out.ranks) == [2, 2]


rational = st.fractions(min_value=-8, max_value=8, max_denominator=6)


@st.composite
def threshold_vectors(draw, max_k=5):
    vals = draw(st.lists(rational, min_size=1, max_size=max_k, unique=True))
    return ThresholdVector(sorted(vals))


@settings(max_examples=300)
@given(threshold_vectors(), rational)
def test_parity_matches_edge_intervals(th, w):
    assert parity_adjacent(th, w) == (w in th.edge_intervals())


@settings(max_examples=100)
@given(threshold_vectors(max_k=2), st.data())
def test_verify_invariant_under_affine_normalize(th, data):
    n = data.draw(st.integers(1, 6))
    r = data.draw(st.lists(rational, min_size=n, max_size=n))
    rep = Representation(induced_graph(n, th, r), th, r)
    a = data.draw(st.fractions(min_value=F(1, 4), max_value=4, max_denominator=4))
    b = data.draw(rational)
    target = ThresholdVector([a * x + b for x in th])
    out = affine_normalize(rep, target)
    assert out.verify()
    assert induced_graph(n, target, out.ranks) == rep.graph


@settings(max_examples=100)
@given(threshold_vectors(), st.data())
def test_induced_graph_invariant_under_equal_rank_swap(th, data):
    n = data.draw(st.integers(2, 7))
    r = data.draw(st.lists(st.sampled_from([F(-1), F(0), F(1, 2), F(3)]), min_size=n, max_size=n))
    perm = data.draw(st.permutations(range(n)))
    # permuting the rank values themselves among vertices of equal rank is a no-op
    r2 = list(r)
    for v in range(n):
        same = [u for u in range(n) if r[u] == r[v]]
        r2[v] = r[same[perm[v] % len(same)]]
    assert induced_graph(n, th, r) == induced_graph(n, th, r2)
