"""Multithreshold representations: thresholds, ranks and the parity rule.

A pair ``{u, v}`` is adjacent iff an odd number of thresholds are ``<=`` its
weight ``r(u) + r(v)``; equivalently the weight lies in one of the half-open
"edge intervals" ``[theta_1, theta_2), [theta_3, theta_4), ...`` with an
implicit ``theta_{k+1} = +inf``.
"""

import json
from bisect import bisect_right
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .graphs import Graph
from .lp.intervals import Interval, IntervalSet
from .lp.rational import INF, NEG_INF, parse_rational, to_rational


class RepresentationError(ValueError):
    pass


@dataclass(frozen=True)
class ThresholdVector:
    thetas: tuple

    def __init__(self, thetas):
        vals = tuple(to_rational(x) for x in thetas)
        if not vals:
            raise RepresentationError("need at least one threshold")
        if any(a >= b for a, b in zip(vals, vals[1:])):
            raise RepresentationError(f"thresholds must be strictly increasing: {vals}")
        object.__setattr__(self, "thetas", vals)

    @property
    def k(self):
        return len(self.thetas)

    def __len__(self):
        return len(self.thetas)

    def __iter__(self):
        return iter(self.thetas)

    def __getitem__(self, i):
        return self.thetas[i]

    def count_le(self, w):
        """Number of thresholds ``<= w``; this is also the index of the
        weight interval containing ``w`` (0 is ``(-inf, theta_1)``)."""
        return bisect_right(self.thetas, w)

    def bounds(self, j):
        """Endpoints of weight interval ``j`` in ``0..k`` (infinities at the ends)."""
        lo = self.thetas[j - 1] if j > 0 else NEG_INF
        hi = self.thetas[j] if j < self.k else INF
        return lo, hi

    def edge_intervals(self):
        return IntervalSet(
            Interval(*self.bounds(j), True, False) for j in range(1, self.k + 1, 2))

    def __str__(self):
        return "(" + ", ".join(str(t) for t in self.thetas) + ")"


class RankAssignment(tuple):
    """Ranks of vertices ``0..n-1`` as an immutable tuple of Fractions."""

    def __new__(cls, ranks):
        return super().__new__(cls, (to_rational(r) for r in ranks))

    @property
    def n(self):
        return len(self)

    def __repr__(self):
        return "RankAssignment([" + ", ".join(str(r) for r in self) + "])"


def _ranks(r):
    return r if isinstance(r, RankAssignment) else RankAssignment(r)


def weight(r, u, v):
    if u == v:
        raise RepresentationError("weight needs two distinct vertices")
    if not (0 <= u < len(r) and 0 <= v < len(r)):
        raise RepresentationError(f"unknown vertex in pair ({u}, {v})")
    return r[u] + r[v]


def parity_adjacent(th, w):
    return th.count_le(w) % 2 == 1


def induced_graph(n, th, r):
    r = _ranks(r)
    if len(r) != n:
        raise RepresentationError(f"{len(r)} ranks for {n} vertices")
    return Graph(n, frozenset(
        (u, v) for u, v in combinations(range(n), 2) if parity_adjacent(th, r[u] + r[v])))


@dataclass(frozen=True)
class Discrepancy:
    """First pair on which a rank assignment disagrees with the graph."""

    pair: tuple
    weight: Fraction
    interval: Interval
    in_graph: bool

    def __str__(self):
        u, v = self.pair
        if self.in_graph:
            verdict = "a non-edge, but the graph has this edge"
        else:
            verdict = "an edge, but the graph does not"
        return f"pair ({u}, {v}): weight {self.weight} lies in {self.interval}, making it {verdict}"


def find_discrepancy(g, th, r):
    r = _ranks(r)
    if len(r) != g.n:
        raise RepresentationError(f"{len(r)} ranks for {g.n} vertices")
    for u, v in combinations(range(g.n), 2):
        w = r[u] + r[v]
        j = th.count_le(w)
        if (j % 2 == 1) != g.has_edge(u, v):
            lo, hi = th.bounds(j)
            return Discrepancy((u, v), w, Interval(lo, hi, lo is not NEG_INF, False), g.has_edge(u, v))
    return None


def verify(g, th, r, certificate=False):
    """Check that ``r`` is a ``th``-representation of ``g``.

    With ``certificate=True`` returns ``(ok, discrepancy_or_None)``; the
    discrepancy is the lexicographically first offending pair.
    """
    bad = find_discrepancy(g, th, r)
    if certificate:
        return bad is None, bad
    return bad is None


def edge_color(th, r, e):
    """Colour ``i >= 1`` of edge ``e``: its weight lies in ``[theta_{2i-1}, theta_{2i})``."""
    u, v = e
    w = weight(r, u, v)
    j = th.count_le(w)
    if j % 2 == 0:
        raise RepresentationError(f"pair {e} with weight {w} is not an edge under {th}")
    return (j + 1) // 2


@dataclass(frozen=True)
class Representation:
    graph: Graph
    thresholds: ThresholdVector
    ranks: RankAssignment

    def __init__(self, graph, thresholds, ranks, *, check=True):
        if not isinstance(thresholds, ThresholdVector):
            thresholds = ThresholdVector(thresholds)
        ranks = _ranks(ranks)
        object.__setattr__(self, "graph", graph)
        object.__setattr__(self, "thresholds", thresholds)
        object.__setattr__(self, "ranks", ranks)
        if check:
            bad = find_discrepancy(graph, thresholds, ranks)
            if bad is not None:
                raise RepresentationError(f"not a representation: {bad}")

    @classmethod
    def unchecked(cls, graph, thresholds, ranks):
        return cls(graph, thresholds, ranks, check=False)

    def verify(self, certificate=False):
        return verify(self.graph, self.thresholds, self.ranks, certificate)

    def to_json(self):
        return {
            "n": self.graph.n,
            "edges": [list(e) for e in self.graph.sorted_edges()],
            "thetas": [str(t) for t in self.thresholds],
            "ranks": [str(r) for r in self.ranks],
        }

    def dumps(self):
        return json.dumps(self.to_json())

    @classmethod
    def from_json(cls, obj, check=True):
        g = Graph(int(obj["n"]), frozenset(tuple(e) for e in obj["edges"]))
        th = ThresholdVector(parse_rational(str(x)) for x in obj["thetas"])
        r = RankAssignment(parse_rational(str(x)) for x in obj["ranks"])
        return cls(g, th, r, check=check)


def affine_normalize(rep, target):
    """Move ``rep`` onto thresholds ``target`` by ranks ``r -> a*r + b``.

    Weights map by ``w -> a*w + 2b``, so this works exactly when an increasing
    affine map sends every threshold of ``rep`` to the matching target one.
    That always holds for ``k <= 2``; for ``k = 1`` the map is a translation.
    """
    if not isinstance(target, ThresholdVector):
        target = ThresholdVector(target)
    src = rep.thresholds
    if src.k != target.k:
        raise RepresentationError(f"threshold counts differ: {src.k} vs {target.k}")
    if src.k == 1:
        a = Fraction(1)
    else:
        a = (target[1] - target[0]) / (src[1] - src[0])
    shift = target[0] - a * src[0]
    for i, (s, t) in enumerate(zip(src, target)):
        if a * s + shift != t:
            raise RepresentationError(
                f"no increasing affine map sends {src} to {target}: the map fixed by the "
                f"first two thresholds sends theta_{i + 1} = {s} to {a * s + shift}, not {t}")
    b = shift / 2
    return Representation(rep.graph, target, [a * x + b for x in rep.ranks])
