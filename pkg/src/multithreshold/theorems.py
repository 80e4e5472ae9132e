"""Triangle colourings, the pigeonhole bound for pK3, and threshold dimension."""

import logging
from dataclasses import dataclass
from itertools import combinations
from math import comb

from .graphs import Graph
from .representation import edge_color

log = logging.getLogger(__name__)

MAX_TDIM_VERTICES = 7


class NotDisjointTrianglesError(ValueError):
    pass


class GraphTooLargeError(ValueError):
    pass


def triangles_of(g):
    """The triangles of ``g`` if it is a disjoint union of triangles."""
    comps = g.components()
    for comp in comps:
        if len(comp) != 3 or not all(g.has_edge(u, v) for u, v in combinations(comp, 2)):
            raise NotDisjointTrianglesError(f"component {comp} is not a triangle")
    return comps


def triangle_multisets(rep):
    """Sorted colour triple of each triangle, in component order."""
    out = []
    for tri in triangles_of(rep.graph):
        cols = sorted(edge_color(rep.thresholds, rep.ranks, e) for e in combinations(tri, 2))
        out.append(tuple(cols))
    return out


def rainbow_check(rep):
    """Whether all triangles of a pK3 representation carry distinct colour multisets.

    This must hold for every valid representation, so a False result means a
    bug somewhere upstream and is logged as an error.
    """
    ms = triangle_multisets(rep)
    ok = len(set(ms)) == len(ms)
    if not ok:
        log.error("two triangles share a colour multiset: %s (thresholds %s, ranks %s)",
                  ms, rep.thresholds, list(map(str, rep.ranks)))
    return ok


def pigeonhole_bound(k):
    """Most triangles a k-threshold pK3 can have: C(k+2, 3)."""
    if k < 1:
        raise ValueError("k must be positive")
    return comb(k + 2, 3)


@dataclass(frozen=True)
class ThetaLowerBound:
    k: int
    crude: int


def theta_lower_pk3(p):
    """Lower bounds on the threshold number of pK3.

    ``k`` is the smallest k with C(k+2, 3) >= p; ``crude`` is the ceiling of
    (6p)^(1/3) / 2, computed exactly as the least c with 8c^3 >= 6p.
    """
    if p < 1:
        raise ValueError("p must be positive")
    k = 1
    while comb(k + 2, 3) < p:
        k += 1
    c = 0
    while 8 * c ** 3 < 6 * p:
        c += 1
    return ThetaLowerBound(k, c)


def cozzens_tdim(parts):
    """Threshold dimension of a complete multipartite graph: the second largest part.

    A single part is an edgeless graph, which is itself threshold: 1.
    """
    parts = sorted(parts)
    if not parts or any(m < 1 for m in parts):
        raise ValueError(f"part sizes must be positive, got {parts}")
    if len(parts) == 1:
        return 1
    return parts[-2]


# -- brute-force threshold dimension --------------------------------------------

def threshold_subgraph_masks(g):
    """Edge sets (bitmasks over ``g``'s sorted edges) of all threshold graphs
    on ``V(g)`` that are subgraphs of ``g``.

    Built from creation sequences: the last vertex ``v`` of a sequence on
    ``S`` is either isolated in ``S`` or dominates ``S - v``.
    """
    edges = g.sorted_edges()
    bit = {e: 1 << i for i, e in enumerate(edges)}
    adj = g.adjacency()
    memo = {0: {0}}

    def build(S):
        if S in memo:
            return memo[S]
        out = set()
        for v in range(g.n):
            if not S >> v & 1:
                continue
            rest = S & ~(1 << v)
            others = [w for w in range(g.n) if rest >> w & 1]
            subs = build(rest)
            out |= subs
            if all(w in adj[v] for w in others):
                star = 0
                for w in others:
                    star |= bit[(min(v, w), max(v, w))]
                out |= {m | star for m in subs}
        memo[S] = out
        return out

    return build((1 << g.n) - 1)


def _maximal(masks):
    kept = []
    for m in sorted(masks, key=lambda x: (-bin(x).count("1"), x)):
        if not any(m & k == m for k in kept):
            kept.append(m)
    return kept


def tdim_bruteforce(g, limit=None):
    """Fewest threshold subgraphs of ``g`` whose edges cover ``E(g)``.

    Exact set cover by depth-first search over the maximal threshold
    subgraphs.  Returns None when the answer exceeds ``limit``.  An edgeless
    graph is itself threshold and gets 1.
    """
    if g.n > MAX_TDIM_VERTICES:
        raise GraphTooLargeError(f"tdim_bruteforce is limited to n <= {MAX_TDIM_VERTICES}, got {g.n}")
    if not g.edges:
        return 1 if limit is None or limit >= 1 else None
    full = (1 << g.m) - 1
    cands = _maximal(threshold_subgraph_masks(g))
    by_edge = [[c for c in cands if c >> i & 1] for i in range(g.m)]
    biggest = max(bin(c).count("1") for c in cands)
    best = [g.m + 1 if limit is None else limit + 1]

    def dfs(covered, used):
        if covered == full:
            best[0] = used
            return
        missing = full & ~covered
        need = -(-bin(missing).count("1") // biggest)
        if used + need >= best[0]:
            return
        i = min((i for i in range(g.m) if missing >> i & 1), key=lambda i: len(by_edge[i]))
        for c in sorted(by_edge[i], key=lambda c: -bin(c & missing).count("1")):
            dfs(covered | c, used + 1)

    dfs(0, 0)
    if limit is not None and best[0] > limit:
        return None
    return best[0]
