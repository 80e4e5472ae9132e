"""Independent oracles: nothing here imports the simplex or the search."""

from fractions import Fraction
from itertools import combinations, combinations_with_replacement, permutations

# -- Fourier-Motzkin ------------------------------------------------------------


def _fm_rows(constraints):
    """(coeffs, strict, bound) rows meaning ``coeffs . x (<|<=) bound``."""
    rows = []
    for coeffs, rel, bound in constraints:
        c = {v: Fraction(a) for v, a in coeffs.items() if a}
        b = Fraction(bound)
        if rel == "==":
            rows.append((c, False, b))
            rows.append(({v: -a for v, a in c.items()}, False, -b))
        else:
            rows.append((c, rel == "<", b))
    return rows


def _eliminate(rows, x):
    pos, neg, keep = [], [], []
    for row in rows:
        a = row[0].get(x, 0)
        (pos if a > 0 else neg if a < 0 else keep).append(row)
    for cp, sp, bp in pos:
        ap = cp[x]
        for cn, sn, bn in neg:
            an = -cn[x]
            c = {}
            for v in set(cp) | set(cn):
                if v == x:
                    continue
                val = cp.get(v, 0) / ap + cn.get(v, 0) / an
                if val:
                    c[v] = val
            keep.append((c, sp or sn, bp / ap + bn / an))
    return keep


def fm_feasible(variables, constraints):
    rows = _fm_rows(constraints)
    for x in variables:
        rows = _eliminate(rows, x)
    return all((b > 0) if strict else (b >= 0) for c, strict, b in rows)


def fm_project(variables, constraints, var):
    """``(lo, lo_closed, hi, hi_closed)`` with None for an infinite side,
    or None if the system is infeasible."""
    rows = _fm_rows(constraints)
    for x in variables:
        if x != var:
            rows = _eliminate(rows, x)
    lo = hi = None
    lo_c = hi_c = False
    for c, strict, b in rows:
        a = c.get(var, 0)
        if a == 0:
            if (b <= 0) if strict else (b < 0):
                return None
        elif a > 0:
            val = b / a
            if hi is None or val < hi or (val == hi and strict):
                hi, hi_c = val, not strict
        else:
            val = b / a
            if lo is None or val > lo or (val == lo and strict):
                lo, lo_c = val, not strict
    if lo is not None and hi is not None:
        if lo > hi or (lo == hi and not (lo_c and hi_c)):
            return None
    return lo, lo_c, hi, hi_c


# -- graphs as bitmasks -----------------------------------------------------------


def pair_index(n):
    return {p: i for i, p in enumerate(combinations(range(n), 2))}


def all_graph_masks(n):
    return range(1 << (n * (n - 1) // 2))


def mask_edges(n, mask):
    return [p for i, p in enumerate(combinations(range(n), 2)) if mask >> i & 1]


def canonical_table(n):
    """Canonical representative (least mask over relabellings) for every mask."""
    idx = pair_index(n)
    perm_maps = []
    for perm in permutations(range(n)):
        perm_maps.append([idx[tuple(sorted((perm[u], perm[v])))] for u, v in combinations(range(n), 2)])
    table = []
    for mask in all_graph_masks(n):
        bits = [i for i in range(len(idx)) if mask >> i & 1]
        table.append(min(sum(1 << pm[i] for i in bits) for pm in perm_maps))
    return table


def iso_classes(n):
    table = canonical_table(n)
    return sorted(set(table))


def _adj(n, mask):
    adj = [[False] * n for _ in range(n)]
    for u, v in mask_edges(n, mask):
        adj[u][v] = adj[v][u] = True
    return adj


# On four vertices these degree sequences pin the graph down uniquely.
_SIGNATURES = {
    "2K2": (1, 1, 1, 1),
    "P4": (1, 1, 2, 2),
    "C4": (2, 2, 2, 2),
}


def has_induced(n, mask, pattern):
    """``pattern`` in {"2K2", "P4", "C4"}: brute force over 4-subsets."""
    adj = _adj(n, mask)
    want = _SIGNATURES[pattern]
    for quad in combinations(range(n), 4):
        degs = tuple(sorted(sum(adj[a][b] for b in quad) for a in quad))
        if degs == want:
            return True
    return False


# -- rank-grid oracle ----------------------------------------------------------


def grid_realizable_classes(n, thetas, lo=-3, hi=3, step=Fraction(1, 4)):
    """Canonical masks of every graph induced by ranks on the grid
    ``lo, lo+step, ..., hi`` with the given thresholds."""
    scale = step.denominator
    assert step.numerator == 1
    grid = list(range(lo * scale, hi * scale + 1))
    th = [Fraction(t) * scale for t in thetas]
    table = canonical_table(n)
    pairs = list(combinations(range(n), 2))
    seen = set()
    for ranks in combinations_with_replacement(grid, n):
        mask = 0
        for i, (u, v) in enumerate(pairs):
            w = ranks[u] + ranks[v]
            if sum(1 for t in th if t <= w) % 2 == 1:
                mask |= 1 << i
        seen.add(table[mask])
    return seen
