"""Exact linear programming over integer rows.

``solve_lp`` maximizes a linear objective subject to ``A x <= b`` where each
column is either free or nonnegative.  All arithmetic is on Python ints via the
fraction-free kernel; results are returned as Fractions.
"""

from dataclasses import dataclass
from fractions import Fraction

from . import kernel

INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"
OPTIMAL = "optimal"

lp_calls = 0


@dataclass
class LPResult:
    status: str
    value: Fraction | None = None
    point: list | None = None


def solve_lp(nvars, free, rows, objective):
    """Maximize ``objective`` over ``{x : row . x <= rhs for every row}``.

    ``free[j]`` says whether column ``j`` is unrestricted in sign (otherwise
    ``x_j >= 0``).  ``rows`` is a list of ``(coeffs, rhs)`` with ``coeffs`` a
    dict column -> int.  ``objective`` is a dict column -> int.
    """
    global lp_calls
    lp_calls += 1
    m = len(rows)
    art = nvars + m
    width = art + 2
    rhs = width - 1
    obj2, obj1 = m, m + 1

    M = []
    for i, (coeffs, b) in enumerate(rows):
        row = [0] * width
        for j, a in coeffs.items():
            row[j] = a
        row[nvars + i] = 1
        row[rhs] = b
        M.append(row)
    zrow = [0] * width
    for j, c in objective.items():
        zrow[j] = -c
    M.append(zrow)
    M.append([0] * width)
    basis = [nvars + i for i in range(m)] + [-1, -1]
    row_ok = [1] * m + [0, 0]
    d = 1

    free_cols = [j for j in range(nvars) if free[j]]
    d, stuck = kernel.phase0(M, basis, d, free_cols, row_ok)

    col_ok = [0] * (art + 1)
    for j in range(nvars):
        if not free[j]:
            col_ok[j] = 1
    for j in range(nvars, art):
        col_ok[j] = 1

    active = [i for i in range(m) if row_ok[i]]
    if any(M[i][rhs] < 0 for i in active):
        for i in active:
            M[i][art] = -d
        M[obj1][art] = d
        r = min(active, key=lambda i: (M[i][rhs], i))
        d = kernel.pivot(M, basis, d, r, art)
        col_ok[art] = 1
        _, d = kernel.simplex(M, basis, d, obj1, col_ok, row_ok)
        if M[obj1][rhs] < 0:
            return LPResult(INFEASIBLE)
        col_ok[art] = 0
        if art in basis:
            r = basis.index(art)
            for j in range(art):
                if col_ok[j] and M[r][j] != 0:
                    d = kernel.pivot(M, basis, d, r, j)
                    break
            else:
                # Redundant row: only the artificial is left in it.
                row_ok[r] = 0
                basis[r] = -1

    for j in stuck:
        if M[obj2][j] != 0:
            return LPResult(UNBOUNDED)
    status, d = kernel.simplex(M, basis, d, obj2, col_ok, row_ok)
    if status == kernel.UNBOUNDED:
        return LPResult(UNBOUNDED)

    point = [Fraction(0)] * nvars
    for i in range(m):
        j = basis[i]
        if 0 <= j < nvars:
            point[j] = Fraction(M[i][rhs], d)
    return LPResult(OPTIMAL, Fraction(M[obj2][rhs], d), point)
