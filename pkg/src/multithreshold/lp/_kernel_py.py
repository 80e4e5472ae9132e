"""Pure-Python fraction-free simplex kernel.

The tableau ``M`` is a list of rows of Python ints; the rational tableau it
stands for is ``M / d`` with ``d > 0`` the previous pivot element.  Pivots use
integer-preserving (Bareiss) updates, so every division below is exact.  The
last column holds the right-hand side.

This module and the compiled ``_kernel_ext`` expose the same three functions
and must make identical pivot choices.
"""

OPTIMAL = 0
UNBOUNDED = 1


def pivot(M, basis, d, r, c):
    """Pivot on ``M[r][c]`` in place and return the new denominator."""
    prow = M[r]
    p = prow[c]
    width = len(prow)
    for i, row in enumerate(M):
        if i == r:
            continue
        f = row[c]
        if f == 0:
            if p != d:
                for j in range(width):
                    if row[j]:
                        row[j] = row[j] * p // d
        else:
            for j in range(width):
                row[j] = (row[j] * p - f * prow[j]) // d
    basis[r] = c
    if p < 0:
        for row in M:
            for j in range(width):
                row[j] = -row[j]
        p = -p
    return p


def phase0(M, basis, d, free_cols, row_ok):
    """Pivot each free column into the basis.

    Rows that receive a free variable are switched off in ``row_ok``: they
    only define that variable and never take part in ratio tests.  Returns the
    new denominator and the free columns that are zero in every active row.
    """
    stuck = []
    nrows = len(row_ok)
    for c in free_cols:
        for r in range(nrows):
            if row_ok[r] and M[r][c] != 0:
                d = pivot(M, basis, d, r, c)
                row_ok[r] = 0
                break
        else:
            stuck.append(c)
    return d, stuck


def simplex(M, basis, d, obj_row, col_ok, row_ok):
    """Maximize the objective stored in row ``obj_row`` with Bland's rule.

    The objective row holds negated reduced costs, so a column may enter when
    its entry is negative.  Returns ``(status, d)``.
    """
    obj = M[obj_row]
    rhs = len(obj) - 1
    nrows = len(row_ok)
    ncols = len(col_ok)
    while True:
        c = -1
        for j in range(ncols):
            if col_ok[j] and obj[j] < 0:
                c = j
                break
        if c < 0:
            return OPTIMAL, d
        r = -1
        best_num = best_den = 0
        for i in range(nrows):
            if not row_ok[i]:
                continue
            a = M[i][c]
            if a <= 0:
                continue
            b = M[i][rhs]
            if r < 0:
                r, best_num, best_den = i, b, a
                continue
            lhs = b * best_den
            rhs_cmp = best_num * a
            if lhs < rhs_cmp or (lhs == rhs_cmp and basis[i] < basis[r]):
                r, best_num, best_den = i, b, a
        if r < 0:
            return UNBOUNDED, d
        d = pivot(M, basis, d, r, c)
