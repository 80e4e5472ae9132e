"""Strict feasibility, optimization and projection of constraint systems."""

from math import lcm

from .constraints import EQ, LT, LinearConstraint
from .intervals import Interval
from .rational import INF, NEG_INF, to_rational
from .simplex import INFEASIBLE, UNBOUNDED, solve_lp


class InfeasibleSystemError(ValueError):
    """Raised when an operation needs a (strictly) feasible system."""


def _compile(sys, with_margin):
    """Integer rows for ``sys``; strict rows get the margin column if asked."""
    index = sys.index
    nvars = len(sys.variables)
    margin = nvars if with_margin else None
    rows = []
    for con in sys.constraints:
        coeffs, b = con.integer_row(index)
        if con.relation == LT and margin is not None:
            coeffs[margin] = 1
        rows.append((coeffs, b))
        if con.relation == EQ:
            rows.append(({j: -a for j, a in coeffs.items()}, -b))
    free = [True] * nvars
    if margin is not None:
        free.append(False)
        rows.append(({margin: 1}, 1))
    return nvars + (margin is not None), free, rows


def feasible_strict(sys):
    """A rational point satisfying every constraint exactly, or None.

    Strict rows ``c < b`` become ``c + m <= b``; the margin ``m`` (capped at 1)
    is maximized and the system is strictly feasible iff the optimum is
    positive.  The returned point is re-checked against ``sys`` before it is
    handed out.
    """
    has_strict = any(con.relation == LT for con in sys.constraints)
    ncols, free, rows = _compile(sys, has_strict)
    objective = {ncols - 1: 1} if has_strict else {}
    res = solve_lp(ncols, free, rows, objective)
    if res.status == INFEASIBLE:
        return None
    # the margin is capped, so the LP cannot be unbounded here
    if has_strict and res.value <= 0:
        return None
    point = dict(zip(sys.variables, res.point))
    bad = sys.violated(point)
    if bad:
        raise AssertionError(f"simplex witness violates {bad[0]!r}")
    return point


def maximize(sys, objective):
    """Supremum of ``objective`` over the closure of ``sys``.

    Strict rows are relaxed.  Returns a Fraction, INF, or None if even the
    relaxed system is infeasible.
    """
    ncols, free, rows = _compile(sys, False)
    index = sys.index
    coeffs = {v: to_rational(a) for v, a in objective.items()}
    scale = lcm(1, *(a.denominator for a in coeffs.values()))
    obj = {index[v]: int(a * scale) for v, a in coeffs.items() if a}
    res = solve_lp(ncols, free, rows, obj)
    if res.status == INFEASIBLE:
        return None
    if res.status == UNBOUNDED:
        return INF
    return res.value / scale


def project_onto(sys, var):
    """The exact set of values ``var`` takes on the solution set of ``sys``.

    Endpoints come from maximizing and minimizing ``var`` over the relaxed
    system; an endpoint is included iff the system stays strictly feasible
    with ``var`` pinned to it.
    """
    if feasible_strict(sys) is None:
        raise InfeasibleSystemError("cannot project an infeasible system")
    hi = maximize(sys, {var: 1})
    neg_lo = maximize(sys, {var: -1})
    lo = NEG_INF if neg_lo is INF else -neg_lo
    if hi is INF:
        hi_closed = False
    else:
        hi_closed = feasible_strict(sys.add(LinearConstraint.eq({var: 1}, hi))) is not None
    if lo is NEG_INF:
        lo_closed = False
    elif lo == hi:
        lo_closed = hi_closed
    else:
        lo_closed = feasible_strict(sys.add(LinearConstraint.eq({var: 1}, lo))) is not None
    return Interval(lo, hi, lo_closed, hi_closed)
