"""Exact rational linear feasibility with strict inequalities."""

from .constraints import EQ, LE, LT, ConstraintSystem, LinearConstraint
from .feasibility import InfeasibleSystemError, feasible_strict, maximize, project_onto
from .intervals import Interval, IntervalSet, interval_union
from .kernel import BACKEND
from .rational import INF, NEG_INF, Infinity, format_ext, parse_rational, to_ext, to_rational

__all__ = [
    "BACKEND",
    "EQ",
    "INF",
    "LE",
    "LT",
    "NEG_INF",
    "ConstraintSystem",
    "InfeasibleSystemError",
    "Infinity",
    "Interval",
    "IntervalSet",
    "LinearConstraint",
    "feasible_strict",
    "format_ext",
    "interval_union",
    "maximize",
    "parse_rational",
    "project_onto",
    "to_ext",
    "to_rational",
]
