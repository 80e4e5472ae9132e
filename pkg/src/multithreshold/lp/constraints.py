"""Linear constraints with strict and non-strict relations."""

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from types import MappingProxyType

from .rational import to_rational

LE = "<="
LT = "<"
EQ = "=="
RELATIONS = (LE, LT, EQ)


@dataclass(frozen=True)
class LinearConstraint:
    """``sum(coeffs[v] * v) <relation> bound`` with exact rational data."""

    coeffs: MappingProxyType
    relation: str
    bound: Fraction

    def __init__(self, coeffs, relation, bound):
        if relation not in RELATIONS:
            raise ValueError(f"unknown relation {relation!r}")
        clean = {}
        for var, a in dict(coeffs).items():
            a = to_rational(a)
            if a:
                clean[var] = a
        object.__setattr__(self, "coeffs", MappingProxyType(clean))
        object.__setattr__(self, "relation", relation)
        object.__setattr__(self, "bound", to_rational(bound))

    @classmethod
    def le(cls, coeffs, bound):
        return cls(coeffs, LE, bound)

    @classmethod
    def lt(cls, coeffs, bound):
        return cls(coeffs, LT, bound)

    @classmethod
    def eq(cls, coeffs, bound):
        return cls(coeffs, EQ, bound)

    @classmethod
    def ge(cls, coeffs, bound):
        return cls({v: -a for v, a in dict(coeffs).items()}, LE, -to_rational(bound))

    @classmethod
    def gt(cls, coeffs, bound):
        return cls({v: -a for v, a in dict(coeffs).items()}, LT, -to_rational(bound))

    @property
    def strict(self):
        return self.relation == LT

    def lhs(self, point):
        return sum((a * point[v] for v, a in self.coeffs.items()), Fraction(0))

    def holds(self, point):
        """Evaluate at ``point`` (a mapping variable -> rational), exactly."""
        value = self.lhs(point)
        if self.relation == LE:
            return value <= self.bound
        if self.relation == LT:
            return value < self.bound
        return value == self.bound

    def relaxed(self):
        """Same constraint with ``<`` weakened to ``<=``."""
        if self.relation != LT:
            return self
        return LinearConstraint(self.coeffs, LE, self.bound)

    def integer_row(self, index):
        """Scale to integers: ``(coeff list keyed by index, rhs)``.

        ``index`` maps variables to column positions; the scale factor is the
        positive lcm of all denominators, so the relation is preserved.
        """
        scale = lcm(self.bound.denominator, *(a.denominator for a in self.coeffs.values()))
        row = {index[v]: int(a * scale) for v, a in self.coeffs.items()}
        return row, int(self.bound * scale)

    def __hash__(self):
        return hash((tuple(sorted(self.coeffs.items(), key=repr)), self.relation, self.bound))

    def __eq__(self, other):
        if not isinstance(other, LinearConstraint):
            return NotImplemented
        return (
            dict(self.coeffs) == dict(other.coeffs)
            and self.relation == other.relation
            and self.bound == other.bound
        )

    def __repr__(self):
        terms = " + ".join(f"{a}*{v}" for v, a in self.coeffs.items()) or "0"
        return f"<{terms} {self.relation} {self.bound}>"


class ConstraintSystem:
    """An ordered set of variables and constraints over them.

    Immutable: ``add`` and ``extend`` return new systems sharing structure.
    """

    __slots__ = ("variables", "constraints", "_index")

    def __init__(self, variables, constraints=()):
        self.variables = tuple(variables)
        if len(set(self.variables)) != len(self.variables):
            raise ValueError("duplicate variable ids")
        self._index = {v: i for i, v in enumerate(self.variables)}
        self.constraints = tuple(constraints)
        for con in self.constraints:
            self._check(con)

    def _check(self, con):
        for v in con.coeffs:
            if v not in self._index:
                raise ValueError(f"constraint {con!r} uses undeclared variable {v!r}")

    @property
    def index(self):
        return self._index

    def add(self, *constraints):
        return self.extend(constraints)

    def extend(self, constraints):
        new = ConstraintSystem.__new__(ConstraintSystem)
        new.variables = self.variables
        new._index = self._index
        constraints = tuple(constraints)
        for con in constraints:
            self._check(con)
        new.constraints = self.constraints + constraints
        return new

    def holds(self, point):
        return all(con.holds(point) for con in self.constraints)

    def violated(self, point):
        return [con for con in self.constraints if not con.holds(point)]

    def __len__(self):
        return len(self.constraints)

    def __repr__(self):
        return f"ConstraintSystem({list(self.variables)!r}, {len(self.constraints)} constraints)"
