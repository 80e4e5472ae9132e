"""Exact scalars: rationals, the two infinities, and their text form."""

from fractions import Fraction
from functools import total_ordering
from numbers import Rational


def to_rational(x):
    """Coerce ``x`` to a Fraction, refusing anything inexact.

    Accepts ints, Fractions, other ``numbers.Rational`` values and strings
    like ``"7/2"`` or ``"-3"``.  Floats and decimal strings raise TypeError /
    ValueError so no rounding can slip into the exact machinery.
    """
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, Fraction):
        return x
    if isinstance(x, Rational):
        return Fraction(x.numerator, x.denominator)
    if isinstance(x, str):
        return parse_rational(x)
    raise TypeError(f"expected an exact rational, got {type(x).__name__}: {x!r}")


def parse_rational(text):
    s = text.strip()
    if not s:
        raise ValueError("empty rational")
    if any(ch in s for ch in ".eE") or s.lower() in ("nan", "inf", "-inf", "+inf"):
        raise ValueError(f"not an exact rational literal: {text!r}")
    num, sep, den = s.partition("/")
    try:
        n = int(num)
        d = int(den) if sep else 1
    except ValueError:
        raise ValueError(f"not an exact rational literal: {text!r}") from None
    if d == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(n, d)


@total_ordering
class Infinity:
    """One of the two points at infinity; compares with any rational."""

    __slots__ = ("sign",)

    def __init__(self, sign):
        self.sign = 1 if sign > 0 else -1

    def __eq__(self, other):
        return isinstance(other, Infinity) and other.sign == self.sign

    def __hash__(self):
        return hash(("inf", self.sign))

    def __lt__(self, other):
        if isinstance(other, Infinity):
            return self.sign < other.sign
        if isinstance(other, Rational):
            return self.sign < 0
        return NotImplemented

    def __neg__(self):
        return Infinity(-self.sign)

    def __repr__(self):
        return "INF" if self.sign > 0 else "NEG_INF"

    def __str__(self):
        return "inf" if self.sign > 0 else "-inf"


INF = Infinity(1)
NEG_INF = Infinity(-1)


def is_finite(x):
    return not isinstance(x, Infinity)


def to_ext(x):
    """Coerce to an extended rational (Fraction or one of the infinities)."""
    if isinstance(x, Infinity):
        return x
    if isinstance(x, str) and x.strip().lower() in ("inf", "+inf", "-inf"):
        return NEG_INF if x.strip().startswith("-") else INF
    return to_rational(x)


def format_ext(x):
    """``"7/2"``, ``"3"``, ``"inf"`` or ``"-inf"``."""
    if isinstance(x, Infinity):
        return str(x)
    return str(to_rational(x))
