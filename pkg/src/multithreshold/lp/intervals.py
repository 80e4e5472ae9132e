"""Intervals and normalized interval sets over the extended rationals."""

from dataclasses import dataclass

from .rational import Infinity, format_ext, is_finite, to_ext


@dataclass(frozen=True)
class Interval:
    lo: object
    hi: object
    lo_closed: bool = True
    hi_closed: bool = True

    def __post_init__(self):
        lo, hi = to_ext(self.lo), to_ext(self.hi)
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)
        if isinstance(lo, Infinity) and lo.sign > 0 or isinstance(hi, Infinity) and hi.sign < 0:
            raise ValueError("interval endpoints point the wrong way")
        if not is_finite(lo) and self.lo_closed:
            object.__setattr__(self, "lo_closed", False)
        if not is_finite(hi) and self.hi_closed:
            object.__setattr__(self, "hi_closed", False)
        if hi < lo:
            raise ValueError(f"empty interval: lo={lo} > hi={hi}")
        if lo == hi and not (self.lo_closed and self.hi_closed):
            raise ValueError("a degenerate interval must be a closed point")

    @classmethod
    def open(cls, lo, hi):
        return cls(lo, hi, False, False)

    @classmethod
    def closed_open(cls, lo, hi):
        return cls(lo, hi, True, False)

    def __contains__(self, x):
        x = to_ext(x)
        if x < self.lo or (x == self.lo and not self.lo_closed):
            return False
        if x > self.hi or (x == self.hi and not self.hi_closed):
            return False
        return True

    def __str__(self):
        left = "[" if self.lo_closed else "("
        right = "]" if self.hi_closed else ")"
        return f"{left}{format_ext(self.lo)}, {format_ext(self.hi)}{right}"

    def to_json(self):
        return {
            "lo": format_ext(self.lo),
            "lo_closed": self.lo_closed,
            "hi": format_ext(self.hi),
            "hi_closed": self.hi_closed,
        }

    @classmethod
    def from_json(cls, obj):
        return cls(to_ext(obj["lo"]), to_ext(obj["hi"]), bool(obj["lo_closed"]), bool(obj["hi_closed"]))


def _touches(a, b):
    """Whether ``a`` (starting no later than ``b``) can merge with ``b``."""
    if a.hi > b.lo:
        return True
    if a.hi == b.lo:
        return a.hi_closed or b.lo_closed
    return False


def _start_key(iv):
    # closed starts sort before open ones at the same point
    return (iv.lo, not iv.lo_closed)


class IntervalSet:
    """A finite union of intervals kept sorted, disjoint and non-adjacent."""

    __slots__ = ("intervals",)

    def __init__(self, intervals=()):
        self.intervals = tuple(_normalize(intervals))

    @classmethod
    def empty(cls):
        return cls()

    def union(self, other):
        if isinstance(other, Interval):
            other = (other,)
        elif isinstance(other, IntervalSet):
            other = other.intervals
        return IntervalSet(self.intervals + tuple(other))

    __or__ = union

    def __contains__(self, x):
        return any(x in iv for iv in self.intervals)

    def __iter__(self):
        return iter(self.intervals)

    def __len__(self):
        return len(self.intervals)

    def __bool__(self):
        return bool(self.intervals)

    def __eq__(self, other):
        if isinstance(other, Interval):
            return self.intervals == (other,)
        if isinstance(other, IntervalSet):
            return self.intervals == other.intervals
        return NotImplemented

    def __hash__(self):
        return hash(self.intervals)

    def __str__(self):
        if not self.intervals:
            return "{}"
        return " U ".join(str(iv) for iv in self.intervals)

    def __repr__(self):
        return f"IntervalSet({str(self)})"

    def to_json(self):
        return [iv.to_json() for iv in self.intervals]

    @classmethod
    def from_json(cls, items):
        return cls(Interval.from_json(obj) for obj in items)


def _normalize(intervals):
    items = sorted(intervals, key=_start_key)
    out = []
    for iv in items:
        if out and _touches(out[-1], iv):
            cur = out[-1]
            if iv.hi > cur.hi:
                out[-1] = Interval(cur.lo, iv.hi, cur.lo_closed, iv.hi_closed)
            elif iv.hi == cur.hi and iv.hi_closed and not cur.hi_closed:
                out[-1] = Interval(cur.lo, cur.hi, cur.lo_closed, True)
        else:
            out.append(iv)
    return out


def interval_union(a, b):
    """Normalized union of two interval sets (or single intervals)."""
    if isinstance(a, Interval):
        a = IntervalSet((a,))
    return a.union(b)
