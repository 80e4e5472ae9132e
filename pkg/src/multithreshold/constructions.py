"""Explicit rank constructions for pK2 and 2K3.

Every function returns a checked ``Representation``; the constructor re-runs
the verifier, so a wrong formula fails loudly instead of emitting bad ranks.
"""

from fractions import Fraction

from .graphs import build_family, pK2, pK3
from .lp.rational import to_rational
from .representation import Representation, RepresentationError, ThresholdVector


class ConstructionError(RepresentationError):
    """A construction was asked for parameters outside its valid range."""


def pk2_two_threshold(p):
    """pK2 as a (-1, 1)-threshold graph: edge ``i`` gets ranks ``-2i`` and ``2i``."""
    if p < 1:
        raise ConstructionError("p must be at least 1")
    ranks = []
    for i in range(1, p + 1):
        ranks += [-2 * i, 2 * i]
    return Representation(build_family(pK2(p)), ThresholdVector((-1, 1)), ranks)


def pk2_epsilon(p, t):
    """The slack ``eps`` with ``t = (1 + 2 eps)(2p - 3)``."""
    return (to_rational(t) / (2 * p - 3) - 1) / 2


def pk2_c_t(p, t):
    """pK2 as a (-1, 1, t)-threshold graph for any ``t > 2p - 3``, ``p >= 2``.

    Edge ``i`` (0-based) gets ranks ``-(1+eps) i`` and ``(1+eps) i``: every
    edge has weight 0, and every non-edge weight has absolute value at least
    ``1 + eps`` and is at most ``(1 + eps)(2p - 3) < t``.
    """
    t = to_rational(t)
    if p < 2:
        raise ConstructionError("pk2_c_t needs p >= 2 (use pk2_two_threshold for p = 1)")
    if t <= 2 * p - 3:
        raise ConstructionError(f"pK2 with p={p} is only constructed for t > 2p-3 = {2 * p - 3}, got t={t}")
    step = 1 + pk2_epsilon(p, t)
    ranks = []
    for i in range(p):
        ranks += [-step * i, step * i]
    return Representation(build_family(pK2(p)), ThresholdVector((-1, 1, t)), ranks)


def two_k3_epsilon(t):
    return min(Fraction(1), (to_rational(t) - 1) / 2)


def two_k3_c_t(t):
    """2K3 as a (-1, 1, t)-threshold graph for every ``t > 1``.

    Triangle one has all ranks ``(1 - eps)/2`` (edge weight ``1 - eps`` in
    ``[-1, 1)``), triangle two all ranks ``t/2`` (edge weight ``t``).  Cross
    weights ``(1 - eps + t)/2`` fall in the gap ``[1, t)`` once
    ``0 < eps <= t - 1``; we take ``eps = min(1, (t - 1)/2)``.
    """
    t = to_rational(t)
    if t <= 1:
        raise ConstructionError(f"2K3 construction needs t > 1, got {t}")
    eps = two_k3_epsilon(t)
    low, high = (1 - eps) / 2, t / 2
    return Representation(build_family(pK3(2)), ThresholdVector((-1, 1, t)), [low] * 3 + [high] * 3)
