"""Sharp parameter thresholds and the best quartic correction constants.

The trig family bounds sinc from below exactly for parameters up to a
threshold p* ~ 0.77086 (the unique root of gap(pi/2) = 0) and from above
exactly from sqrt(15)/5 ~ 0.77460 on (the root of the quartic gap
coefficient).  Adding c * x^4 to the family tightens it into a two-sided
sandwich whose best constants are computed here.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from . import core as _core
from .core import BoundParam, cos_bound, quartic_gap_coeff

_HALF_PI = math.pi / 2.0


class SharpEdge(enum.Enum):
    SINC_LOWER = "sinc_lower"    # largest p with cos_bound(p,.) < sinc on (0, pi/2)
    SINC_UPPER = "sinc_upper"    # smallest q with sinc < cos_bound(q,.); also the
                                 # largest p with cosh_bound(p,.) < sinhc on (0, inf)
    SINHC_UPPER = "sinhc_upper"  # smallest q with sinhc < cosh_bound(q,.) on (0, inf)


@dataclass(frozen=True)
class SharpConstant:
    kind: SharpEdge
    value: float
    certified_radius: float


def sinc_gap_at_half_pi(p: float) -> float:
    """sinc(pi/2) - cos_bound(p, pi/2) in closed form, stable down to p = 0.

    Strictly decreasing in p; positive at p = 1/2, negative at p = 1.
    """
    p = float(p)
    if p <= _core._LIMIT_FAMILY_CUTOFF:
        return 2.0 / math.pi - 1.0 + math.pi * math.pi / 24.0
    s = math.sin(p * math.pi / 4.0)
    return 2.0 / math.pi - 1.0 + (2.0 / (3.0 * p * p)) * s * s


def _gap_half_pi_dp(p: float) -> float:
    # d/dp of the gap at pi/2: -(2 - 2 cos(p pi/2) - (p pi/2) sin(p pi/2)) / (3 p^3)
    u = p * _HALF_PI
    return -(2.0 - 2.0 * math.cos(u) - u * math.sin(u)) / (3.0 * p ** 3)


def solve_sinc_lower_edge(tolerance: float = 1e-12) -> SharpConstant:
    """Root of gap(pi/2) = 0 on [1/2, 1] by bisection, plus one Newton polish.

    The returned constant carries a sign certificate: the gap is positive at
    value - radius and negative at value + radius, as evaluated in doubles.
    """
    if not tolerance >= 1e-15:
        raise ValueError("tolerance must be >= 1e-15")
    lo, hi = 0.5, 1.0
    flo = sinc_gap_at_half_pi(lo)
    fhi = sinc_gap_at_half_pi(hi)
    if not (flo > 0.0 > fhi):  # guaranteed bracket; checked anyway
        raise RuntimeError("lost the root bracket on [1/2, 1]")
    half = min(tolerance, 1e-12)
    while (hi - lo) / 2.0 > half:
        mid = 0.5 * (lo + hi)
        if sinc_gap_at_half_pi(mid) > 0.0:
            lo = mid
        else:
            hi = mid
    mid = 0.5 * (lo + hi)
    polished = mid - sinc_gap_at_half_pi(mid) / _gap_half_pi_dp(mid)
    if lo < polished < hi:
        mid = polished
    # certificate at the requested radius; fall back to the raw bracket if
    # rounding spoils a sign this close to the root
    r = tolerance
    if sinc_gap_at_half_pi(mid - r) > 0.0 > sinc_gap_at_half_pi(mid + r):
        return SharpConstant(SharpEdge.SINC_LOWER, mid, r)
    value = 0.5 * (lo + hi)
    return SharpConstant(SharpEdge.SINC_LOWER, value, (hi - lo) / 2.0)


def sinc_upper_edge() -> SharpConstant:
    """sqrt(15)/5: root of the quartic gap coefficient, exact to rounding."""
    value = math.sqrt(15.0) / 5.0
    return SharpConstant(SharpEdge.SINC_UPPER, value, math.ulp(value))


def sinhc_upper_edge() -> SharpConstant:
    """1: smallest parameter bounding sinhc from above for all x > 0."""
    return SharpConstant(SharpEdge.SINHC_UPPER, 1.0, 0.0)


class Side(enum.Enum):
    LOWER = "lower"
    UPPER = "upper"


@dataclass(frozen=True)
class QuarticBound:
    """Best x^4 correction constants for one trig family member.

    cos_bound(p, x) + c_lo x^4  <  sinc(x)  <  cos_bound(p, x) + c_hi x^4
    on (0, pi/2), for p^2 in (0, 3/5] (p = 0 means the quadratic limit).
    """

    p: float
    c_lo: float
    c_hi: float


def quartic_constants(p) -> QuarticBound:
    """c_lo = (pi/2)^-4 * gap(pi/2), c_hi = (3 - 5 p^2)/360."""
    if isinstance(p, BoundParam):
        p = p.value
    p = float(p)
    if not (math.isfinite(p) and 0.0 <= p and p * p <= 0.6 * (1.0 + 1e-12)):
        raise ValueError(f"parameter outside the certified range [0, sqrt(3/5)]: {p!r}")
    c_lo = _HALF_PI ** -4 * sinc_gap_at_half_pi(p)
    return QuarticBound(p, c_lo, quartic_gap_coeff(p))


def quartic_bound_eval(q: QuarticBound, x, side: Side):
    """Evaluate the chosen side of the quartic-corrected bound at x."""
    c = q.c_lo if side is Side.LOWER else q.c_hi
    return cos_bound(q.p, x) + c * x ** 4
