"""Parametric cosine/cosh bound families for sin(x)/x and sinh(x)/x.

The two families are

    trig:       (1/(3p^2)) cos(px)  + 1 - 1/(3p^2),   p in [0, 1]
    hyperbolic: (1/(3p^2)) cosh(px) + 1 - 1/(3p^2),   p >= 0

with the quadratic limits 1 -+ x^2/6 at p = 0.  The gap functions
sinc - bound and sinhc - bound vanish to fourth order at the origin, so
this module evaluates them through their even power series near 0 (with
a certified truncation bound) and directly elsewhere.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

_EPS = math.ulp(1.0)

# Series/direct switch for the gap functions.  Below this |x| the direct
# subtraction loses ~4 digits (gap = O(x^4) against operands of size 1).
SERIES_SWITCH = 0.5

_SERIES_MAX_TERMS = 80


class Family(enum.Enum):
    TRIG = "trig"
    HYP = "hyp"


@dataclass(frozen=True)
class BoundParam:
    """Validated family parameter.  value = 0 selects the quadratic limit."""

    value: float
    family: Family

    def __post_init__(self):
        v = self.value
        if not math.isfinite(v) or v < 0.0:
            raise ValueError(f"parameter must be finite and >= 0, got {v!r}")
        if self.family is Family.TRIG and v > 1.0:
            raise ValueError(f"trig family parameter must lie in [0, 1], got {v!r}")

    @classmethod
    def trig(cls, value: float) -> "BoundParam":
        return cls(float(value), Family.TRIG)

    @classmethod
    def hyp(cls, value: float) -> "BoundParam":
        return cls(float(value), Family.HYP)


def _param(p, family: Family) -> float:
    """Accept a BoundParam of the right family or a bare number."""
    if isinstance(p, BoundParam):
        if p.family is not family:
            raise ValueError(f"expected a {family.value} parameter, got {p.family.value}")
        return p.value
    return BoundParam(float(p), family).value


class GapMethod(enum.Enum):
    SERIES = "series"
    DIRECT = "direct"


@dataclass(frozen=True)
class GapEvaluation:
    """One gap evaluation; for the series path |true - value| <= tail_bound."""

    x: float
    value: float
    method: GapMethod
    tail_bound: float = 0.0


def sinc(x):
    """sin(x)/x with the removable singularity filled in (1 at x = 0)."""
    if np.ndim(x) == 0:
        x = float(x)
        return math.sin(x) / x if x != 0.0 else 1.0
    x = np.asarray(x, dtype=float)
    out = np.ones_like(x)
    nz = x != 0.0
    out[nz] = np.sin(x[nz]) / x[nz]
    return out


def sinhc(x):
    """sinh(x)/x, 1 at x = 0.  Overflow is signalled, not silently inf."""
    if np.ndim(x) == 0:
        x = float(x)
        return math.sinh(x) / x if x != 0.0 else 1.0
    x = np.asarray(x, dtype=float)
    out = np.ones_like(x)
    nz = x != 0.0
    with np.errstate(over="raise"):
        out[nz] = np.sinh(x[nz]) / x[nz]
    return out


# below this the family is indistinguishable from its quadratic limit in
# doubles (difference <= p^2 x^4 / 72) and p*p starts to underflow
_LIMIT_FAMILY_CUTOFF = 1e-8


def cos_bound(p, x):
    """Trig bound family (1/(3p^2)) cos(px) + 1 - 1/(3p^2); 1 - x^2/6 at p = 0.

    Written as 1 - (2/(3p^2)) sin^2(px/2): no cancellation for small px and
    the p -> 0 limit is reached smoothly.
    """
    p = _param(p, Family.TRIG)
    if p <= _LIMIT_FAMILY_CUTOFF:
        return 1.0 - x * x / 6.0
    w = 2.0 / (3.0 * p * p)
    if np.ndim(x) == 0:
        s = math.sin(0.5 * p * float(x))
        return 1.0 - w * s * s
    s = np.sin(0.5 * p * np.asarray(x, dtype=float))
    return 1.0 - w * s * s


def cosh_bound(p, x):
    """Hyperbolic bound family (1/(3p^2)) cosh(px) + 1 - 1/(3p^2); 1 + x^2/6 at p = 0."""
    p = _param(p, Family.HYP)
    if p <= _LIMIT_FAMILY_CUTOFF:
        return 1.0 + x * x / 6.0
    w = 2.0 / (3.0 * p * p)
    if np.ndim(x) == 0:
        s = math.sinh(0.5 * p * float(x))
        return 1.0 + w * s * s
    with np.errstate(over="raise"):
        s = np.sinh(0.5 * p * np.asarray(x, dtype=float))
    return 1.0 + w * s * s


def gap_series_coeff(n: int, c: float) -> float:
    """Coefficient 3 - (2n+1) c^(n-1) of the gap series, c = p^2 (n >= 1)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if c < 0.0:
        raise ValueError("c must be >= 0")
    return 3.0 - (2 * n + 1) * c ** (n - 1)


@dataclass(frozen=True)
class CoefficientSeq:
    """Gap-series coefficients for fixed c in (0, 3/5].

    On that range every term is nonnegative and for n >= 3 the consecutive
    ratio lies in (1, 11/5].
    """

    c: float

    def __post_init__(self):
        # small slack: squaring sqrt(15)/5 in doubles lands just above 3/5
        if not 0.0 < self.c <= 0.6 * (1.0 + 1e-12):
            raise ValueError(f"c must lie in (0, 3/5], got {self.c!r}")

    def term(self, n: int) -> float:
        return gap_series_coeff(n, self.c)

    def ratio_excess(self, n: int) -> float:
        """term(n+1)/term(n) - 1 for n >= 3, computed without cancellation."""
        if n < 3:
            raise ValueError("ratio bracket only claimed for n >= 3")
        num = self.c ** (n - 1) * ((2 * n + 1) - (2 * n + 3) * self.c)
        return num / self.term(n)

    def __iter__(self):
        n = 1
        while True:
            yield self.term(n)
            n += 1


def _gap_series(p: float, x: float, hyperbolic: bool):
    """Even power series of the gap at |x| <= SERIES_SWITCH.

    Returns (value, tail_bound).  tail_bound covers both the truncated tail
    (geometric majorant, consecutive majorants shrink by far more than 1/2
    here) and the accumulated rounding of coefficients and summation.
    """
    c = p * p
    x2 = x * x
    m = x2 * x2 / 360.0  # x^{2n} / (3 (2n+1)!) at n = 2
    cp = c               # c^{n-1} at n = 2
    total = 0.0
    sign = 1.0
    round_acc = 0.0
    n = 2
    while n <= _SERIES_MAX_TERMS:
        majorant = m * (3.0 + (2 * n + 1) * cp)  # >= |a_n(c)| x^{2n}/(3(2n+1)!)
        if n >= 6 and majorant < 1e-20 * max(1.0, abs(total)):
            tail = 2.0 * majorant + 4.0 * _EPS * round_acc
            return total, tail
        term = (3.0 - (2 * n + 1) * cp) * m
        total += term if hyperbolic else sign * term
        round_acc += m * (3.0 + n * (2 * n + 1) * cp)
        sign = -sign
        m *= x2 / ((2 * n + 2) * (2 * n + 3))
        cp *= c
        n += 1
    raise RuntimeError("gap series did not converge (x outside the series range?)")


def sinc_gap(p, x) -> GapEvaluation:
    """Gap sinc(x) - cos_bound(p, x), series path for |x| <= SERIES_SWITCH.

    Even in x; evaluated at |x|.
    """
    p = _param(p, Family.TRIG)
    x = float(x)
    ax = abs(x)
    if ax <= SERIES_SWITCH:
        value, tail = _gap_series(p, ax, hyperbolic=False)
        return GapEvaluation(x, value, GapMethod.SERIES, tail)
    return GapEvaluation(x, sinc(ax) - cos_bound(p, ax), GapMethod.DIRECT)


def sinhc_gap(p, x) -> GapEvaluation:
    """Gap sinhc(x) - cosh_bound(p, x), series path for |x| <= SERIES_SWITCH."""
    p = _param(p, Family.HYP)
    x = float(x)
    ax = abs(x)
    if ax <= SERIES_SWITCH:
        value, tail = _gap_series(p, ax, hyperbolic=True)
        return GapEvaluation(x, value, GapMethod.SERIES, tail)
    return GapEvaluation(x, sinhc(ax) - cosh_bound(p, ax), GapMethod.DIRECT)


def quartic_gap_coeff(p) -> float:
    """Limit of gap(x)/x^4 at 0 for either family: (3 - 5 p^2)/360.

    Vanishes at p = sqrt(15)/5, which is what makes that parameter the
    sharp edge on both sides.
    """
    if isinstance(p, BoundParam):
        p = p.value
    p = float(p)
    if not math.isfinite(p) or p < 0.0:
        raise ValueError(f"parameter must be finite and >= 0, got {p!r}")
    return (3.0 - 5.0 * p * p) / 360.0


def cos_power_bound(p: float, x):
    """Power-form trig bound (cos px)^(1/(3p^2)) for p in (0, 1], cos(px) > 0."""
    p = float(p)
    if not 0.0 < p <= 1.0:
        raise ValueError(f"p must lie in (0, 1], got {p!r}")
    if p <= _LIMIT_FAMILY_CUTOFF:  # p -> 0 limit is exp(-x^2/6)
        return np.exp(-np.asarray(x, dtype=float) ** 2 / 6.0) if np.ndim(x) else math.exp(-x * x / 6.0)
    e = 1.0 / (3.0 * p * p)
    if np.ndim(x) == 0:
        cx = math.cos(p * float(x))
        if cx <= 0.0:
            raise ValueError(f"cos(p*x) must be positive, got {cx!r} at x={x!r}")
        return cx ** e
    cx = np.cos(p * np.asarray(x, dtype=float))
    if np.any(cx <= 0.0):
        raise ValueError("cos(p*x) must be positive on the whole grid")
    return cx ** e


def cosh_power_bound(p: float, x):
    """Power-form hyperbolic bound (cosh px)^(1/(3p^2)) for p > 0."""
    p = float(p)
    if p <= 0.0:
        raise ValueError(f"p must be positive, got {p!r}")
    if p <= _LIMIT_FAMILY_CUTOFF:  # p -> 0 limit is exp(x^2/6)
        return np.exp(np.asarray(x, dtype=float) ** 2 / 6.0) if np.ndim(x) else math.exp(x * x / 6.0)
    e = 1.0 / (3.0 * p * p)
    if np.ndim(x) == 0:
        return math.cosh(p * float(x)) ** e
    with np.errstate(over="raise"):
        return np.cosh(p * np.asarray(x, dtype=float)) ** e


def sinhc_gap_scaled(p, x):
    """exp(-px) * (sinhc(x) - cosh_bound(p, x)), stable for arbitrarily large x.

    Expanded so no term overflows until (1-p) x does:

        e^{(1-p)x} (1 - e^{-2x})/(2x) - (1 + e^{-2px})/(6p^2) - (1 - 1/(3p^2)) e^{-px}

    Limits at x -> inf: -1/(6p^2) for p > 1, -1/6 at p = 1, +inf for 0 < p < 1.
    Returns +inf instead of overflowing when the first term exceeds double range.
    """
    p = _param(p, Family.HYP)
    if p <= _LIMIT_FAMILY_CUTOFF:
        raise ValueError("scaled gap needs p well above 0")
    w = 1.0 / (6.0 * p * p)

    def _scalar(xv: float) -> float:
        if xv <= 0.0:
            raise ValueError("x must be positive")
        t = (1.0 - p) * xv
        if t > 700.0:
            return math.inf
        grow = math.exp(t) * -math.expm1(-2.0 * xv) / (2.0 * xv)
        return grow - w * (1.0 + math.exp(-2.0 * p * xv)) - (1.0 - 2.0 * w) * math.exp(-p * xv)

    if np.ndim(x) == 0:
        return _scalar(float(x))
    x = np.asarray(x, dtype=float)
    if np.any(x <= 0.0):
        raise ValueError("x must be positive")
    t = (1.0 - p) * x
    out = np.full_like(x, np.inf)
    ok = t <= 700.0
    xo = x[ok]
    grow = np.exp(t[ok]) * -np.expm1(-2.0 * xo) / (2.0 * xo)
    out[ok] = grow - w * (1.0 + np.exp(-2.0 * p * xo)) - (1.0 - 2.0 * w) * np.exp(-p * xo)
    return out
