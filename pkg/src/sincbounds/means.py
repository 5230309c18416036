"""Bivariate means and the sharp inequalities between them.

Classical means (geometric, arithmetic, power, logarithmic,
Schwab-Borchardt) plus the one-parameter family

    M_p(a, b) = (1/(3p^2)) A_p^p G^{1-p} + (1 - 1/(3p^2)) G

which sandwiches the logarithmic mean between p = sqrt(15)/5 and p = 1.
The family equals G * cosh_bound(p, x) at x = (1/2) ln(a/b), which is how
it is evaluated here (stable at a ~ b, smooth at p = 0, even in p).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import cosh_bound
from .integrals import Enclosure

_SQRT15_5 = math.sqrt(15.0) / 5.0
_INV_SQRT5 = 1.0 / math.sqrt(5.0)


@dataclass(frozen=True)
class MeanPoint:
    """A pair of positive reals."""

    a: float
    b: float

    def __post_init__(self):
        for v in (self.a, self.b):
            if not (math.isfinite(v) and v > 0.0):
                raise ValueError(f"mean arguments must be finite and positive, got {v!r}")


def _pair(m) -> tuple[float, float]:
    if isinstance(m, MeanPoint):
        return m.a, m.b
    a, b = m
    mp = MeanPoint(float(a), float(b))
    return mp.a, mp.b


def _geo(a: float, b: float) -> float:
    ab = a * b
    if math.isfinite(ab) and ab > 0.0:
        return math.sqrt(ab)
    return math.sqrt(a) * math.sqrt(b)  # a*b overflowed or underflowed


def geometric_mean(m) -> float:
    a, b = _pair(m)
    return _geo(a, b)


def arithmetic_mean(m) -> float:
    a, b = _pair(m)
    return 0.5 * (a + b)


def power_mean(p: float, m) -> float:
    """((a^p + b^p)/2)^(1/p); the geometric mean at p = 0."""
    a, b = _pair(m)
    p = float(p)
    if p == 0.0:
        return _geo(a, b)
    if p == 1.0:
        return 0.5 * (a + b)
    if p < 0.0:
        return _geo(a, b) ** 2 / power_mean(-p, (a, b))  # reflection identity
    # scale by the larger argument: max(a,b) * ((r^p + 1)/2)^(1/p) with
    # r <= 1, so expm1 sees a nonpositive argument (no overflow, smooth p -> 0)
    hi, lo = (a, b) if a >= b else (b, a)
    s = 0.5 * math.expm1(p * math.log(lo / hi))
    return hi * math.exp(math.log1p(s) / p)


def half_log_ratio(m) -> float:
    """0.5 * ln(a/b), via log1p when the pair is nearly equal."""
    a, b = _pair(m)
    if a == b:
        return 0.0
    if 0.5 < a / b < 2.0:
        return 0.5 * math.log1p((a - b) / b)
    return 0.5 * (math.log(a) - math.log(b))


def log_mean(m) -> float:
    """(a - b)/(ln a - ln b), a at a = b; series branch when a ~ b."""
    a, b = _pair(m)
    if a == b:
        return a
    r = (a - b) / b
    if abs(r) < 1e-4:
        # r/ln(1+r) = 1 + r/2 - r^2/12 + r^3/24 - O(r^4); next term ~19r^4/720
        return b * (1.0 + r * (0.5 + r * (-1.0 / 12.0 + r / 24.0)))
    if 0.5 < a / b < 2.0:
        return (a - b) / math.log1p(r)
    return (a - b) / (math.log(a) - math.log(b))


def sb_mean(m) -> float:
    """Schwab-Borchardt mean: sqrt(b^2-a^2)/arccos(a/b) for a < b, a at a = b,
    sqrt(a^2-b^2)/arccosh(a/b) for a > b.  Not symmetric in (a, b); unlike
    the other means, a = 0 is admitted (value 2b/pi).

    Near a = b both branches share the series b(1 - u/3 - u^2/45 - ...) in
    u = 1 - a/b, which is used below the crossover.
    """
    if isinstance(m, MeanPoint):
        a, b = m.a, m.b
    else:
        a, b = float(m[0]), float(m[1])
        if not (math.isfinite(a) and a >= 0.0 and math.isfinite(b) and b > 0.0):
            raise ValueError(f"need a >= 0 and b > 0, got ({a!r}, {b!r})")
    u = (b - a) / b
    if abs(u) < 1e-4:
        return b * (1.0 + u * (-1.0 / 3.0 + u * (-1.0 / 45.0 + u * (-1.0 / 189.0 - 23.0 * u / 14175.0))))
    if u > 0.0:
        # arccos(1-u) = 2 asin(sqrt(u/2)); libm acos itself drifts ~1e-13 near 1
        return b * math.sqrt(u * (2.0 - u)) / (2.0 * math.asin(math.sqrt(0.5 * u)))
    e = -u
    # arccosh(1+e) = log1p(e + sqrt(e(2+e))), exact for small e
    return b * math.sqrt(e * (2.0 + e)) / math.log1p(e + math.sqrt(e * (2.0 + e)))


def sb_lower_bound(m) -> float:
    """Closed-form lower bound for sb_mean, tight at a = b.

    (8 sqrt2/27) ((2a-b) sqrt((a+b)/2) + b^{3/2})^{1/2} b^{1/4} + (11/27) b.
    The inner term is b^{3/2}(1 + cos(3x/2)) at x = arccos(a/b) (cosh for
    a > b), hence nonnegative; the signed factor (2a - b) is what keeps the
    half-angle reduction valid once b > 2a.  At b = 2a the bound collapses
    to (11 + 8 sqrt2)/27 * b.
    """
    a, b = _pair(m)
    inner = (2.0 * a - b) * math.sqrt(0.5 * (a + b)) + b * math.sqrt(b)
    return (8.0 * math.sqrt(2.0) / 27.0) * math.sqrt(inner) * b ** 0.25 + 11.0 * b / 27.0


def mean_family(p: float, m) -> float:
    """(1/(3p^2)) A_p^p G^(1-p) + (1 - 1/(3p^2)) G; at p = 0 the limit
    G (1 + (ln b - ln a)^2 / 24).

    Evaluated as G * cosh_bound(p, half_log_ratio): even in p and increasing
    on p >= 0.
    """
    a, b = _pair(m)
    g = _geo(a, b)
    x = abs(half_log_ratio((a, b)))
    return g * cosh_bound(abs(float(p)), x)


def log_mean_sandwich(m) -> Enclosure:
    """[mean_family(sqrt(15)/5), mean_family(1)], widened by a 16-ulp
    certification slack so it contains log_mean under double rounding.

    Degenerate pairs give the point enclosure [a, a].
    """
    a, b = _pair(m)
    if a == b:
        return Enclosure(a, a)
    lo = mean_family(_SQRT15_5, (a, b))
    hi = mean_family(1.0, (a, b))
    return Enclosure(lo - 16.0 * math.ulp(lo), hi + 16.0 * math.ulp(hi))


@dataclass(frozen=True)
class ComparisonCoefficients:
    """Odd-series coefficients showing the additive family lower bound for
    the logarithmic mean dominates the power-form one.

    coeff(1) = coeff(2) = 0, coeff(3) = 64/45, positive afterwards.
    """

    family_param: float = _SQRT15_5
    power_param: float = _INV_SQRT5

    def coeff(self, n: int) -> float:
        if n < 1:
            raise ValueError("n must be >= 1")
        p, q = self.family_param, self.power_param
        t = 2.0 * q / p
        return (
            (3.0 * p * q - 1.0) * (1.0 + t) ** (2 * n - 1)
            + (3.0 * p * q + 1.0) * (t - 1.0) ** (2 * n - 1)
            - 2.0 * (6.0 * q * q - 1.0)
        )


def comparison_coeff(n: int) -> float:
    return ComparisonCoefficients().coeff(n)


def _comparison_series_coeffs(n_max: int = 16) -> list[float]:
    # Even-series coefficients of cosh_bound(sqrt(15)/5, x) - cosh(x/sqrt5)^{5/3}
    # for x^{2n}, n = 3..n_max.  The x^0..x^4 parts cancel identically.
    q2 = 1.0 / 5.0
    cosh_coeffs = [q2 ** k / math.factorial(2 * k) for k in range(n_max + 1)]
    alpha = 5.0 / 3.0
    power = [1.0] + [0.0] * n_max
    for k in range(1, n_max + 1):  # J.C.P. Miller recurrence for C^alpha
        acc = 0.0
        for j in range(1, k + 1):
            acc += ((alpha + 1.0) * j - k) * cosh_coeffs[j] * power[k - j]
        power[k] = acc / k
    p2 = 3.0 / 5.0
    out = []
    for n in range(3, n_max + 1):
        out.append((5.0 / 9.0) * p2 ** n / math.factorial(2 * n) - power[n])
    return out


_COMPARISON_COEFFS = _comparison_series_coeffs()


def lower_bound_comparison(x: float) -> float:
    """D(x) = cosh_bound(sqrt(15)/5, x) - cosh(x/sqrt5)^{5/3}, nonnegative
    for x >= 0.

    Vanishes to sixth order at 0 (leading term x^6/40500), so small x goes
    through the cancelled series; direct evaluation elsewhere.
    """
    x = float(x)
    if x < 0.0:
        raise ValueError(f"x must be >= 0, got {x!r}")
    if x <= 1.0:
        x2 = x * x
        xp = x2 ** 3
        total = 0.0
        for c in _COMPARISON_COEFFS:
            total += c * xp
            xp *= x2
        return total
    return cosh_bound(_SQRT15_5, x) - math.cosh(x * _INV_SQRT5) ** (5.0 / 3.0)


def random_pairs(n: int, seed: int, ratio_span=(1e-6, 1e6), scale_span=(1e-3, 1e3)) -> list[MeanPoint]:
    """Seeded pairs with log-uniform ratios; exercises near-equal and
    extreme pairs alike."""
    rng = np.random.default_rng(seed)
    lo_r, hi_r = math.log10(ratio_span[0]), math.log10(ratio_span[1])
    lo_s, hi_s = math.log10(scale_span[0]), math.log10(scale_span[1])
    ratios = 10.0 ** rng.uniform(lo_r, hi_r, n)
    scales = 10.0 ** rng.uniform(lo_s, hi_s, n)
    return [MeanPoint(float(r * s), float(s)) for r, s in zip(ratios, scales)]
