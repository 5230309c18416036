import math
from fractions import Fraction

import mpmath as mp
import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from sincbounds.core import sinhc
from sincbounds.means import (
    ComparisonCoefficients,
    MeanPoint,
    _COMPARISON_COEFFS,
    arithmetic_mean,
    comparison_coeff,
    geometric_mean,
    half_log_ratio,
    log_mean,
    log_mean_sandwich,
    lower_bound_comparison,
    mean_family,
    power_mean,
    random_pairs,
    sb_lower_bound,
    sb_mean,
)

UPPER_EDGE = math.sqrt(15.0) / 5.0

pairs_strategy = st.tuples(
    st.floats(1e-3, 1e3), st.floats(-6.0, 6.0)
).map(lambda t: MeanPoint(t[0] * 10.0 ** t[1], t[0]))


# ------------------------------------------------------------ classical means

def test_mean_point_validation():
    with pytest.raises(ValueError):
        MeanPoint(0.0, 1.0)
    with pytest.raises(ValueError):
        MeanPoint(1.0, -2.0)
    with pytest.raises(ValueError):
        MeanPoint(math.inf, 1.0)


def test_power_mean_special_orders():
    m = MeanPoint(2.0, 8.0)
    assert power_mean(0.0, m) == geometric_mean(m) == 4.0
    assert power_mean(1.0, m) == arithmetic_mean(m) == 5.0
    assert power_mean(-1.0, m) == pytest.approx(3.2, rel=1e-15)  # harmonic


@given(m=pairs_strategy, p=st.floats(-2.0, 3.0))
def test_means_agree_on_equal_pair(m, p):
    x = m.a
    eq = MeanPoint(x, x)
    for value in (geometric_mean(eq), arithmetic_mean(eq), power_mean(p, eq),
                  log_mean(eq), sb_mean(eq), mean_family(p, eq)):
        assert value == pytest.approx(x, rel=1e-12)


def test_log_mean_values():
    assert log_mean(MeanPoint(math.e, math.e)) == math.e
    got = log_mean(MeanPoint(1.0, math.e ** 2))
    assert got == pytest.approx((math.e ** 2 - 1.0) / 2.0, rel=1e-14)


def test_log_mean_series_crossover():
    # series and log1p branches agree near the 1e-4 switch
    for b in (1.0, 37.5):
        for r in (9.99e-5, 1.001e-4, -9.99e-5, -1.001e-4):
            a = b * (1.0 + r)
            direct = (a - b) / math.log1p((a - b) / b)
            assert log_mean(MeanPoint(a, b)) == pytest.approx(direct, rel=1e-14)


@given(m=pairs_strategy)
def test_classical_mean_ordering(m):
    if abs(m.a / m.b - 1.0) < 1e-6:
        return  # true gaps ~ (ln ratio)^2/24 fall below double resolution
    g, l, a = geometric_mean(m), log_mean(m), arithmetic_mean(m)
    assert g < l < a


# ------------------------------------------------------------------- SB mean

def test_sb_mean_branches():
    assert sb_mean(MeanPoint(3.0, 3.0)) == 3.0
    assert sb_mean((0.0, 2.0)) == pytest.approx(4.0 / math.pi, rel=1e-14)
    assert sb_mean(MeanPoint(5.0, 3.0)) == pytest.approx(4.0 / math.acosh(5.0 / 3.0), rel=1e-14)
    assert sb_mean(MeanPoint(1.0, 2.0)) == pytest.approx(math.sqrt(3.0) / math.acos(0.5), rel=1e-14)


def test_sb_mean_not_symmetric():
    assert sb_mean(MeanPoint(1.0, 2.0)) != pytest.approx(sb_mean(MeanPoint(2.0, 1.0)), rel=1e-3)


def test_sb_mean_series_crossover():
    # both sides of the series switch against a 40-digit oracle
    mp.mp.dps = 40
    for b in (1.0, 3.0):
        for u in (9.9e-5, 1.01e-4):
            for sign in (1.0, -1.0):
                a = b * (1.0 - sign * u)
                am, bm = mp.mpf(a), mp.mpf(b)
                if a < b:
                    truth = mp.sqrt(bm ** 2 - am ** 2) / mp.acos(am / bm)
                else:
                    truth = mp.sqrt(am ** 2 - bm ** 2) / mp.acosh(am / bm)
                assert sb_mean(MeanPoint(a, b)) == pytest.approx(float(truth), rel=1e-14)


def test_sb_lower_bound_at_double_point():
    for a in (0.5, 1.0, 7.0):
        b = 2.0 * a
        assert sb_lower_bound(MeanPoint(a, b)) == pytest.approx(
            (11.0 + 8.0 * math.sqrt(2.0)) / 27.0 * b, rel=1e-14)


def test_sb_lower_bound_is_chain_member_composed():
    # circular branch: the bound equals b * cos-family-member(arccos(a/b)) at p = 3/4;
    # hyperbolic branch: the cosh analogue.  This pins the closed form.
    from sincbounds.core import cos_bound, cosh_bound
    for a in (0.05, 0.3, 0.49, 0.51, 0.9):
        x = math.acos(a)
        assert sb_lower_bound(MeanPoint(a, 1.0)) == pytest.approx(cos_bound(0.75, x), rel=1e-13)
    for a in (1.5, 3.0, 20.0):
        x = math.acosh(a)
        assert sb_lower_bound(MeanPoint(a, 1.0)) == pytest.approx(cosh_bound(0.75, x), rel=1e-13)


def test_sb_lower_bound_below_mean_on_pairs():
    for m in random_pairs(2000, seed=7):
        assert sb_lower_bound(m) <= sb_mean(m)


@given(m=pairs_strategy, lam=st.floats(1e-3, 1e3))
def test_sb_homogeneous(m, lam):
    scaled = MeanPoint(lam * m.a, lam * m.b)
    assert sb_mean(scaled) == pytest.approx(lam * sb_mean(m), rel=1e-11)
    assert sb_lower_bound(scaled) == pytest.approx(lam * sb_lower_bound(m), rel=1e-11)


@given(m=pairs_strategy)
def test_symmetric_means(m):
    swapped = MeanPoint(m.b, m.a)
    assert geometric_mean(swapped) == pytest.approx(geometric_mean(m), rel=1e-13)
    assert log_mean(swapped) == pytest.approx(log_mean(m), rel=1e-12)
    assert power_mean(0.7, swapped) == pytest.approx(power_mean(0.7, m), rel=1e-12)
    assert mean_family(0.7, swapped) == pytest.approx(mean_family(0.7, m), rel=1e-12)


# --------------------------------------------------------------- mean family

def test_mean_family_closed_forms():
    m = MeanPoint(2.0, 5.0)
    g, a = geometric_mean(m), arithmetic_mean(m)
    assert mean_family(1.0, m) == pytest.approx(a / 3.0 + 2.0 * g / 3.0, rel=1e-14)
    p = UPPER_EDGE
    literal = (5.0 / 9.0) * power_mean(p, m) ** p * g ** (1.0 - p) + (4.0 / 9.0) * g
    assert mean_family(p, m) == pytest.approx(literal, rel=1e-13)
    limit = g * (1.0 + (math.log(5.0) - math.log(2.0)) ** 2 / 24.0)
    assert mean_family(0.0, m) == pytest.approx(limit, rel=1e-14)


@given(m=pairs_strategy, p=st.floats(0.01, 3.0))
def test_mean_family_matches_literal_formula(m, p):
    g = geometric_mean(m)
    literal = (1.0 / (3 * p * p)) * power_mean(p, m) ** p * g ** (1.0 - p) \
        + (1.0 - 1.0 / (3 * p * p)) * g
    assert mean_family(p, m) == pytest.approx(literal, rel=1e-11)


def test_mean_family_even_in_p():
    # A_p^p G^{1-p} is invariant under p -> -p, so the family is even;
    # "increasing" can only hold on [0, inf)
    m = MeanPoint(2.0, 1.0)
    for p in (0.5, 1.0, 2.0):
        assert mean_family(-p, m) == pytest.approx(mean_family(p, m), rel=1e-15)
    values = [mean_family(p, m) for p in np.linspace(0.0, 3.0, 13)]
    assert all(b > a for a, b in zip(values, values[1:]))
    values_neg = [mean_family(p, m) for p in np.linspace(-2.0, 0.0, 9)]
    assert all(b < a for a, b in zip(values_neg, values_neg[1:]))


def test_mean_family_increasing_on_pairs():
    ps = np.linspace(0.0, 3.0, 21)
    for m in random_pairs(300, seed=11):
        vals = [mean_family(float(p), m) for p in ps]
        assert all(b > a for a, b in zip(vals, vals[1:]))


# ----------------------------------------------------------------- sandwich

def test_log_mean_sandwich():
    m = MeanPoint(1.0, 4.0)
    enc = log_mean_sandwich(m)
    assert enc.contains(log_mean(m))
    assert enc.lo == pytest.approx(mean_family(UPPER_EDGE, m), rel=1e-12)
    assert enc.hi == pytest.approx(mean_family(1.0, m), rel=1e-12)
    point = log_mean_sandwich(MeanPoint(1.0, 1.0))
    assert point.lo == point.hi == 1.0


def test_log_mean_sandwich_on_pairs():
    for m in random_pairs(3000, seed=13):
        assert log_mean_sandwich(m).contains(log_mean(m))


def test_log_mean_sandwich_near_equal_ratios():
    # ratios from 1 + 1e-6 up to 1e6 and their inverses
    for r in 1.0 + np.geomspace(1e-6, 1e6 - 1.0, 25):
        for m in (MeanPoint(r, 1.0), MeanPoint(1.0, r)):
            assert log_mean_sandwich(m).contains(log_mean(m))


def test_mean_chain_increasing_at_fixed_pair():
    m = MeanPoint(1.0, 4.0)
    ps = [1.0 / math.sqrt(3.0), 2.0 / 3.0, 1.0 / math.sqrt(2.0), 0.75,
          UPPER_EDGE, 1.0, 2.0 / math.sqrt(3.0)]
    vals = [mean_family(p, m) for p in ps]
    assert all(b > a for a, b in zip(vals, vals[1:]))
    assert vals[4] < log_mean(m) < vals[5]  # L sits between the edge members


@given(m=pairs_strategy)
def test_sinhc_bridge_identity(m):
    # sinhc(half log ratio) equals L/G
    if m.a == m.b:
        return
    x = half_log_ratio(m)
    assert sinhc(x) == pytest.approx(log_mean(m) / geometric_mean(m), rel=1e-12)


# ------------------------------------------------------ comparison machinery

def _exact_comparison_coeff(n):
    # exact arithmetic in Q[sqrt3]: pairs (r, s) meaning r + s*sqrt(3)
    def mul(u, v):
        return (u[0] * v[0] + 3 * u[1] * v[1], u[0] * v[1] + u[1] * v[0])

    def pow_(u, k):
        out = (Fraction(1), Fraction(0))
        for _ in range(k):
            out = mul(out, u)
        return out

    lead_minus = (Fraction(-1), Fraction(3, 5))   # 3 p q - 1 = (3/5) sqrt3 - 1
    lead_plus = (Fraction(1), Fraction(3, 5))     # 3 p q + 1
    t_plus = (Fraction(1), Fraction(2, 3))        # 1 + 2q/p = 1 + (2/3) sqrt3
    t_minus = (Fraction(-1), Fraction(2, 3))      # 2q/p - 1
    x = mul(lead_minus, pow_(t_plus, 2 * n - 1))
    y = mul(lead_plus, pow_(t_minus, 2 * n - 1))
    return (x[0] + y[0] - Fraction(2, 5), x[1] + y[1])


def test_comparison_coeff_exact_values():
    assert _exact_comparison_coeff(1) == (Fraction(0), Fraction(0))
    assert _exact_comparison_coeff(2) == (Fraction(0), Fraction(0))
    assert _exact_comparison_coeff(3) == (Fraction(64, 45), Fraction(0))
    assert abs(comparison_coeff(1)) < 1e-12
    assert abs(comparison_coeff(2)) < 1e-12
    assert comparison_coeff(3) == pytest.approx(64.0 / 45.0, rel=1e-13)


def test_comparison_coeff_positive_beyond_3():
    for n in range(3, 51):
        exact = _exact_comparison_coeff(n)
        assert exact[1] == 0  # rational after cancellation
        assert exact[0] > 0
        assert comparison_coeff(n) > 0.0
    with pytest.raises(ValueError):
        ComparisonCoefficients().coeff(0)


def test_lower_bound_comparison_nonnegative():
    for x in np.geomspace(1e-3, 30.0, 200):
        assert lower_bound_comparison(float(x)) >= 0.0
    assert lower_bound_comparison(0.0) == 0.0
    assert lower_bound_comparison(1.0) > 0.0
    assert lower_bound_comparison(25.0) > lower_bound_comparison(20.0) > 0.0
    with pytest.raises(ValueError):
        lower_bound_comparison(-1.0)


def test_lower_bound_comparison_quartic_term_vanishes():
    # leading behaviour is x^6/40500, so D(x)/x^4 -> 0
    for x in (1e-3, 1e-2):
        assert lower_bound_comparison(x) / x ** 4 < 1e-6
    assert lower_bound_comparison(0.1) == pytest.approx(0.1 ** 6 / 40500.0, rel=1e-3)


def test_lower_bound_comparison_series_vs_direct():
    for x in (0.9, 0.999, 1.0):
        series = lower_bound_comparison(x)
        direct = (5.0 / 9.0) * math.cosh(UPPER_EDGE * x) + 4.0 / 9.0 \
            - math.cosh(x / math.sqrt(5.0)) ** (5.0 / 3.0)
        assert series == pytest.approx(direct, rel=1e-8)


def test_comparison_series_coeffs_frozen():
    # generated independently at 40 digits from the defining expression
    frozen = [
        2.4691358024691358e-5,
        -2.9394473838918283e-8,
        1.763668430335097e-8,
        -7.2941842489167592e-10,
        3.9882131788853325e-11,
        -2.2446771589432769e-12,
        1.3194797315477036e-13,
        -8.0202119300434656e-15,
        5.0104515479071763e-16,
        -3.2022494544307866e-17,
        2.0862282126434722e-18,
        -1.3815680691271762e-19,
    ]
    assert len(_COMPARISON_COEFFS) >= len(frozen)
    for got, want in zip(_COMPARISON_COEFFS, frozen):
        assert got == pytest.approx(want, rel=1e-13)
    assert _COMPARISON_COEFFS[0] == pytest.approx(1.0 / 40500.0, rel=1e-13)


def test_random_pairs_deterministic():
    a = random_pairs(50, seed=3)
    b = random_pairs(50, seed=3)
    assert a == b
    assert any(m.a > m.b for m in a) and any(m.a < m.b for m in a)
