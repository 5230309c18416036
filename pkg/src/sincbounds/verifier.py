"""Grid-based inequality verification with local refinement.

Semantics: a sampled margin below -floor (floor = 64 ulps of the local
magnitude) is a trustworthy violation; margins inside the +-floor deadband
are indeterminate at double precision and are tolerated, because every
true inequality in this corpus has margin -> 0 at a domain endpoint.  A
HOLDS verdict therefore means "no violation found and positive evidence
exists somewhere"; it is evidence, not proof.  FAILS always carries a
concrete witness.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from . import constants as _constants
from . import core as _core
from . import means as _means

_EPS = math.ulp(1.0)
FLOOR_ULPS = 64.0


class Verdict(enum.Enum):
    HOLDS = "holds"
    FAILS = "fails"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class InequalityCase:
    """Claim lhs(x) < rhs(x) on the open interval domain."""

    id: str
    lhs: Callable
    rhs: Callable
    domain: tuple[float, float]
    strict: bool = True

    def __post_init__(self):
        lo, hi = self.domain
        if not lo < hi:
            raise ValueError(f"domain must satisfy xmin < xmax, got {self.domain!r}")


@dataclass(frozen=True)
class Violation:
    x: float
    lhs: float
    rhs: float


@dataclass(frozen=True)
class VerificationReport:
    case_id: str
    grid_points: int
    min_margin: float
    argmin_x: float
    violations: list[Violation]
    verdict: Verdict
    n_violations: int = 0
    diagnostic: str = ""


_MAX_STORED_VIOLATIONS = 50


def _interior_grid(lo: float, hi: float, points: int) -> np.ndarray:
    return np.linspace(lo, hi, points + 2)[1:-1]


def _refine_points(xs: np.ndarray, margins: np.ndarray, lo: float, hi: float,
                   spacing: float) -> np.ndarray:
    # triple the density around the 5 smallest margins
    order = np.argsort(margins, kind="stable")[:5]
    windows = []
    for xi in xs[order]:
        windows.append(np.linspace(xi - spacing, xi + spacing, 13))
    fresh = np.concatenate(windows)
    fresh = fresh[(fresh > lo) & (fresh < hi)]
    return fresh


def verify(case: InequalityCase, points: int = 4096, refine_rounds: int = 2) -> VerificationReport:
    """Check lhs < rhs on an interior grid, refining near the worst margins."""
    if points < 64:
        raise ValueError("points must be >= 64")
    lo, hi = case.domain
    xs = _interior_grid(lo, hi, points)
    spacing = (hi - lo) / (points + 1)
    got_x: list[np.ndarray] = []
    got_l: list[np.ndarray] = []
    got_r: list[np.ndarray] = []
    try:
        for round_no in range(refine_rounds + 1):
            lv = np.broadcast_to(np.asarray(case.lhs(xs), dtype=float), xs.shape).copy()
            rv = np.broadcast_to(np.asarray(case.rhs(xs), dtype=float), xs.shape).copy()
            got_x.append(xs)
            got_l.append(lv)
            got_r.append(rv)
            if round_no == refine_rounds:
                break
            all_x = np.concatenate(got_x)
            all_m = np.concatenate(got_r) - np.concatenate(got_l)
            spacing /= 3.0
            xs = _refine_points(all_x, all_m, lo, hi, spacing)
            if xs.size == 0:
                break
    except Exception as exc:  # evaluation failure -> inconclusive with diagnostic
        return VerificationReport(
            case_id=case.id,
            grid_points=sum(g.size for g in got_x),
            min_margin=math.nan,
            argmin_x=math.nan,
            violations=[],
            verdict=Verdict.INCONCLUSIVE,
            diagnostic=f"evaluation failed: {exc!r}",
        )

    x = np.concatenate(got_x)
    lv = np.concatenate(got_l)
    rv = np.concatenate(got_r)
    order = np.argsort(x, kind="stable")  # reduce in x order, independent of rounds
    x, lv, rv = x[order], lv[order], rv[order]
    margin = rv - lv
    floor = FLOOR_ULPS * _EPS * np.maximum(1.0, np.maximum(np.abs(lv), np.abs(rv)))

    # infinite margins are definite: the floor comparison would turn them
    # into deadband (inf < inf is false)
    bad = (margin < -floor) | np.isneginf(margin)
    good = (margin > floor) | np.isposinf(margin)
    imin = int(np.argmin(margin))
    idx = np.nonzero(bad)[0]
    violations = [Violation(float(x[i]), float(lv[i]), float(rv[i]))
                  for i in idx[:_MAX_STORED_VIOLATIONS]]
    if bad.any():
        verdict = Verdict.FAILS
    elif good.any() or (not case.strict and not bad.any()):
        verdict = Verdict.HOLDS
    else:
        verdict = Verdict.INCONCLUSIVE
    return VerificationReport(
        case_id=case.id,
        grid_points=int(x.size),
        min_margin=float(margin[imin]),
        argmin_x=float(x[imin]),
        violations=violations,
        verdict=verdict,
        n_violations=int(bad.sum()),
    )


def verify_chain(members: Sequence[tuple[str, Callable]], domain: tuple[float, float],
                 points: int = 4096, refine_rounds: int = 2) -> list[VerificationReport]:
    """One report per adjacent pair of the ordered member list."""
    if len(members) < 2:
        raise ValueError("a chain needs at least 2 members")
    reports = []
    for (name_a, fa), (name_b, fb) in zip(members, members[1:]):
        case = InequalityCase(id=f"{name_a} < {name_b}", lhs=fa, rhs=fb, domain=domain)
        reports.append(verify(case, points=points, refine_rounds=refine_rounds))
    return reports


class MonotoneFamily(enum.Enum):
    COS_FAMILY = "cos"       # cos_bound increasing in p on [0, 1]
    COSH_FAMILY = "cosh"     # cosh_bound increasing in p on [0, inf)
    MEAN_FAMILY = "means"    # mean_family increasing in p on [0, inf)


def verify_param_monotone(family: MonotoneFamily, p_grid: Sequence[float],
                          x_grid: Sequence[float] | None = None,
                          pairs: Sequence | None = None) -> VerificationReport:
    """Strict increase along p_grid at every x (or pair); one merged report.

    For MEAN_FAMILY the witness coordinate is the pair's half log ratio.
    """
    p_grid = [float(p) for p in p_grid]
    if any(q <= p for p, q in zip(p_grid, p_grid[1:])):
        raise ValueError("p_grid must be strictly increasing")

    if family is MonotoneFamily.MEAN_FAMILY:
        if pairs is None:
            raise ValueError("MEAN_FAMILY needs pairs")
        coords = np.array([_means.half_log_ratio(m) for m in pairs])
        values = np.array([[_means.mean_family(p, m) for m in pairs] for p in p_grid])
    else:
        if x_grid is None:
            raise ValueError("x_grid required for bound families")
        coords = np.asarray(x_grid, dtype=float)
        fn = _core.cos_bound if family is MonotoneFamily.COS_FAMILY else _core.cosh_bound
        values = np.array([np.broadcast_to(np.asarray(fn(p, coords), dtype=float), coords.shape)
                           for p in p_grid])

    diffs = values[1:] - values[:-1]            # (len(p)-1, len(x))
    scale = np.maximum(1.0, np.abs(values).max(axis=0))
    floor = FLOOR_ULPS * _EPS * scale
    bad = diffs < -floor
    good = diffs > floor
    flat_idx = int(np.argmin(diffs))
    row, col = np.unravel_index(flat_idx, diffs.shape)
    viol_rows, viol_cols = np.nonzero(bad)
    violations = [Violation(float(coords[c]), float(values[r][c]), float(values[r + 1][c]))
                  for r, c in list(zip(viol_rows, viol_cols))[:_MAX_STORED_VIOLATIONS]]
    if bad.any():
        verdict = Verdict.FAILS
    elif good.any():
        verdict = Verdict.HOLDS
    else:
        verdict = Verdict.INCONCLUSIVE
    return VerificationReport(
        case_id=f"monotone:{family.value}",
        grid_points=int(values.size),
        min_margin=float(diffs[row, col]),
        argmin_x=float(coords[col]),
        violations=violations,
        verdict=verdict,
        n_violations=int(bad.sum()),
    )


class SharpnessFamily(enum.Enum):
    SINC_LOWER = "sinc_lower"    # cos_bound(p,.) < sinc on (0, pi/2), valid p <= edge
    SINC_UPPER = "sinc_upper"    # sinc < cos_bound(q,.) on (0, pi/2), valid q >= edge
    SINHC_LOWER = "sinhc_lower"  # cosh_bound(p,.) < sinhc, valid p <= edge
    SINHC_UPPER = "sinhc_upper"  # sinhc < cosh_bound(q,.), valid q >= edge


class ThresholdSide(enum.Enum):
    BELOW = "below"
    ABOVE = "above"


_HYP_DOMAIN = (0.0, 50.0)  # cosh overflow margin; large-x behaviour is
                           # delegated to the exponentially scaled gap scan


def _default_threshold(family: SharpnessFamily) -> _constants.SharpConstant:
    if family is SharpnessFamily.SINC_LOWER:
        return _constants.solve_sinc_lower_edge(1e-12)
    if family is SharpnessFamily.SINHC_UPPER:
        return _constants.sinhc_upper_edge()
    return _constants.sinc_upper_edge()  # shared by SINC_UPPER and SINHC_LOWER


def expected_sharpness_verdict(family: SharpnessFamily, side: ThresholdSide) -> Verdict:
    """The if-and-only-if content: valid side holds, other side fails."""
    valid_below = family in (SharpnessFamily.SINC_LOWER, SharpnessFamily.SINHC_LOWER)
    below = side is ThresholdSide.BELOW
    return Verdict.HOLDS if below == valid_below else Verdict.FAILS


def _family_case(family: SharpnessFamily, param: float) -> InequalityCase:
    half_pi = math.pi / 2.0
    if family is SharpnessFamily.SINC_LOWER:
        return InequalityCase(f"cos_bound({param:.9g}) < sinc", lambda x: _core.cos_bound(param, x),
                              _core.sinc, (0.0, half_pi))
    if family is SharpnessFamily.SINC_UPPER:
        return InequalityCase(f"sinc < cos_bound({param:.9g})", _core.sinc,
                              lambda x: _core.cos_bound(param, x), (0.0, half_pi))
    if family is SharpnessFamily.SINHC_LOWER:
        return InequalityCase(f"cosh_bound({param:.9g}) < sinhc",
                              lambda x: _core.cosh_bound(param, x), _core.sinhc, _HYP_DOMAIN)
    return InequalityCase(f"sinhc < cosh_bound({param:.9g})", _core.sinhc,
                          lambda x: _core.cosh_bound(param, x), _HYP_DOMAIN)


def _merge(a: VerificationReport, b: VerificationReport) -> VerificationReport:
    ranking = {Verdict.FAILS: 0, Verdict.INCONCLUSIVE: 1, Verdict.HOLDS: 2}
    verdict = min((a.verdict, b.verdict), key=ranking.get)
    lead = a if (a.min_margin <= b.min_margin or math.isnan(b.min_margin)) else b
    return VerificationReport(
        case_id=a.case_id,
        grid_points=a.grid_points + b.grid_points,
        min_margin=lead.min_margin,
        argmin_x=lead.argmin_x,
        violations=(a.violations + b.violations)[:_MAX_STORED_VIOLATIONS],
        verdict=verdict,
        n_violations=a.n_violations + b.n_violations,
        diagnostic=a.diagnostic or b.diagnostic,
    )


def verify_sharpness(family: SharpnessFamily, side: ThresholdSide, offset: float,
                     threshold: _constants.SharpConstant | None = None,
                     points: int = 4096) -> VerificationReport:
    """Run the family check just past (or just inside) its sharp threshold.

    For SINHC_UPPER with a parameter below 1 the violation appears at x far
    beyond any cosh-evaluable grid, so the finite-domain check is merged
    with a scan of the exponentially scaled gap (positive scaled gap means
    the upper bound eventually fails).
    """
    if threshold is None:
        threshold = _default_threshold(family)
    if not offset >= 10.0 * threshold.certified_radius:
        raise ValueError("offset must be >= 10x the threshold's certified radius")
    param = threshold.value + (offset if side is ThresholdSide.ABOVE else -offset)
    report = verify(_family_case(family, param), points=points)
    if family is SharpnessFamily.SINHC_UPPER:
        scaled_case = InequalityCase(
            id=f"scaled gap({param:.9g}) < 0 at large x",
            lhs=lambda x: _core.sinhc_gap_scaled(param, x),
            rhs=lambda x: np.zeros_like(np.asarray(x, dtype=float)),
            domain=(1.0, 1e12),
        )
        report = _merge(report, verify(scaled_case, points=points, refine_rounds=0))
    return report


LEIBNIZ_RATIO_BOUND = 11.0 * math.pi ** 2 / 360.0


def verify_leibniz_ratio(p, n_max: int, points: int = 256) -> VerificationReport:
    """Ratio of consecutive derivative-series terms stays below 11 pi^2/360.

    Terms u_n(x) = (2n-4) a_n(p^2) x^{2n-5} / (3 (2n+1)!) for n >= 3; the
    bound < 1 is what makes the alternating series argument work.
    """
    p = _core._param(p, _core.Family.TRIG)
    c = p * p
    if not 0.0 < c <= 0.6 * (1.0 + 1e-12):
        raise ValueError("p^2 must lie in (0, 3/5]")
    if n_max < 4:
        raise ValueError("n_max must be >= 4")
    xs = _interior_grid(0.0, math.pi / 2.0, points)
    x2 = xs * xs
    worst = -math.inf
    worst_x = xs[0]
    bad = 0
    for n in range(3, n_max + 1):
        a_n = _core.gap_series_coeff(n, c)
        a_n1 = _core.gap_series_coeff(n + 1, c)
        factor = (2 * n - 2) / ((2 * n - 4) * (2 * n + 2) * (2 * n + 3))
        ratios = factor * (a_n1 / a_n) * x2
        i = int(np.argmax(ratios))
        if ratios[i] > worst:
            worst, worst_x = float(ratios[i]), float(xs[i])
        bad += int(np.count_nonzero(ratios >= LEIBNIZ_RATIO_BOUND))
    verdict = Verdict.HOLDS if bad == 0 else Verdict.FAILS
    return VerificationReport(
        case_id=f"leibniz-ratio p={p:.9g} n<={n_max}",
        grid_points=points * (n_max - 2),
        min_margin=LEIBNIZ_RATIO_BOUND - worst,
        argmin_x=worst_x,
        violations=[],
        verdict=verdict,
        n_violations=bad,
    )
