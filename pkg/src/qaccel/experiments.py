"""Parameter sweeps, the conformal-invariance check, and the accelerometer.

A sweep evaluates both scenarios over an acceleration grid at identical
tolerances and reports per-point ratios and truncation diagnostics; the
accelerometer inverts a measured probability back to acceleration candidates
on a precomputed reference curve and classifies which scenario (if any) is
consistent with the measurement.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError, HorizonError, InversionRangeError, QaccelError
from .params import Normalization, PhysicalParams, Scenario, resonant_gap
from .response import stimulated_only_probability, transition_probability

TAIL_FLAG_RATIO = 0.01


class SweepMode(enum.Enum):
    VACUUM = "vacuum"
    STIMULATED_PER_PHOTON = "stimulated"


@dataclass(frozen=True)
class GridSpec:
    """Acceleration grid: n points from lo to hi, log or linear spacing."""

    lo: float
    hi: float
    n: int
    spacing: str = "log"

    def __post_init__(self):
        if not (self.lo > 0.0 and self.hi > self.lo and self.n >= 2):
            raise DomainError(f"invalid grid {self}")
        if self.spacing not in ("log", "lin"):
            raise DomainError(f"grid spacing must be 'log' or 'lin', got {self.spacing}")

    def values(self) -> np.ndarray:
        if self.spacing == "log":
            return np.geomspace(self.lo, self.hi, self.n)
        return np.linspace(self.lo, self.hi, self.n)

    @classmethod
    def parse(cls, text: str) -> "GridSpec":
        parts = text.split(":")
        if len(parts) != 4:
            raise DomainError(f"grid spec must be lo:hi:n:log|lin, got {text!r}")
        return cls(float(parts[0]), float(parts[1]), int(parts[2]), parts[3])

    def format(self) -> str:
        return f"{self.lo!r}:{self.hi!r}:{self.n}:{self.spacing}"


def default_grid(L: float = 1.0, n: int = 60) -> GridSpec:
    """60 log-spaced points spanning a*L in [0.02, 1.8]."""
    return GridSpec(0.02 / L, 1.8 / L, n, "log")


@dataclass(frozen=True)
class SweepConfig:
    """Everything but the acceleration: the sweep's physical configuration.

    omega = None selects the resonant gap sqrt((pi/L)^2 + m^2).
    """

    L: float = 1.0
    m: float = 0.0
    omega: float | None = None
    n1: int = 0
    k_max: int = 15
    tol: float = 1e-6
    normalization: Normalization = Normalization.PAPER

    def gap(self) -> float:
        return resonant_gap(self.L, self.m) if self.omega is None else self.omega

    def params_at(self, a: float) -> PhysicalParams:
        return PhysicalParams(a=a, L=self.L, m=self.m, omega=self.gap(), n1=self.n1)


PANEL_CONFIGS = {
    "a": (SweepConfig(L=1.0, m=0.2, n1=0), SweepMode.VACUUM),
    "b": (SweepConfig(L=1.0, m=0.2), SweepMode.STIMULATED_PER_PHOTON),
    "c": (SweepConfig(L=1.0, m=2.0), SweepMode.STIMULATED_PER_PHOTON),
}


def panel_config(panel: str):
    """Preset (config, mode) for the three published panels: a, b, c."""
    try:
        return PANEL_CONFIGS[panel]
    except KeyError:
        raise DomainError(f"unknown panel {panel!r}; choose from a, b, c") from None


@dataclass(frozen=True)
class SweepRow:
    a: float
    p_rob: float
    p_bob: float
    ratio: float  # nan when p_rob == 0 or a scenario failed
    rob_tail: float
    bob_tail: float
    flags: tuple = ()


@dataclass(frozen=True)
class SweepTable:
    rows: tuple
    config: SweepConfig
    grid: GridSpec
    mode: SweepMode

    def accelerations(self) -> np.ndarray:
        return np.array([r.a for r in self.rows])

    def column(self, name: str) -> np.ndarray:
        return np.array([getattr(r, name) for r in self.rows])


def _evaluate_point(scenario, config: SweepConfig, mode: SweepMode, a: float,
                    node_scale: int = 1):
    params = config.params_at(a)
    if mode is SweepMode.VACUUM:
        bd = transition_probability(
            scenario, params, config.k_max, config.tol, config.normalization,
            node_scale,
        )
    else:
        bd = stimulated_only_probability(
            scenario, params, config.tol, config.normalization, node_scale
        )
    tail = bd.tail_estimate / bd.total if bd.total > 0.0 else 0.0
    return bd.total, tail


def sweep(config: SweepConfig, grid: GridSpec, mode: SweepMode,
          node_scale: int = 1, min_aL: float = 0.02) -> SweepTable:
    """Both scenarios over the grid; per-point failures are flagged, not fatal.

    The grid must stay in a*L in [min_aL, 2): below min_aL the sharp-window
    crossing time diverges like sqrt(L/a) and the first-order integral loses
    meaning, at a*L >= 2 the cavity touches the horizon.
    """
    if grid.lo * config.L < min_aL * (1.0 - 1e-12):
        raise DomainError(
            f"sweep grid starts at a*L = {grid.lo * config.L}, below the "
            f"minimum {min_aL}"
        )
    if grid.hi * config.L >= 2.0:
        raise HorizonError(
            f"sweep grid reaches a*L = {grid.hi * config.L} >= 2"
        )
    rows = []
    for a in grid.values():
        flags = []
        totals = {}
        tails = {}
        for scenario in Scenario:
            try:
                totals[scenario], tails[scenario] = _evaluate_point(
                    scenario, config, mode, float(a), node_scale
                )
            except QaccelError as exc:
                totals[scenario], tails[scenario] = math.nan, math.nan
                flags.append(f"{scenario.value}_error:{type(exc).__name__}")
        p_rob = totals[Scenario.ACCELERATED_DETECTOR]
        p_bob = totals[Scenario.ACCELERATED_CAVITY]
        if math.isfinite(p_rob) and p_rob > 0.0 and math.isfinite(p_bob):
            ratio = p_bob / p_rob
        else:
            ratio = math.nan
            if math.isfinite(p_rob) and p_rob == 0.0:
                flags.append("ratio_undefined")
        for scenario, label in ((Scenario.ACCELERATED_DETECTOR, "rob"),
                                (Scenario.ACCELERATED_CAVITY, "bob")):
            if math.isfinite(tails[scenario]) and tails[scenario] > TAIL_FLAG_RATIO:
                flags.append(f"{label}_tail>{TAIL_FLAG_RATIO}")
        rows.append(SweepRow(
            a=float(a), p_rob=p_rob, p_bob=p_bob, ratio=ratio,
            rob_tail=tails[Scenario.ACCELERATED_DETECTOR],
            bob_tail=tails[Scenario.ACCELERATED_CAVITY],
            flags=tuple(flags),
        ))
    return SweepTable(rows=tuple(rows), config=config, grid=grid, mode=mode)


@dataclass(frozen=True)
class ConformalCheckResult:
    max_deviation: float
    rows: tuple  # (a, p_rob, p_bob, deviation) restricted to a*L <= 0.3
    full_rows: tuple  # same over the whole requested grid


def conformal_check(
    a_grid, m_small: float = 0.01, config: SweepConfig | None = None
) -> ConformalCheckResult:
    """Scenario agreement in the near-conformal regime (small mass, vacuum).

    Returns the max of |p_bob - p_rob| / max(p_rob, p_bob) over grid points
    with a*L <= 0.3, plus the full deviation profile for reporting.
    """
    if m_small > 0.05:
        raise DomainError(f"conformal check expects m <= 0.05, got {m_small}")
    if config is None:
        config = SweepConfig(m=m_small, n1=0)
    else:
        config = SweepConfig(
            L=config.L, m=m_small, omega=config.omega, n1=0,
            k_max=config.k_max, tol=config.tol, normalization=config.normalization,
        )
    rows = []
    for a in np.asarray(a_grid, dtype=float):
        p_rob, _ = _evaluate_point(Scenario.ACCELERATED_DETECTOR, config,
                                   SweepMode.VACUUM, float(a))
        p_bob, _ = _evaluate_point(Scenario.ACCELERATED_CAVITY, config,
                                   SweepMode.VACUUM, float(a))
        dev = abs(p_bob - p_rob) / max(p_rob, p_bob)
        rows.append((float(a), p_rob, p_bob, dev))
    small = tuple(r for r in rows if r[0] * config.L <= 0.3 + 1e-12)
    if not small:
        raise DomainError("no grid points with a*L <= 0.3")
    return ConformalCheckResult(
        max_deviation=max(r[3] for r in small),
        rows=small,
        full_rows=tuple(rows),
    )


# --------------------------------------------------------------------------
# accelerometer: probability -> acceleration
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class ReferenceCurve:
    """Probability versus acceleration for one scenario, on a dense grid."""

    scenario: Scenario
    config: SweepConfig
    mode: SweepMode
    a_values: np.ndarray
    p_values: np.ndarray

    def evaluate(self, a: float) -> float:
        """Exact (non-interpolated) probability at a."""
        return _evaluate_point(self.scenario, self.config, self.mode, a)[0]


def reference_curve(
    scenario: Scenario,
    config: SweepConfig,
    mode: SweepMode,
    bracket,
    n_points: int = 96,
) -> ReferenceCurve:
    lo, hi = float(bracket[0]), float(bracket[1])
    if not (0.0 < lo < hi):
        raise DomainError(f"invalid bracket {bracket}")
    a_values = np.geomspace(lo, hi, n_points)
    p_values = np.array([
        _evaluate_point(scenario, config, mode, float(a))[0] for a in a_values
    ])
    return ReferenceCurve(scenario, config, mode, a_values, p_values)


def _monotone_segments(p: np.ndarray):
    """Maximal index runs [i, j] on which p is strictly monotone."""
    segments = []
    start = 0
    direction = 0
    for i in range(len(p) - 1):
        d = np.sign(p[i + 1] - p[i])
        if direction == 0:
            direction = d
        elif d != 0 and d != direction:
            segments.append((start, i, direction))
            start, direction = i, d
    segments.append((start, len(p) - 1, direction))
    return [s for s in segments if s[1] > s[0] and s[2] != 0]


@dataclass(frozen=True)
class InversionResult:
    candidates: tuple  # accelerations, increasing
    multi_valued: bool
    curve: ReferenceCurve


def invert_curve(curve: ReferenceCurve, p_measured: float) -> InversionResult:
    """All accelerations where the interpolated curve crosses p_measured.

    Bisection on each strictly monotone segment of the piecewise-linear
    interpolant; InversionRangeError when no segment spans p_measured.
    """
    a, p = curve.a_values, curve.p_values
    candidates = []
    for lo_i, hi_i, _ in _monotone_segments(p):
        p_lo, p_hi = p[lo_i], p[hi_i]
        if not (min(p_lo, p_hi) <= p_measured <= max(p_lo, p_hi)):
            continue
        seg_a, seg_p = a[lo_i : hi_i + 1], p[lo_i : hi_i + 1]
        x_lo, x_hi = float(seg_a[0]), float(seg_a[-1])
        f = lambda x: float(np.interp(x, seg_a, seg_p)) - p_measured
        f_lo = f(x_lo)
        for _ in range(200):
            if x_hi - x_lo <= 1e-14 * max(1.0, x_hi):
                break
            mid = 0.5 * (x_lo + x_hi)
            f_mid = f(mid)
            if f_mid == 0.0:
                x_lo = x_hi = mid
                break
            if f_lo * f_mid < 0.0:
                x_hi = mid
            else:
                x_lo, f_lo = mid, f_mid
        candidates.append(0.5 * (x_lo + x_hi))
    if not candidates:
        raise InversionRangeError(
            f"p = {p_measured} outside the reference curve range "
            f"[{p.min()}, {p.max()}] on the bracket"
        )
    candidates = sorted(candidates)
    return InversionResult(tuple(candidates), len(candidates) > 1, curve)


def estimate_acceleration(
    p_measured: float,
    scenario: Scenario,
    config: SweepConfig,
    bracket,
    mode: SweepMode = SweepMode.STIMULATED_PER_PHOTON,
    curve: ReferenceCurve | None = None,
    n_points: int = 96,
) -> InversionResult:
    """Acceleration(s) whose reference-curve probability equals p_measured."""
    if curve is None:
        curve = reference_curve(scenario, config, mode, bracket, n_points)
    return invert_curve(curve, p_measured)


class FrameClass(enum.Enum):
    INERTIAL_CAVITY = "inertial-cavity-frame"
    ACCELERATED_CAVITY = "accelerated-cavity-frame"
    INDISTINGUISHABLE = "indistinguishable"


@dataclass(frozen=True)
class Discrimination:
    classification: FrameClass
    rob_candidates: tuple
    bob_candidates: tuple
    # relative gap |p_rob(a) - p_bob(a)| / max at each candidate acceleration
    candidate_gaps: tuple
    separable: bool  # some candidate sits where the curves differ beyond band


def discriminate_frame(
    p_measured: float,
    config: SweepConfig,
    bracket,
    mode: SweepMode = SweepMode.STIMULATED_PER_PHOTON,
    band: float = 0.02,
    n_points: int = 96,
) -> Discrimination:
    """Which scenario's curve is consistent with the measured probability.

    A scenario is a candidate when its curve attains p_measured inside the
    bracket. Exactly one candidate scenario classifies the frame; both or
    neither yield 'indistinguishable' (with candidates and curve-gap
    diagnostics attached so callers can see whether the curves actually
    separate at the matched accelerations).
    """
    curves = {
        s: reference_curve(s, config, mode, bracket, n_points) for s in Scenario
    }
    found = {}
    for s in Scenario:
        try:
            found[s] = invert_curve(curves[s], p_measured).candidates
        except InversionRangeError:
            found[s] = ()
    rob_c = found[Scenario.ACCELERATED_DETECTOR]
    bob_c = found[Scenario.ACCELERATED_CAVITY]
    gaps = []
    for a_star in (*rob_c, *bob_c):
        pr = float(np.interp(a_star, curves[Scenario.ACCELERATED_DETECTOR].a_values,
                             curves[Scenario.ACCELERATED_DETECTOR].p_values))
        pb = float(np.interp(a_star, curves[Scenario.ACCELERATED_CAVITY].a_values,
                             curves[Scenario.ACCELERATED_CAVITY].p_values))
        gaps.append(abs(pr - pb) / max(pr, pb) if max(pr, pb) > 0 else 0.0)
    if rob_c and not bob_c:
        cls = FrameClass.INERTIAL_CAVITY
    elif bob_c and not rob_c:
        cls = FrameClass.ACCELERATED_CAVITY
    else:
        cls = FrameClass.INDISTINGUISHABLE
    return Discrimination(
        classification=cls,
        rob_candidates=rob_c,
        bob_candidates=bob_c,
        candidate_gaps=tuple(gaps),
        separable=any(g > band for g in gaps),
    )
