"""Cavity mode families for the static and the accelerated cavity.

Static cavity: F_k(x) = A_k sin(k pi (x + L/2) / L) on [-L/2, L/2] with
frequencies omega_k = sqrt((k pi / L)^2 + m^2). The default amplitude is
A_k = 1/sqrt(k pi); the Klein-Gordon consistent alternative 1/sqrt(omega_k L)
is selected with Normalization.KLEIN_GORDON (the two coincide at m = 0).

Accelerated cavity: walls at chi_1 = 1/a + L/2 (far) and chi_2 = 1/a - L/2
(near). Massive modes are wall brackets of imaginary-order Bessel functions,
F_k(chi) = N_k * B_k(chi) with B_k(chi) built on the far wall and the order
nu_k fixed by B_k(chi_2) = 0. Physical frequencies are Omega_k = a * nu_k,
conjugate to the cavity's Rindler time. Normalization is the Klein-Gordon
inner product on a constant-tau slice:

    integral_{chi_2}^{chi_1} (2 Omega_k / (a chi)) F_k(chi)^2 dchi = 1.

Below m = 1e-6 the family degenerates to the exact conformal sine modes in
xi = ln(a chi)/a with nu_k = k pi / ln(chi_1/chi_2).
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError, RootScanError
from .params import Normalization, PhysicalParams
from .quadrature import adaptive_gauss_legendre
from .specfun import gamma_order_weight, rindler_bracket_scaled

CONFORMAL_MASS_CUTOFF = 1e-6

_BISECT_TOL = 1e-10
_SCAN_EXTENSIONS = 12


# --------------------------------------------------------------------------
# static cavity
# --------------------------------------------------------------------------

def inertial_frequency(k: int, params: PhysicalParams) -> float:
    """omega_k = sqrt((k pi / L)^2 + m^2) for mode k >= 1."""
    if k < 1:
        raise DomainError(f"mode index must be >= 1, got {k}")
    return math.hypot(k * math.pi / params.L, params.m)


def inertial_mode(
    k: int,
    x,
    params: PhysicalParams,
    normalization: Normalization = Normalization.PAPER,
):
    """Static-cavity mode F_k(x); raises DomainError outside [-L/2, L/2]."""
    if k < 1:
        raise DomainError(f"mode index must be >= 1, got {k}")
    x = np.asarray(x, dtype=float)
    half = params.L / 2.0
    if np.any(np.abs(x) > half * (1.0 + 1e-15)):
        raise DomainError(f"|x| exceeds L/2 = {half}")
    if normalization is Normalization.PAPER:
        amp = 1.0 / math.sqrt(k * math.pi)
    else:
        amp = 1.0 / math.sqrt(inertial_frequency(k, params) * params.L)
    out = amp * np.sin(k * math.pi * (x + half) / params.L)
    if x.ndim == 0:
        return float(out)
    return out


@dataclass(frozen=True)
class InertialModeSet:
    """The first k_max static-cavity modes with their frequencies."""

    params: PhysicalParams
    k_max: int
    normalization: Normalization = Normalization.PAPER
    frequencies: tuple = field(init=False)

    def __post_init__(self):
        freqs = tuple(inertial_frequency(k, self.params) for k in range(1, self.k_max + 1))
        object.__setattr__(self, "frequencies", freqs)

    def frequency(self, k: int) -> float:
        return self.frequencies[k - 1]

    def value(self, k: int, x):
        return inertial_mode(k, x, self.params, self.normalization)


def inertial_inner_product(modeset: InertialModeSet, j: int, k: int) -> float:
    """Klein-Gordon inner product of static modes j and k on a t = const slice,
    integral (omega_j + omega_k) F_j F_k dx. Equals delta_jk for the
    KLEIN_GORDON normalization; under PAPER it picks up omega_k L / (k pi)."""
    wj, wk = modeset.frequency(j), modeset.frequency(k)
    half = modeset.params.L / 2.0
    f = lambda x: (wj + wk) * modeset.value(j, x) * modeset.value(k, x)
    return adaptive_gauss_legendre(f, -half, half, rtol=1e-10, atol=1e-12)


# --------------------------------------------------------------------------
# accelerated cavity
# --------------------------------------------------------------------------

def rindler_boundaries(params: PhysicalParams):
    """Wall radii (chi_1, chi_2) = (1/a + L/2, 1/a - L/2); HorizonError if a*L >= 2."""
    params.require_above_horizon()
    inv = 1.0 / params.a
    return inv + params.L / 2.0, inv - params.L / 2.0


def conformal_spectrum(params: PhysicalParams, k_max: int) -> list:
    """Massless eigenvalues nu_k = k pi / ln(chi_1/chi_2), the m -> 0 limit."""
    chi1, chi2 = rindler_boundaries(params)
    base = math.pi / math.log(chi1 / chi2)
    return [k * base for k in range(1, k_max + 1)]


def rindler_spectrum(params: PhysicalParams, k_max: int) -> list:
    """First k_max positive roots nu_k of the wall bracket at chi = chi_2.

    Roots are bracketed by sign changes on a scan grid (step min(0.1,
    nu_1^conformal/20), range extended geometrically) and refined by
    bisection to |dnu| <= 1e-10. The scan starts at max(step, m*chi_2):
    below m*chi_2 the radial equation has no oscillatory region, so no
    eigenvalues exist there, and the bracket is exponential-cancellation
    noise in double precision.
    """
    if params.m <= 0.0:
        raise DomainError("massive spectrum requires m > 0; use conformal_spectrum")
    if k_max < 1:
        raise DomainError(f"k_max must be >= 1, got {k_max}")
    chi1, chi2 = rindler_boundaries(params)
    m = params.m
    nu1_conf = math.pi / math.log(chi1 / chi2)
    step = min(0.1, nu1_conf / 20.0)
    lo = max(step, m * chi2)
    span = nu1_conf * (k_max + 2)

    def g(nu):
        return rindler_bracket_scaled(nu, m, chi1, chi2)

    roots: list = []
    for _ in range(_SCAN_EXTENSIONS):
        grid = lo + step * np.arange(int(math.ceil(span / step)) + 1)
        vals = g(grid)
        sign = np.sign(vals)
        hits = np.nonzero(sign[:-1] * sign[1:] < 0)[0]
        for i in hits:
            if len(roots) >= k_max:
                break
            a, b, fa = float(grid[i]), float(grid[i + 1]), float(vals[i])
            while b - a > _BISECT_TOL:
                mid = 0.5 * (a + b)
                fm = float(g(mid))
                if fm == 0.0:
                    a = b = mid
                    break
                if fa * fm < 0.0:
                    b = mid
                else:
                    a, fa = mid, fm
            roots.append(0.5 * (a + b))
        if len(roots) >= k_max:
            return roots
        lo = float(grid[-1])
        span *= 2.0
    raise RootScanError(
        f"found {len(roots)} of {k_max} bracket roots before the scan cap"
    )


def rindler_normalization(params: PhysicalParams, nu_k: float) -> float:
    """N_k > 0 normalizing the unscaled bracket mode N_k * B_k(chi).

    Defined by integral (2 Omega_k/(a chi)) [N_k B_k(chi)]^2 dchi = 1 with
    Omega_k = a nu_k. Computed through the gamma-scaled bracket and converted
    with |Gamma(1 + i nu)|^2; quadrature converged to 1e-9 relative.
    """
    n_scaled = _normalization_scaled(params, nu_k)
    return n_scaled * gamma_order_weight(nu_k)


def _normalization_scaled(params: PhysicalParams, nu_k: float) -> float:
    chi1, chi2 = rindler_boundaries(params)
    m = params.m

    def integrand(chi):
        b = rindler_bracket_scaled(nu_k, m, chi1, chi)
        return (2.0 * nu_k / chi) * b * b

    norm = adaptive_gauss_legendre(integrand, chi2, chi1, rtol=1e-9)
    return 1.0 / math.sqrt(norm)


@dataclass(frozen=True)
class RindlerModeSet:
    """The first k_max accelerated-cavity modes, ready for evaluation.

    nu_list: Bessel orders (dimensionless eigenvalues), strictly increasing.
    Omega_list: physical Rindler frequencies a * nu_k.
    N_list: normalization constants for the gamma-scaled bracket; the
        evaluated modes F_k = N_k * B~_k(chi) are identical to the
        unscaled-convention modes.
    conformal: True when m < 1e-6 and the exact sine family in xi is used.
    """

    params: PhysicalParams
    k_max: int
    chi1: float
    chi2: float
    nu_list: tuple
    Omega_list: tuple
    N_list: tuple
    conformal: bool

    def value(self, k: int, chi):
        """F_k(chi); raises DomainError outside [chi_2, chi_1]."""
        if not 1 <= k <= self.k_max:
            raise DomainError(f"mode index {k} outside 1..{self.k_max}")
        chi_arr = np.asarray(chi, dtype=float)
        if np.any(chi_arr < self.chi2 * (1.0 - 1e-12)) or np.any(
            chi_arr > self.chi1 * (1.0 + 1e-12)
        ):
            raise DomainError(f"chi outside the cavity [{self.chi2}, {self.chi1}]")
        nu = self.nu_list[k - 1]
        if self.conformal:
            out = self.N_list[k - 1] * np.sin(nu * np.log(chi_arr / self.chi2))
        else:
            out = self.N_list[k - 1] * rindler_bracket_scaled(
                nu, self.params.m, self.chi1, chi_arr
            )
        if chi_arr.ndim == 0:
            return float(out)
        return out


@functools.lru_cache(maxsize=64)
def _build_rindler(a: float, L: float, m: float, k_max: int) -> RindlerModeSet:
    params = PhysicalParams(a=a, L=L, m=m)
    chi1, chi2 = rindler_boundaries(params)
    if m < CONFORMAL_MASS_CUTOFF:
        nus = tuple(conformal_spectrum(params, k_max))
        norms = tuple(1.0 / math.sqrt(k * math.pi) for k in range(1, k_max + 1))
        conformal = True
    else:
        nus = tuple(rindler_spectrum(params, k_max))
        norms = tuple(_normalization_scaled(params, nu) for nu in nus)
        conformal = False
    return RindlerModeSet(
        params=params,
        k_max=k_max,
        chi1=chi1,
        chi2=chi2,
        nu_list=nus,
        Omega_list=tuple(a * nu for nu in nus),
        N_list=norms,
        conformal=conformal,
    )


def build_rindler_modes(params: PhysicalParams, k_max: int) -> RindlerModeSet:
    """Construct (and memoize on (a, L, m, k_max)) the accelerated-cavity modes."""
    params.require_above_horizon()
    return _build_rindler(params.a, params.L, params.m, k_max)


def rindler_mode(modeset: RindlerModeSet, k: int, chi):
    """F_k(chi) = N_k B_k(chi); vanishes at both walls."""
    return modeset.value(k, chi)


def kg_inner_product(modeset: RindlerModeSet, j: int, k: int) -> float:
    """Klein-Gordon inner product on a tau = const slice,
    integral ((Omega_j + Omega_k)/(a chi)) F_j F_k dchi; delta_jk when normalized."""
    if not (1 <= j <= modeset.k_max and 1 <= k <= modeset.k_max):
        raise DomainError("mode indices outside the constructed set")
    a = modeset.params.a
    wj, wk = modeset.Omega_list[j - 1], modeset.Omega_list[k - 1]

    def integrand(chi):
        return ((wj + wk) / (a * chi)) * modeset.value(j, chi) * modeset.value(k, chi)

    return adaptive_gauss_legendre(
        integrand, modeset.chi2, modeset.chi1, rtol=1e-8, atol=1e-9
    )
