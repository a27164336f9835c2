"""Worldlines, coordinate maps, and sharp coupling windows for both scenarios.

The coupling is on exactly while the detector is between the cavity walls:
both detectors enter at a wall, pass the cavity center at parameter 0, and
exit through the same wall. Parameter ranges are symmetric, [-T, +T].
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, HorizonError
from .params import PhysicalParams, Scenario


def rob_worldline(a: float, tau):
    """Accelerated detector in the static cavity: (t, x) at proper time tau.

    x(tau) = -(cosh(a tau) - 1)/a, t(tau) = sinh(a tau)/a; the apex of the
    hyperbola sits at the cavity center x = 0.
    """
    if a <= 0.0:
        raise DomainError("worldline requires a > 0")
    tau = np.asarray(tau, dtype=float)
    t = np.sinh(a * tau) / a
    x = -(np.cosh(a * tau) - 1.0) / a
    if tau.ndim == 0:
        return float(t), float(x)
    return t, x


def rob_window(params: PhysicalParams) -> float:
    """Half-width in proper time of the accelerated detector's cavity crossing."""
    params.require_accelerated()
    return math.acosh(1.0 + params.a * params.L / 2.0) / params.a


def bob_worldline(a: float, t):
    """Inertial detector seen from the accelerated cavity: (tau, chi) at time t.

    chi(t) = sqrt(1/a^2 - t^2), tau(t) = atanh(a t)/a; defined for |t| < 1/a,
    i.e. before the detector crosses the cavity's horizon.
    """
    if a <= 0.0:
        raise DomainError("worldline requires a > 0")
    t = np.asarray(t, dtype=float)
    if np.any(np.abs(t) >= 1.0 / a):
        raise HorizonError(f"|t| >= 1/a = {1.0 / a}: detector on the horizon")
    chi = np.sqrt(1.0 / a**2 - t * t)
    tau = np.arctanh(a * t) / a
    if t.ndim == 0:
        return float(tau), float(chi)
    return tau, chi


def bob_window(params: PhysicalParams) -> float:
    """Half-width in Minkowski time of the inertial detector's cavity crossing.

    T = sqrt(a L (1 - a L / 4)) / a, always below the horizon time 1/a.
    """
    params.require_above_horizon()
    u = params.a * params.L
    return math.sqrt(u * (1.0 - u / 4.0)) / params.a


def rindler_transform(t: float, x: float, a: float):
    """(t, x) -> (tau, chi) in the frame comoving with the accelerated cavity.

    tau = atanh(t/x)/a, chi = sqrt(x^2 - t^2); requires the event to lie in
    the right Rindler wedge x > |t|.
    """
    if a <= 0.0:
        raise DomainError("transformation requires a > 0")
    if x <= abs(t):
        raise DomainError(f"event (t={t}, x={x}) outside the right Rindler wedge")
    return math.atanh(t / x) / a, math.sqrt(x * x - t * t)


def minkowski_from_rindler(tau: float, chi: float, a: float):
    """Inverse map, (tau, chi) -> (t, x) = (chi sinh(a tau), chi cosh(a tau))."""
    if a <= 0.0:
        raise DomainError("transformation requires a > 0")
    if chi <= 0.0:
        raise DomainError(f"chi must be positive, got {chi}")
    return chi * math.sinh(a * tau), chi * math.cosh(a * tau)


def conformal_coordinate(chi, a: float):
    """xi = ln(a chi)/a, the spatial coordinate in which the massless
    field equation takes its inertial form."""
    if a <= 0.0:
        raise DomainError("conformal coordinate requires a > 0")
    chi = np.asarray(chi, dtype=float)
    if np.any(chi <= 0.0):
        raise DomainError("chi must be positive")
    xi = np.log(a * chi) / a
    if chi.ndim == 0:
        return float(xi)
    return xi


@dataclass(frozen=True)
class WindowedWorldline:
    """A detector trajectory plus the parameter window where the coupling is on.

    evolution parameter s in [-T, T] is the detector's proper time: tau for
    the accelerated detector, Minkowski t for the inertial one.
    """

    scenario: Scenario
    params: PhysicalParams
    T: float

    def mode_coordinate(self, s):
        """Spatial argument of the cavity modes along the trajectory (x or chi)."""
        if self.scenario is Scenario.ACCELERATED_DETECTOR:
            return rob_worldline(self.params.a, s)[1]
        return bob_worldline(self.params.a, s)[1]

    def field_clock(self, s):
        """The cavity's stationary time along the trajectory (t or tau)."""
        if self.scenario is Scenario.ACCELERATED_DETECTOR:
            return rob_worldline(self.params.a, s)[0]
        return bob_worldline(self.params.a, s)[0]


def windowed_worldline(scenario: Scenario, params: PhysicalParams) -> WindowedWorldline:
    if scenario is Scenario.ACCELERATED_DETECTOR:
        return WindowedWorldline(scenario, params, rob_window(params))
    return WindowedWorldline(scenario, params, bob_window(params))
