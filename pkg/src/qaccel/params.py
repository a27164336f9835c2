"""Experiment configuration dataclasses shared across modules."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, replace

from .errors import DomainError, HorizonError


class Scenario(enum.Enum):
    """Which of the two kinematically twin setups is simulated.

    ACCELERATED_DETECTOR: uniformly accelerated detector crossing a static
    cavity ("rob" on the CLI). ACCELERATED_CAVITY: inertial detector crossed
    by a uniformly accelerated cavity ("bob").
    """

    ACCELERATED_DETECTOR = "rob"
    ACCELERATED_CAVITY = "bob"


class Normalization(enum.Enum):
    """Static-cavity mode amplitude convention.

    PAPER: 1/sqrt(k*pi), exact Klein-Gordon normalization only at m = 0.
    KLEIN_GORDON: 1/sqrt(omega_k * L), Klein-Gordon normalized for any mass.
    """

    PAPER = "paper"
    KLEIN_GORDON = "kg"


@dataclass(frozen=True)
class PhysicalParams:
    """Full physical configuration of one detector-cavity experiment.

    Natural units c = hbar = 1 and unit coupling constant; probabilities are
    in arbitrary units so only ratios and curve shapes carry meaning.

    a: proper acceleration (of the detector or of the cavity, per scenario)
    L: cavity proper length
    m: field mass (m = 0 allowed; the accelerated cavity then uses the
       conformal mode family)
    omega: detector gap, must be positive
    n1: occupation number of the lowest cavity mode
    """

    a: float
    L: float = 1.0
    m: float = 0.0
    omega: float = math.pi
    n1: int = 0

    def __post_init__(self):
        if not self.L > 0.0:
            raise DomainError(f"cavity length must be positive, got L = {self.L}")
        if self.m < 0.0:
            raise DomainError(f"field mass must be non-negative, got m = {self.m}")
        if not self.omega > 0.0:
            raise DomainError(f"detector gap must be positive, got omega = {self.omega}")
        if self.n1 < 0 or self.n1 != int(self.n1):
            raise DomainError(f"occupation must be a non-negative integer, got n1 = {self.n1}")
        if self.a < 0.0:
            raise DomainError(f"acceleration must be non-negative, got a = {self.a}")

    def require_accelerated(self) -> None:
        if self.a <= 0.0:
            raise DomainError("this operation requires a > 0")

    def require_above_horizon(self) -> None:
        """The whole cavity must stay on one side of the Rindler horizon."""
        self.require_accelerated()
        if self.a * self.L >= 2.0:
            raise HorizonError(
                f"cavity touches the event horizon: a*L = {self.a * self.L} >= 2"
            )

    def with_acceleration(self, a: float) -> "PhysicalParams":
        return replace(self, a=a)


def resonant_gap(L: float, m: float) -> float:
    """Detector gap tuned to the lowest cavity mode, sqrt((pi/L)^2 + m^2)."""
    return math.hypot(math.pi / L, m)
