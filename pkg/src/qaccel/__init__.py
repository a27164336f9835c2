"""qaccel: cavity Unruh-DeWitt detector response under uniform acceleration.

Simulates the click probability of a point-like detector coupled to a massive
scalar field in a 1-D cavity for two kinematically twin scenarios (detector
accelerated through a static cavity, or inertial detector crossed by an
accelerated cavity) and inverts the difference into a local accelerometer.
"""

__version__ = "0.1.0"

from .errors import (
    ConvergenceError,
    DomainError,
    HorizonError,
    InversionRangeError,
    QaccelError,
)
from .experiments import (
    GridSpec,
    SweepConfig,
    SweepMode,
    conformal_check,
    default_grid,
    discriminate_frame,
    estimate_acceleration,
    panel_config,
    sweep,
)
from .modes import (
    InertialModeSet,
    RindlerModeSet,
    build_rindler_modes,
    inertial_frequency,
    inertial_mode,
    kg_inner_product,
    rindler_boundaries,
    rindler_mode,
    rindler_normalization,
    rindler_spectrum,
)
from .params import Normalization, PhysicalParams, Scenario, resonant_gap
from .response import (
    ProbabilityBreakdown,
    stimulated_only_probability,
    transition_probability,
)

__all__ = [
    "__version__",
    "ConvergenceError", "DomainError", "HorizonError", "InversionRangeError",
    "QaccelError",
    "GridSpec", "SweepConfig", "SweepMode", "conformal_check", "default_grid",
    "discriminate_frame", "estimate_acceleration", "panel_config", "sweep",
    "InertialModeSet", "RindlerModeSet", "build_rindler_modes",
    "inertial_frequency", "inertial_mode", "kg_inner_product",
    "rindler_boundaries", "rindler_mode", "rindler_normalization",
    "rindler_spectrum",
    "Normalization", "PhysicalParams", "Scenario", "resonant_gap",
    "ProbabilityBreakdown", "stimulated_only_probability",
    "transition_probability",
]
