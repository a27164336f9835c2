"""Exception taxonomy shared by all qaccel modules.

Domain errors mean the inputs are outside the physically valid region;
convergence errors mean a numerical routine hit its iteration cap without
reaching its tolerance. The CLI maps these onto distinct exit codes.
"""


class QaccelError(Exception):
    """Base class for every error raised by this package."""


class DomainError(QaccelError, ValueError):
    """Input outside the valid parameter or coordinate domain."""


class HorizonError(DomainError):
    """Cavity or trajectory touches the Rindler horizon (a*L >= 2, |t| >= 1/a)."""


class GammaPoleError(DomainError):
    """Gamma function evaluated within 1e-14 of a non-positive real integer."""


class NonFiniteError(QaccelError):
    """A computation produced NaN or infinity that would otherwise escape."""


class ConvergenceError(QaccelError, RuntimeError):
    """A numerical routine failed to converge within its budget."""


class SeriesConvergenceError(ConvergenceError):
    """Power series exceeded its term cap before reaching tolerance."""


class QuadratureConvergenceError(ConvergenceError):
    """Adaptive quadrature hit the node cap without the levels agreeing."""


class RootScanError(ConvergenceError):
    """Root bracketing scan could not locate the requested number of roots."""


class InversionRangeError(DomainError):
    """Measured probability lies outside the reference curve on the bracket."""
