"""Exception types raised by the exdom library."""


class ExdomError(Exception):
    """Base class for all library-specific errors."""


# --- numerics ---------------------------------------------------------------

class NonFiniteSample(ExdomError):
    """An integrand returned NaN/inf; the path likely hits a pole."""


class ToleranceNotMet(ExdomError):
    """Adaptive subdivision budget exhausted before reaching tolerance."""

    def __init__(self, message, value=None, error=None):
        super().__init__(message)
        self.value = value
        self.error = error


class NoConvergence(ExdomError):
    """Newton iteration exceeded its iteration budget."""


class SingularJacobian(ExdomError):
    """Newton iteration hit a (numerically) singular Jacobian."""


class StencilOutsideDomain(ExdomError):
    """A finite-difference stencil point could not be evaluated."""


class NoBracket(ExdomError):
    """Root bracket endpoints do not have opposite signs."""


# --- weierstrass / correspondence -------------------------------------------

class PoleOnPath(ExdomError):
    """An integration path passes through (or too close to) a puncture."""


class ZeroGaussMap(ExdomError):
    """The Gauss map vanishes where a nonzero value is required."""


class OutsideDomain(ExdomError):
    """A point lies outside the domain of definition."""


class PathLeavesDomain(ExdomError):
    """An integration path leaves the closure of the domain."""


class InversionFailed(ExdomError):
    """Numerical inversion of a forward map did not converge."""


# --- families / verify / cli -------------------------------------------------

class InvalidParameter(ExdomError):
    """A family parameter is outside its admissible range."""


class BadComponent(ExdomError):
    """A boundary component index is not valid for the family."""


class NotNormalized(ExdomError):
    """A map fails the required normalization at the base point."""


class EmptyGrid(ExdomError):
    """A verification grid contains no usable interior points."""


class CriticalPoint(ExdomError):
    """The gradient vanishes where the computation needs it nonzero."""


class MeshDegenerate(ExdomError):
    """Too many surface-grid nodes failed to evaluate."""
