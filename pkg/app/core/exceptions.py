"""
Domain errors raised by the numerical library.
"""


class SpectralError(Exception):
    """Base class for every error the numerical library raises."""
    exit_code = 1

    @property
    def name(self):
        return type(self).__name__


class BandAliasingError(SpectralError, ValueError):
    """Grid too small to hold the coefficient band without aliasing."""


class NearVanishingSymbol(SpectralError):
    """Symbol modulus drops below the vanishing tolerance on the grid."""
    exit_code = 3


class NonzeroWinding(SpectralError):
    """Symbol winds around the origin."""
    exit_code = 2

    def __init__(self, winding, message=None):
        self.winding = winding
        super().__init__(message or f'winding number is {winding}, not 0')


class SingularSection(SpectralError):
    """Finite Toeplitz section is numerically singular."""
    exit_code = 4


class SingularMomentSection(SpectralError):
    """Moment matrix defining a monic orthogonal polynomial is singular."""


class ContractionFailure(SpectralError):
    """Fixed-point equation could not be solved to tolerance."""


class NoContraction(SpectralError):
    """No n0 within range makes the reflection tail a contraction."""
    exit_code = 6


class ReflectionNotInvertible(SpectralError):
    """Reflection coefficient comes too close to zero on the grid."""


class PointOnCircle(SpectralError, ValueError):
    """Evaluation point lies on the unit circle."""


class SymmetryViolation(SpectralError, ValueError):
    """Series is not real-valued on the circle."""


class DomainError(SpectralError, ValueError):
    """Parameter outside the domain of a closed-form family."""


class WeightAxiomViolation(SpectralError, ValueError):
    """Sequence fails the Beurling weight axioms."""
