"""Exception types shared across the package.

Every numeric failure carries the offending parameters in ``params`` so the
service layer and CLI can report them without re-deriving anything.
"""

from __future__ import annotations


class TfdcxError(Exception):
    """Base class for all package-specific failures."""

    def __init__(self, message: str, params: dict | None = None):
        super().__init__(message)
        self.params = params or {}


class NonFiniteParameter(TfdcxError):
    """A derived quantity overflowed or underflowed out of float range."""


class ComplexSpectrum(TfdcxError):
    """The characteristic cubic has a conjugate pair beyond tolerance.

    Should never occur for valid Gaussian inputs; signals either invalid
    parameters or a numeric failure upstream.
    """


class DegenerateDenominator(TfdcxError):
    """Perturbative eigenvalue expansion hit a vanishing shared denominator."""


class ZeroEigenvalue(TfdcxError):
    """A spectrum eigenvalue is exactly zero, so its log-cost diverges."""


class NonPositiveEigenvalue(TfdcxError):
    """A spectrum fed to the cost functional contains a non-positive value."""


class InvalidKnob(TfdcxError):
    """A sweep referenced a parameter name that does not exist."""


class SingularDecomposition(TfdcxError):
    """The group-factorization denominator vanished for these exponents."""


class SimpleLimitWarning(UserWarning):
    """Simple-limit formulas evaluated outside their validity window."""


class ClampedSqueezingWarning(UserWarning):
    """The squeezing parameter was clamped to zero for a huge beta*omega."""
