"""Domain error hierarchy.

Every failure mode that a scan may turn into a gap, or the CLI into a
structured nonzero exit, derives from DomainError and exposes a stable
machine-readable ``name``.
"""


class DomainError(Exception):
    """Base class for all domain failures of the library."""

    @property
    def name(self) -> str:
        return type(self).__name__


class InvalidParameter(DomainError):
    """Deformation or channel parameter outside its admissible range."""


class SingularDeformation(DomainError):
    """Laguerre denominator vanishes; f(n) is numerically meaningless."""


class NonConvergent(DomainError):
    """A series failed to converge within the hard term cap."""


class NonNormalizable(DomainError):
    """A normalization sum came out nonpositive."""


class TruncationTooSmall(DomainError):
    """Requested Fock dimension cannot hold the state.

    ``required_dim`` is a best-effort estimate of a sufficient dimension.
    """

    def __init__(self, message: str, required_dim: int | None = None):
        super().__init__(message)
        self.required_dim = required_dim


class NegativeDeformedFactorial(DomainError):
    """A deformed factorial is nonpositive where the state still has weight."""


class DegenerateSuperposition(DomainError):
    """Cat normalization 2 + 2*Re<plus|minus> is numerically zero."""


class DegenerateDenominator(DomainError):
    """Visibility denominator underflowed; no measurement support at this n."""


class NoCrossing(DomainError):
    """Calibration scan found no bracketing interval."""


class SingularBracket(DomainError):
    """Every sign change in the calibration scan straddles a gap."""
