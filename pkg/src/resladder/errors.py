"""Typed errors raised by the resonance-ladder library."""


class ResladderError(Exception):
    """Base class for all library errors."""


class NonPositiveSeparation(ResladderError):
    """Half-separation ell must be a finite positive real."""


class InvalidHalf(ResladderError):
    """A half-potential violates a structural invariant."""


class NotPointwiseEvaluable(ResladderError):
    """Pointwise evaluation requested for a distributional potential."""


class DenominatorVanishes(ResladderError):
    """A factor denominator of the characteristic function vanished."""

    def __init__(self, message, factor=None):
        super().__init__(message)
        self.factor = factor


class CotangentPole(ResladderError):
    """Closed-form step evaluation hit a cotangent pole."""


class ZeroStrength(ResladderError):
    """Delta strength must be nonzero."""


class ZeroWavenumber(ResladderError):
    """Operation undefined at k = 0."""


class EvaluationFailed(ResladderError):
    """A numerical evaluation produced errors or non-finite values."""


class NoAdmissibleRadius(ResladderError):
    """No disk radius satisfies the closeness-to-one predicate."""


class NotConverged(ResladderError):
    """Fixed-point iteration exhausted its budget."""

    def __init__(self, message, last_iterate=None, last_step=None):
        super().__init__(message)
        self.last_iterate = last_iterate
        self.last_step = last_step


class OutOfCertifiedRange(ResladderError):
    """Requested ladder index lies outside the certified index range."""


class LogArgumentZero(ResladderError):
    """Characteristic function vanished where its log is required."""


class ZeroOnContour(ResladderError):
    """Counting contour passes through (or too near) a root."""


class PhaseTrackingUnresolved(ResladderError):
    """Winding computation could not resolve the phase within budget."""


class DerivativeVanished(ResladderError):
    """Newton refinement hit a vanishing derivative."""


class ConfigError(ResladderError):
    """Run configuration is malformed."""
