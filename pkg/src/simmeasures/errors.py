"""Typed errors raised by the measures.

Every error a measure can raise on bad or singular input derives from
:class:`MeasureError`, so callers (and the CLI) can tell precondition
failures apart from programming errors.
"""


class MeasureError(ValueError):
    """Base class for precondition failures of a measure."""


class InvalidVector(MeasureError):
    pass


class InvalidPdf(MeasureError):
    pass


class ZeroMassHistogram(MeasureError):
    pass


class DimensionMismatch(MeasureError):
    pass


class ZeroVector(MeasureError):
    pass


class DegenerateDenominator(MeasureError):
    pass


class InvalidExponent(MeasureError):
    pass


class ZeroRange(MeasureError):
    pass


class AllZeroAdkins(MeasureError):
    pass


class NegativeRadicand(MeasureError):
    """Lorentzian body form: the radicand is negative.

    Points usually need pre-processing before this form is usable.
    """


class IdenticalInputs(MeasureError):
    pass


class DisjointSupport(MeasureError):
    pass


class AbsoluteContinuityViolation(MeasureError):
    pass


class ZeroExpectedBin(MeasureError):
    pass


class ZeroVariance(MeasureError):
    pass


class SingularCovariance(MeasureError):
    pass


class NegativeQuadraticForm(MeasureError):
    pass


class LengthMismatch(MeasureError):
    pass


class SizeLimit(MeasureError):
    pass


class InvalidSequence(MeasureError):
    pass


class MissingWeight(MeasureError):
    pass


class InvalidK(MeasureError):
    pass


class InvalidN(MeasureError):
    pass


class InvalidScale(MeasureError):
    pass


class EmptyUnion(MeasureError):
    pass


class EmptyProfile(MeasureError):
    pass


class UnknownMeasure(MeasureError):
    pass


class IncompatibleDomain(MeasureError):
    pass


class PairError(MeasureError):
    """A matrix cell failed; carries the row/column and the original error."""

    def __init__(self, row: int, col: int, cause: MeasureError):
        super().__init__(f"row {row}, column {col}: {type(cause).__name__}: {cause}")
        self.row = row
        self.col = col
        self.cause = cause

    def __reduce__(self):
        return (PairError, (self.row, self.col, self.cause))
