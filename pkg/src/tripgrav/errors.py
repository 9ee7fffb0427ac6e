"""Exception types shared across the package.

Every error carries the name of the pipeline stage that raised it so the
CLI can emit machine-parsable ``module: message`` lines on stderr.
"""


class TripgravError(Exception):
    """Base class for all package errors."""

    def __init__(self, message, module="tripgrav"):
        super().__init__(message)
        self.module = module


class SchemaError(TripgravError):
    """Input data (CSV header, record width) does not match the contract."""


class ParseError(TripgravError):
    """A cell or field could not be parsed."""


class ValidationError(TripgravError):
    """A value violates a documented invariant."""


class CoverageError(TripgravError):
    """A flow references an OD pair missing from the separation matrix."""


class ImputationError(TripgravError):
    """A feature column has no observed values to impute from."""


class DomainError(TripgravError):
    """An argument is outside the mathematical domain of an operation."""


class SingularFitError(TripgravError):
    """The calibration design matrix is rank deficient."""


class UndefinedMetricError(TripgravError):
    """The metric is undefined for the given inputs (e.g. zero variance)."""


class TrainingError(TripgravError):
    """Model training failed, e.g. the loss became non-finite."""

    def __init__(self, message, epoch=None, module="ml_models"):
        super().__init__(message, module=module)
        self.epoch = epoch


class UnsupportedModelError(TripgravError):
    """The operation does not apply to this model family."""
