"""Exception types shared across the package."""


class CalauditError(Exception):
    """Base class for all calaudit errors."""


class SampleFormatError(CalauditError):
    """Raised when an input file cannot be parsed into a sample.

    Carries the 1-based row number of the offending record when known.
    """

    def __init__(self, message: str, row: int | None = None):
        if row is not None:
            message = f"row {row}: {message}"
        super().__init__(message)
        self.row = row


class SpaceMismatchError(CalauditError):
    """An operation received a sample in the wrong space (prediction vs logit)."""


class InfeasibleChainError(CalauditError):
    """Box plus Lipschitz chain constraints admit no feasible point."""


class DivergingFitError(CalauditError):
    """An iterative fit drove its parameters out of bounds (e.g. separable data)."""


class InternalCheckError(CalauditError):
    """A mathematical guarantee the library relies on was violated.

    This always indicates a bug in the library (or a broken installation),
    never a property of the user's data.  The CLI maps it to exit code 2.
    """
