"""Exception hierarchy shared by all chebkit modules."""


class ChebkitError(Exception):
    """Base class for every error raised by chebkit."""


class InvalidDimensionError(ChebkitError, ValueError):
    pass


class DimensionMismatchError(ChebkitError, ValueError):
    pass


class EmptyFamilyError(ChebkitError, ValueError):
    pass


class InconsistentBoundsError(ChebkitError, ValueError):
    """Lower envelope exceeds the upper envelope somewhere."""

    def __init__(self, message, index=None):
        super().__init__(message)
        self.index = index


class ClopenRequiredError(ChebkitError, ValueError):
    pass


class NotInSubspaceError(ChebkitError, ValueError):
    pass


class InsertionInfeasibleError(ChebkitError, ValueError):
    """Raised when the sandwich g <= alpha <= f (or clopen-ness) fails at ``index``."""

    def __init__(self, message, index):
        super().__init__(message)
        self.index = index


class EmptyBodyError(ChebkitError, ValueError):
    pass


class EmptySetError(ChebkitError, ValueError):
    pass


class SolverError(ChebkitError, RuntimeError):
    pass


class NeedsBoundsError(ChebkitError, ValueError):
    pass


class ResolutionError(ChebkitError, ValueError):
    pass


class NotDiscreteError(ChebkitError, ValueError):
    pass


class InstanceFormatError(ChebkitError, ValueError):
    """An instance file is not valid JSON or does not follow the schema."""
