"""Exception hierarchy shared by every module of the package."""


class GraphCurveError(Exception):
    pass


class GraphInputError(GraphCurveError, ValueError):
    """Malformed graph, subset or matroid input."""


class PreconditionError(GraphCurveError, ValueError):
    """An operation was called on a graph outside its hypotheses."""


class ResourceLimitError(GraphCurveError, RuntimeError):
    """An exhaustive enumeration would exceed the configured bound."""


class GenericityError(GraphCurveError, RuntimeError):
    """Hyperplane resampling ran out of attempts."""

    def __init__(self, message, seed=None):
        super().__init__(message)
        self.seed = seed


class VerificationError(GraphCurveError, AssertionError):
    """A cross-check between two independent computations disagreed."""

    def __init__(self, message, subset=None):
        super().__init__(message)
        self.subset = subset
