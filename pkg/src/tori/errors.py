"""Exception types shared by the computation modules and the CLI."""


class TorusError(Exception):
    """Base class for every error raised by this package."""


class InvalidInput(TorusError, ValueError):
    """Input data violates a documented invariant (bad table, bad action, ...)."""


class NotWellDefined(TorusError):
    """An endomorphism does not descend to the requested quotient."""


class SingularMatrix(TorusError):
    pass


class NotGoodReduction(TorusError):
    pass


class NotCyclic(InvalidInput):
    pass


class GroupMismatch(InvalidInput):
    pass


class InternalError(TorusError):
    """A computed result contradicts a theorem; indicates a bug."""


class CrossCheckFailure(InternalError):
    """Two independent computations of the same invariant disagree."""
