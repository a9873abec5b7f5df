"""Exception hierarchy shared by every module."""


class HopfError(Exception):
    """Base class for all library errors."""


class DomainError(HopfError, ValueError):
    """An argument lies outside the domain of the operation."""


class UnsupportedKindError(HopfError):
    """The operation is not defined for this kind of Hopf manifold."""


class PreconditionError(HopfError):
    """A documented precondition of the operation does not hold."""


class ClassificationError(HopfError):
    """The data does not describe an admissible bundle."""


class ModelInconsistencyError(HopfError):
    """Derived quantities contradict each other (e.g. a negative rank)."""


class UndefinedCasimirError(HopfError):
    """A Casimir was evaluated at a vertical component of the graph."""


class CodecError(HopfError, ValueError):
    """Malformed JSON input; ``path`` locates the offending node."""

    def __init__(self, message: str, path: str = "$"):
        super().__init__(f"{path}: {message}")
        self.path = path
