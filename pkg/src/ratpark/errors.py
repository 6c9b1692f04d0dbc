"""Exception hierarchy shared by all ratpark modules."""


class RatparkError(Exception):
    """Base class for all library errors."""


class NotAParkingWord(RatparkError):
    pass


class LetterOutOfRange(RatparkError):
    pass


class DimensionMismatch(RatparkError):
    pass


class NotCoprime(RatparkError):
    pass


class NotDyck(RatparkError):
    pass


class NotDominant(RatparkError):
    pass


class NotInSommers(RatparkError):
    pass


class LevelNotRemovable(RatparkError):
    pass


class InsufficientGap(RatparkError):
    pass


class IterationBudgetExhausted(RatparkError):
    """The orbit solver ran out of word applications before resolving."""


class InternalInconsistency(RatparkError):
    """A guaranteed invariant failed; carries a witness when available.

    Raised, for example, when the orbit of a coprime parking word closes
    into a cycle of period greater than one, which the theory rules out.
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class SchemaViolation(RatparkError):
    """JSON input rejected; ``path`` locates the offending field."""

    def __init__(self, path, message):
        super().__init__(f"{path}: {message}")
        self.path = path
