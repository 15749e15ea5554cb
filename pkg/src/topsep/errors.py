"""Exception types shared across the package."""


class TopsepError(Exception):
    """Base class for every error raised by topsep."""


class NotATopology(TopsepError, ValueError):
    """A family of sets fails the topology axioms.

    ``witness`` holds the offending sets: a single missing set, or the pair
    whose union/intersection is absent.
    """

    def __init__(self, message, witness=()):
        super().__init__(message)
        self.witness = tuple(witness)


class EmptyCarrier(TopsepError, ValueError):
    pass


class BoundExceeded(TopsepError, ValueError):
    pass


class NotAClosureOperator(TopsepError, ValueError):
    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class NotABijection(TopsepError, ValueError):
    pass


class Unrepresentable(TopsepError, ValueError):
    """A described-set result fell outside its family's set algebra."""


class Unsupported(TopsepError, LookupError):
    """No computed or documented verdict exists for this family/axiom pair."""
