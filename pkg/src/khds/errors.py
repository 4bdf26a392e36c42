"""Exception types shared across the package."""


class KhdsError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(KhdsError):
    """Malformed input text. Carries the 1-based line number when known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class DisconnectedGraph(KhdsError):
    pass


class NotATree(KhdsError):
    pass


class NotUnicyclic(KhdsError):
    pass


class NotCactus(KhdsError):
    pass


class InvalidK(KhdsError):
    pass


class EmptySetError(KhdsError):
    pass


class TooLargeError(KhdsError):
    """Input exceeds the guard limit of an exhaustive or quadratic routine."""


class NoArcsError(KhdsError):
    pass


class RhoNotInDomain(KhdsError):
    pass


class RhoNotOnCycle(KhdsError):
    pass


class NoBackEdge(KhdsError):
    """The chosen root has no back edge, so it tops no cycle."""


class BadShape(KhdsError):
    """Generator parameters cannot produce the requested graph class."""


class InvalidM(KhdsError):
    pass


class InternalInvariantError(KhdsError):
    """A solver produced a state that violates one of its own invariants."""
