"""Exception hierarchy shared by every module in the package."""


class SsspError(Exception):
    """Base class for all errors raised by floatsssp."""


# graph ingestion and construction

class GraphError(SsspError, ValueError):
    pass


class MalformedLine(GraphError):
    def __init__(self, message: str, lineno: int | None = None):
        self.lineno = lineno
        where = f"line {lineno}: " if lineno is not None else ""
        super().__init__(f"{where}{message}")


class CountMismatch(GraphError):
    def __init__(self, declared: int, actual: int):
        self.declared = declared
        self.actual = actual
        super().__init__(f"problem line declares {declared} arcs, found {actual}")


class NegativeWeight(GraphError):
    pass


class InvalidWeight(GraphError):
    """NaN or infinite weight."""


class EmptyEdgeSet(GraphError):
    pass


class InvalidBounds(GraphError):
    pass


class InvalidParams(GraphError):
    pass


# integer queues

class QueueError(SsspError):
    pass


class DuplicateId(QueueError, KeyError):
    pass


class UnknownId(QueueError, KeyError):
    pass


class KeyIncrease(QueueError, ValueError):
    pass


class MonotonicityViolation(QueueError, ValueError):
    pass


class KeyRangeOverflow(QueueError, OverflowError):
    pass


# float adapter

class NonPositiveDelta(SsspError, ValueError):
    pass


class FloatKeyIncrease(SsspError, ValueError):
    pass


class KeyGapViolation(SsspError, AssertionError):
    pass


# solvers

class InvalidSource(SsspError, ValueError):
    pass


class ZeroDeltaRefused(SsspError, ValueError):
    """The graph has a zero-weight edge; the integer-key reduction does not apply."""


class NoZeroEdge(SsspError, ValueError):
    pass


class SettledNodeRelaxed(SsspError, AssertionError):
    """A relaxation improved a node that had already been extracted."""


class DemonstrationFailed(SsspError):
    pass
