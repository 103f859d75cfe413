"""Exception hierarchy shared by every module."""


class EdgeIdealError(ValueError):
    """Base class for all errors raised by this package."""


class InvalidVertex(EdgeIdealError):
    pass


class LoopRejected(EdgeIdealError):
    pass


class FormatError(EdgeIdealError):
    """Malformed graph6 or edge-list input.

    ``offset`` is the byte offset inside a single line, ``line`` the 1-based
    line number inside a stream; either may be ``None``.
    """

    def __init__(self, message, offset=None, line=None):
        self.offset = offset
        self.line = line
        where = []
        if line is not None:
            where.append(f"line {line}")
        if offset is not None:
            where.append(f"byte {offset}")
        if where:
            message = f"{message} ({', '.join(where)})"
        super().__init__(message)


class NoEdges(EdgeIdealError):
    """The edge ideal is zero, so the requested invariant is undefined."""

    def __init__(self, message="edge ideal is zero (graph has no edges)"):
        super().__init__(message)


class NotCameronWalker(EdgeIdealError):
    pass


class InvalidParams(EdgeIdealError):
    pass


class CoreNotBipartite(InvalidParams):
    pass


class CoreDisconnected(InvalidParams):
    pass


class DegenerateStar(InvalidParams):
    pass


class TooLarge(EdgeIdealError):
    pass


class SubsetScanTooLarge(TooLarge):
    pass


class InvalidN(EdgeIdealError):
    pass


class UnknownClass(EdgeIdealError):
    pass
