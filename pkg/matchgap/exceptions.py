class MatchGapError(Exception):
    """Base class of every error raised by matchgap."""


class GraphInputError(MatchGapError):
    """The input graph or its arguments are malformed."""


class IndexOutOfRangeError(GraphInputError):
    pass


class SelfLoopError(GraphInputError):
    pass


class UnknownEdgeError(GraphInputError):
    pass


class DuplicateEdgeError(GraphInputError):
    pass


class HeaderMismatchError(GraphInputError):
    pass


class EdgeListSyntaxError(GraphInputError):
    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


class NotBipartitionError(GraphInputError):
    pass


class NotCubicError(GraphInputError):
    pass


class HasBridgeError(GraphInputError):
    pass


class InvalidChoiceError(GraphInputError):
    pass


class InvalidParameterError(GraphInputError):
    pass


class SizeGuardError(MatchGapError):
    def __init__(self, n: int, limit: int):
        super().__init__(
            f"graph has {n} vertices, above the size limit of {limit}; "
            "raise the limit or force the run"
        )
        self.n = n
        self.limit = limit


class NotApplicableError(MatchGapError):
    pass


class InvariantViolationError(MatchGapError):
    """A proven inequality or structure failed: an implementation bug."""


class GiveUpError(MatchGapError):
    pass
