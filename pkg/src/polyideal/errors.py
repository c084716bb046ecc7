"""Exception hierarchy shared by all modules."""


class PolyIdealError(Exception):
    """Base class for every error raised by this package."""


class EmptyCollectionError(PolyIdealError, ValueError):
    def __init__(self, msg="empty collection"):
        super().__init__(msg)


class DegenerateIntervalError(PolyIdealError, ValueError):
    def __init__(self, msg="degenerate interval"):
        super().__init__(msg)


class NotPolyominoError(PolyIdealError, ValueError):
    def __init__(self, msg="collection is not a polyomino"):
        super().__init__(msg)


class NotLiftableError(PolyIdealError, ValueError):
    def __init__(self, msg="not liftable"):
        super().__init__(msg)


class NotACycleError(PolyIdealError, ValueError):
    def __init__(self, msg="not a cycle"):
        super().__init__(msg)


class DanglingVertexError(PolyIdealError, ValueError):
    def __init__(self, msg="dangling vertex"):
        super().__init__(msg)


class MarkedVertexError(PolyIdealError, ValueError):
    def __init__(self, msg="marked vertex not in collection"):
        super().__init__(msg)


class UnknownVariableError(PolyIdealError, KeyError):
    pass


class DegreeBoundError(PolyIdealError, ValueError):
    def __init__(self, msg="degree bound too large"):
        super().__init__(msg)


class UnsupportedOrientationError(PolyIdealError, ValueError):
    def __init__(self, msg="unsupported orientation"):
        super().__init__(msg)


class UnknownOverlayError(PolyIdealError, ValueError):
    pass


class ParseError(PolyIdealError, ValueError):
    """Input text could not be turned into a cell collection.

    ``line`` and ``column`` are 1-based and ``None`` when not applicable.
    """

    def __init__(self, msg, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f" (line {line}" + (f", column {column}" if column is not None else "") + ")"
        super().__init__(msg + where)
