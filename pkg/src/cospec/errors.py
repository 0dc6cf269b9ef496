"""Exception hierarchy shared by every module."""


class CospecError(Exception):
    """Base class for all errors raised by this package."""


class GraphError(CospecError, ValueError):
    pass


class DuplicateEdge(GraphError):
    pass


class SelfLoop(GraphError):
    pass


class VertexOutOfRange(GraphError):
    pass


class NonSquare(CospecError, ValueError):
    pass


class NonSymmetric(CospecError, ValueError):
    pass


class TooLarge(CospecError, ValueError):
    pass


class NotAPartition(CospecError, ValueError):
    pass


class SizeMismatch(NotAPartition):
    """The two switching sides of a generalized GM partition differ in size."""


class Overlap(CospecError, ValueError):
    pass


class NotAdmissible(CospecError, ValueError):
    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class ColumnCaseViolation(CospecError, ValueError):
    pass


class RowSumNotConstant(CospecError, ValueError):
    pass


class InfeasibleParameters(CospecError, ValueError):
    pass


class ShapeMismatch(CospecError, ValueError):
    pass


class ParseError(CospecError, ValueError):
    pass


class BudgetExceeded(CospecError):
    """Search stopped early; ``partial`` holds what was found before the cutoff."""

    def __init__(self, message, partial=()):
        super().__init__(message)
        self.partial = list(partial)
        self.truncated = True
