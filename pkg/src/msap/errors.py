class MsapError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(MsapError, ValueError):
    """Arguments outside the domain an operation is defined on."""


class BudgetExceeded(MsapError):
    """A computation would exceed its configured state or edge budget."""


class PatternLengthMismatch(MsapError, ValueError):
    pass


class GridParseError(MsapError, ValueError):
    def __init__(self, message: str, row: int, col: int):
        super().__init__(message)
        self.row = row
        self.col = col
