class ErIdealsError(Exception):
    """Base class for all errors raised by this package."""


class ParameterError(ErIdealsError, ValueError):
    """An argument violates an operation's precondition."""


class DomainError(ParameterError):
    """A bound or formula is evaluated outside the region where it applies."""


class ResourceLimitError(ErIdealsError, RuntimeError):
    """An enumeration would exceed its configured size limit."""


class GraphFormatError(ParameterError):
    """A graph file could not be parsed."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
