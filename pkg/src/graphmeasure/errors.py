"""Exception hierarchy shared by every module."""


class GraphMeasureError(Exception):
    """Base class for all library errors."""


class ParseError(GraphMeasureError, ValueError):
    """Malformed graph file, word literal, set literal or expression."""

    def __init__(self, message, line=None, column=None):
        self.message = message
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)


class IdentifierError(GraphMeasureError, LookupError):
    """A vertex or edge identifier that the graph does not declare."""


class DomainError(GraphMeasureError, ValueError):
    """An argument outside the domain of a measure, map or operation."""


class UndefinedEndpointError(DomainError):
    """Endpoint requested from the empty word."""


class DiagramSetTooLarge(GraphMeasureError):
    """Exact diagram enumeration exceeded the configured state limit."""
