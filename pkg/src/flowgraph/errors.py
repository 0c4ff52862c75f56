"""Exception hierarchy. Every input error carries a 1-based source position."""
from __future__ import annotations


class FlowgraphError(Exception):
    """Base class for all user-facing input errors."""

    def __init__(self, message: str, line: int = 0, column: int = 0):
        super().__init__(message)
        self.message = message
        self.line = line
        self.column = column

    def __str__(self) -> str:
        if self.line:
            return f"{self.line}:{self.column}: {self.message}"
        return self.message


class LexError(FlowgraphError):
    pass


class ParseError(FlowgraphError):
    def __init__(self, message: str, line: int = 0, column: int = 0, expected: tuple[str, ...] = ()):
        super().__init__(message, line, column)
        self.expected = expected


class BindError(FlowgraphError):
    pass


class SpecParseError(FlowgraphError):
    pass


class InternalError(Exception):
    """An invariant that earlier phases should have guaranteed was broken."""
