"""Exception types shared across the package."""

from __future__ import annotations


class PgcapError(Exception):
    """Base class for all package errors."""


class InputError(PgcapError, ValueError):
    """Malformed presentation, element or parameter."""


class ParseError(InputError):
    """Ill-formed presentation text; carries the offending line number."""

    def __init__(self, message: str, line: int | None = None) -> None:
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class ResourceError(PgcapError, RuntimeError):
    """A computation would exceed a configured or hard cap."""


class ConsistencyError(PgcapError):
    """A presentation failed its consistency test words."""

    def __init__(self, message: str, word: str | None = None) -> None:
        self.word = word
        super().__init__(message if word is None else f"{message} (test word {word})")
