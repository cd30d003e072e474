"""Exception hierarchy. Each class carries the CLI exit code it maps to."""

from __future__ import annotations


class WienerError(Exception):
    exit_code = 1


class GraphParseError(WienerError, ValueError):
    """Malformed edge list: bad token, self-loop, duplicate edge, id too large."""

    exit_code = 1

    def __init__(self, message: str, line: int | None = None) -> None:
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class InvalidGraphError(WienerError, ValueError):
    exit_code = 1


class DisconnectedGraphError(WienerError):
    exit_code = 2


class UnsupportedClassError(WienerError):
    """Connected graph that is neither a tree nor unicyclic (or is empty)."""

    exit_code = 3


class StripError(UnsupportedClassError):
    """Leaf stripping left a residual that is not a single cycle."""


class IndexOverflowError(WienerError, OverflowError):
    exit_code = 4


class GuardrailError(WienerError):
    """Input size exceeds the cap configured for a superlinear algorithm."""

    exit_code = 6


class InsufficientDataError(WienerError):
    exit_code = 1
