"""Exception taxonomy shared across the package.

All errors raised on bad *input* derive from :class:`UrybenchError`, so the
CLI and service can map them to a single "input error" channel.  Failures
discovered while *checking* something valid (a broken monoid table, a
triangle violation) are reported as data, not raised.
"""

from __future__ import annotations


class UrybenchError(Exception):
    """Base class for all input-side failures."""

    def __init__(self, message: str, witness: object | None = None):
        super().__init__(message)
        self.message = message
        self.witness = witness


class StructuralError(UrybenchError):
    """Malformed input: bad file syntax, missing rows, duplicate identifiers."""


class DomainError(UrybenchError):
    """Well-formed input with an out-of-range value or unknown reference."""


class PreconditionError(UrybenchError):
    """Input that names valid objects but violates an operation's precondition."""


class UnsupportedOperationError(UrybenchError):
    """Operation requires structure the chosen monoid does not have."""
