"""Exception types shared by the library and the command line front end.

Every error raised on purpose derives from :class:`DomainError`; the CLI maps
those to exit status 1 and leaves argparse failures at status 2.
"""

from __future__ import annotations


class DomainError(Exception):
    """Base class for mathematical or input errors raised by the library."""


class InvalidArgument(DomainError, ValueError):
    pass


class ParseError(DomainError, ValueError):
    """Raised by the braid-word and generator-word parsers.

    ``position`` is the character offset of the offending token.
    """

    def __init__(self, message: str, position: int = 0):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class UnsupportedRing(DomainError):
    pass


class NotQuasiIdempotent(DomainError):
    pass
