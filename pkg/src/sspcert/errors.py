"""Exception hierarchy shared by every module.

All errors raised on bad input derive from :class:`SSPError`.  Errors that
originate from a text document carry the one-based ``line`` they were found on.
"""

from __future__ import annotations


class SSPError(Exception):
    def __init__(self, message: str, *, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class _ArcError(SSPError):
    def __init__(self, message: str, *, arc: int | None = None, line: int | None = None):
        self.arc = arc
        super().__init__(message, line=line)


class VertexOutOfRange(_ArcError):
    pass


class WeightOutOfRange(_ArcError):
    pass


class ArcOutOfRange(SSPError):
    pass


class CertLengthMismatch(SSPError):
    pass


class CertOutOfRange(SSPError):
    pass


class InvalidParams(SSPError):
    pass


class TooLargeForBruteForce(SSPError):
    pass


class NoTargetAvailable(SSPError):
    """No vertex of the certificate is eligible for the requested mutation."""


class FormatError(SSPError):
    """Base class for malformed ``.gr`` / ``.cert`` documents."""


class MalformedLine(FormatError):
    pass


class CountMismatch(FormatError):
    pass


class DuplicateHeader(FormatError):
    pass


class HeaderMismatch(FormatError):
    pass


class MissingVertex(FormatError):
    pass


class DuplicateVertex(FormatError):
    pass
