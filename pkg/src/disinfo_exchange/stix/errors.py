"""Exception types raised by the STIX layer."""

from __future__ import annotations


class StixError(Exception):
    """Base class for everything this package raises on purpose."""


class InvalidObjectTypeError(StixError, ValueError):
    """An object type outside the supported subset was requested."""


class InvalidIdError(StixError, ValueError):
    """An identifier does not match ``{type}--{uuid}``."""


class InvalidSeedError(StixError, ValueError):
    """A deterministic id was requested for an empty seed."""


class TimestampError(StixError, ValueError):
    """A timestamp string could not be parsed as RFC 3339 UTC."""


class BundleParseError(StixError, ValueError):
    """Input is not syntactically valid JSON.

    ``offset`` is the byte position where decoding gave up, when known.
    """

    def __init__(self, message: str, offset: int | None = None):
        super().__init__(message)
        self.offset = offset


class BundleSchemaError(StixError, ValueError):
    """JSON was readable but is not shaped like a STIX bundle.

    ``object_index`` points at the offending entry of ``objects`` when the
    problem is local to one of them.
    """

    def __init__(self, message: str, object_index: int | None = None):
        super().__init__(message)
        self.object_index = object_index


class RelationshipConstraintError(StixError, ValueError):
    """A relationship was requested outside the allowed triples."""
