"""STIX 2.1 subset: objects, ids, timestamps, bundles, validation."""

from .errors import (
    BundleParseError,
    BundleSchemaError,
    InvalidIdError,
    InvalidObjectTypeError,
    InvalidSeedError,
    RelationshipConstraintError,
    StixError,
    TimestampError,
)
from .ids import (
    DOMAIN_OBJECT_TYPES,
    ID_PATTERN,
    PLATFORM_NAMESPACE,
    SUPPORTED_OBJECT_TYPES,
    deterministic_id,
    is_valid_id,
    new_random_id,
    normalize_seed,
    split_id,
)
from .objects import (
    ALLOWED_RELATIONSHIP_TRIPLES,
    SPEC_VERSION,
    Bundle,
    StixObject,
    make_intrusion_set,
    make_location,
    make_relationship,
    make_threat_actor,
)
from .serialization import parse_bundle, serialize_bundle, serialize_object
from .timestamps import (
    EPOCH,
    MIN_TICK,
    format_timestamp,
    now_utc,
    parse_date,
    parse_timestamp,
)
from .validation import BundleViolation, validate_bundle

__all__ = [
    "ALLOWED_RELATIONSHIP_TRIPLES",
    "Bundle",
    "BundleParseError",
    "BundleSchemaError",
    "BundleViolation",
    "DOMAIN_OBJECT_TYPES",
    "EPOCH",
    "ID_PATTERN",
    "InvalidIdError",
    "InvalidObjectTypeError",
    "InvalidSeedError",
    "MIN_TICK",
    "PLATFORM_NAMESPACE",
    "RelationshipConstraintError",
    "SPEC_VERSION",
    "SUPPORTED_OBJECT_TYPES",
    "StixError",
    "StixObject",
    "TimestampError",
    "deterministic_id",
    "format_timestamp",
    "is_valid_id",
    "make_intrusion_set",
    "make_location",
    "make_relationship",
    "make_threat_actor",
    "new_random_id",
    "normalize_seed",
    "now_utc",
    "parse_bundle",
    "parse_date",
    "parse_timestamp",
    "serialize_bundle",
    "serialize_object",
    "split_id",
    "validate_bundle",
]
