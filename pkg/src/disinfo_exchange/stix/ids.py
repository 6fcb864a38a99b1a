"""Identifier rules for the STIX subset handled by the platform.

Every object id is ``{type}--{uuid}``.  Ids for actors, locations,
intrusion sets and relationships are *name-based* (UUIDv5 in a fixed
namespace over a normalized seed) so that re-submitting the same incident
reproduces the same ids instead of growing duplicate nodes.  Only bundle
wrappers get throwaway random ids.
"""

from __future__ import annotations

import re
import uuid
from typing import Final

from .errors import InvalidIdError, InvalidObjectTypeError, InvalidSeedError

__all__ = [
    "DOMAIN_OBJECT_TYPES",
    "SUPPORTED_OBJECT_TYPES",
    "ID_PATTERN",
    "PLATFORM_NAMESPACE",
    "new_random_id",
    "deterministic_id",
    "normalize_seed",
    "is_valid_id",
    "split_id",
    "require_valid_id",
]

#: SDO types the platform creates or interprets.
DOMAIN_OBJECT_TYPES: Final = frozenset(
    {"intrusion-set", "threat-actor", "location", "attack-pattern"}
)

#: Everything ids may be minted for: the domain types, relationships and
#: bundle wrappers.
SUPPORTED_OBJECT_TYPES: Final = DOMAIN_OBJECT_TYPES | {"relationship", "bundle"}

ID_PATTERN: Final = re.compile(
    r"^[a-z][a-z0-9-]*--"
    r"[0-9a-fA-F]{8}-[0-9a-fA-F]{4}-[0-9a-fA-F]{4}-[0-9a-fA-F]{4}-[0-9a-fA-F]{12}$"
)

#: Fixed namespace for every name-based id this platform mints.  The value
#: is arbitrary but must never change: stable ids across installs and
#: re-imports depend on it.
PLATFORM_NAMESPACE: Final = uuid.UUID("6ba2c167-5f5e-47a3-aca2-e66c60e5f77b")

_WS_RUN = re.compile(r"\s+")


def _require_supported(object_type: str) -> None:
    if object_type not in SUPPORTED_OBJECT_TYPES:
        raise InvalidObjectTypeError(
            f"unsupported STIX type {object_type!r}; expected one of "
            f"{sorted(SUPPORTED_OBJECT_TYPES)}"
        )


def normalize_seed(text: str) -> str:
    """Trim, lowercase and collapse internal whitespace."""
    return _WS_RUN.sub(" ", text.strip()).lower()


def new_random_id(object_type: str) -> str:
    """Mint a random (UUIDv4) id for *object_type*."""
    _require_supported(object_type)
    return f"{object_type}--{uuid.uuid4()}"


def deterministic_id(object_type: str, seed: str) -> str:
    """Mint the name-based id for *object_type* derived from *seed*.

    The seed is normalized first, so ``"  Russia "`` and ``"russia"``
    collapse to the same id.  An empty (or all-whitespace) seed is a
    programming error and raises :class:`InvalidSeedError`.
    """
    _require_supported(object_type)
    normalized = normalize_seed(seed)
    if not normalized:
        raise InvalidSeedError(f"empty seed for deterministic {object_type} id")
    return f"{object_type}--{uuid.uuid5(PLATFORM_NAMESPACE, f'{object_type}|{normalized}')}"


def is_valid_id(value: str) -> bool:
    return isinstance(value, str) and ID_PATTERN.match(value) is not None


def split_id(value: str) -> tuple[str, str]:
    """Return ``(type, uuid)`` for a well-formed id."""
    require_valid_id(value)
    object_type, _, tail = value.partition("--")
    return object_type, tail


def require_valid_id(value: str) -> str:
    if not is_valid_id(value):
        raise InvalidIdError(f"malformed STIX id: {value!r}")
    return value
