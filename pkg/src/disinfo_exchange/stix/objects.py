"""Immutable STIX objects and bundles.

A :class:`StixObject` wraps the raw property dict.  Properties the platform
does not understand are carried along untouched — parse/serialize round
trips must not lose anything a peer platform sent us.  Objects of types
outside the supported subset are kept as opaque payloads.
"""

from __future__ import annotations

import copy
from datetime import datetime
from types import MappingProxyType
from typing import Any, Iterable, Mapping

from .errors import BundleSchemaError, InvalidIdError, RelationshipConstraintError
from .ids import (
    DOMAIN_OBJECT_TYPES,
    deterministic_id,
    new_random_id,
    require_valid_id,
)
from .timestamps import format_timestamp, parse_timestamp

SPEC_VERSION = "2.1"

#: The only relationship shapes the platform emits or accepts between
#: objects it understands: attribution, targeting and technique use, all
#: hanging off an intrusion set.
ALLOWED_RELATIONSHIP_TRIPLES = frozenset(
    {
        ("intrusion-set", "attributed-to", "threat-actor"),
        ("intrusion-set", "targets", "location"),
        ("intrusion-set", "uses", "attack-pattern"),
    }
)


class StixObject:
    """One STIX object, frozen at construction.

    Accessors parse on demand; ``properties`` exposes the raw mapping and
    ``to_dict`` hands out a deep copy safe to mutate.
    """

    __slots__ = ("_props",)

    def __init__(self, properties: Mapping[str, Any]):
        props = dict(properties)
        object_type = props.get("type")
        object_id = props.get("id")
        if not isinstance(object_type, str) or not object_type:
            raise BundleSchemaError("object is missing a usable 'type'")
        if not isinstance(object_id, str) or not object_id:
            raise BundleSchemaError("object is missing a usable 'id'")
        try:
            require_valid_id(object_id)
        except InvalidIdError as exc:
            raise BundleSchemaError(str(exc)) from None
        if not object_id.startswith(object_type + "--"):
            raise BundleSchemaError(
                f"id {object_id!r} does not agree with type {object_type!r}"
            )
        self._props = props

    # -- raw access ------------------------------------------------------

    @property
    def properties(self) -> Mapping[str, Any]:
        return MappingProxyType(self._props)

    def to_dict(self) -> dict[str, Any]:
        return copy.deepcopy(self._props)

    # -- typed accessors -------------------------------------------------

    @property
    def type(self) -> str:
        return self._props["type"]

    @property
    def id(self) -> str:
        return self._props["id"]

    @property
    def name(self) -> str | None:
        value = self._props.get("name")
        return value if isinstance(value, str) else None

    @property
    def description(self) -> str:
        value = self._props.get("description")
        return value if isinstance(value, str) else ""

    @property
    def created_at(self) -> datetime | None:
        raw = self._props.get("created")
        return parse_timestamp(raw) if isinstance(raw, str) else None

    @property
    def modified_at(self) -> datetime | None:
        raw = self._props.get("modified")
        return parse_timestamp(raw) if isinstance(raw, str) else None

    @property
    def relationship_type(self) -> str | None:
        value = self._props.get("relationship_type")
        return value if isinstance(value, str) else None

    @property
    def source_ref(self) -> str | None:
        value = self._props.get("source_ref")
        return value if isinstance(value, str) else None

    @property
    def target_ref(self) -> str | None:
        value = self._props.get("target_ref")
        return value if isinstance(value, str) else None

    @property
    def is_relationship(self) -> bool:
        return self.type == "relationship"

    @property
    def is_opaque(self) -> bool:
        """True for object types the platform passes through untouched."""
        return self.type not in DOMAIN_OBJECT_TYPES and self.type != "relationship"

    # -- derived copies --------------------------------------------------

    def with_modified(self, moment: datetime) -> "StixObject":
        """Copy of this object with ``modified`` replaced."""
        props = self.to_dict()
        props["modified"] = format_timestamp(moment)
        return StixObject(props)

    # -- dunder ----------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, StixObject):
            return NotImplemented
        return self._props == other._props

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"StixObject({self.id})"


class Bundle:
    """A STIX bundle: a wrapper id plus an ordered run of objects."""

    __slots__ = ("id", "objects")

    def __init__(self, bundle_id: str, objects: Iterable[StixObject]):
        require_valid_id(bundle_id)
        if not bundle_id.startswith("bundle--"):
            raise BundleSchemaError(f"not a bundle id: {bundle_id!r}")
        object.__setattr__(self, "id", bundle_id)
        object.__setattr__(self, "objects", tuple(objects))

    def __setattr__(self, name: str, value: Any) -> None:
        raise AttributeError("Bundle is immutable")

    @classmethod
    def new(cls, objects: Iterable[StixObject]) -> "Bundle":
        """Bundle with a fresh random wrapper id."""
        return cls(new_random_id("bundle"), objects)

    def to_dict(self) -> dict[str, Any]:
        return {
            "type": "bundle",
            "id": self.id,
            "objects": [obj.to_dict() for obj in self.objects],
        }

    def __len__(self) -> int:
        return len(self.objects)

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"Bundle({self.id}, {len(self.objects)} objects)"


# -- construction helpers ------------------------------------------------


def _require_name(object_type: str, name: str) -> str:
    if not name or not name.strip():
        raise BundleSchemaError(f"{object_type} requires a non-empty name")
    return name.strip()


def _domain_object(
    object_type: str,
    object_id: str,
    name: str,
    at: datetime,
    **extra: Any,
) -> StixObject:
    stamp = format_timestamp(at)
    props: dict[str, Any] = {
        "type": object_type,
        "spec_version": SPEC_VERSION,
        "id": object_id,
        "created": stamp,
        "modified": stamp,
        "name": name,
    }
    for key, value in extra.items():
        if value not in (None, "", [], ()):
            props[key] = value
    return StixObject(props)


def make_threat_actor(name: str, at: datetime) -> StixObject:
    """Threat actor keyed by its (normalized) name."""
    name = _require_name("threat-actor", name)
    return _domain_object(
        "threat-actor",
        deterministic_id("threat-actor", name),
        name,
        at,
    )


def make_location(name: str, at: datetime, country_code: str | None = None) -> StixObject:
    """Location for a targeted country; ``country`` is ISO 3166-1 alpha-2."""
    name = _require_name("location", name)
    return _domain_object(
        "location",
        deterministic_id("location", name),
        name,
        at,
        country=country_code,
    )


def make_intrusion_set(
    name: str,
    description: str,
    first_seen: datetime,
    at: datetime,
) -> StixObject:
    """Intrusion set for one incident; identity is (name, first-seen date)."""
    name = _require_name("intrusion-set", name)
    seed = f"{name}|{first_seen.date().isoformat()}"
    return _domain_object(
        "intrusion-set",
        deterministic_id("intrusion-set", seed),
        name,
        at,
        description=description.strip() if description else "",
        first_seen=format_timestamp(first_seen),
    )


def make_relationship(
    source: StixObject,
    relationship_type: str,
    target: StixObject,
    at: datetime,
) -> StixObject:
    """Relationship object for one of the allowed triples.

    The id is derived from ``source.id | type | target.id``, so the same
    edge always gets the same id no matter who re-submits it.
    """
    triple = (source.type, relationship_type, target.type)
    if triple not in ALLOWED_RELATIONSHIP_TRIPLES:
        raise RelationshipConstraintError(
            f"relationship {triple} is not one of the allowed shapes "
            f"{sorted(ALLOWED_RELATIONSHIP_TRIPLES)}"
        )
    stamp = format_timestamp(at)
    seed = f"{source.id}|{relationship_type}|{target.id}"
    return StixObject(
        {
            "type": "relationship",
            "spec_version": SPEC_VERSION,
            "id": deterministic_id("relationship", seed),
            "created": stamp,
            "modified": stamp,
            "relationship_type": relationship_type,
            "source_ref": source.id,
            "target_ref": target.id,
        }
    )


def object_from_properties(properties: Mapping[str, Any], index: int | None = None) -> StixObject:
    """Wrap parsed properties, pointing errors at the bundle index."""
    try:
        return StixObject(properties)
    except BundleSchemaError as exc:
        raise BundleSchemaError(str(exc), object_index=index) from None
