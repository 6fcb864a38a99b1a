"""Canonical JSON wire form for bundles.

Serialization is deterministic: UTF-8, keys sorted at every level, two
space indent.  Two structurally equal bundles always produce identical
bytes, which keeps fixtures diffable and lets tests compare payloads
byte-for-byte.
"""

from __future__ import annotations

import json
from typing import Any

from .errors import BundleParseError, BundleSchemaError
from .ids import is_valid_id
from .objects import Bundle, object_from_properties


def _canonical_bytes(payload: Any) -> bytes:
    return json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=False).encode("utf-8")


def serialize_bundle(bundle: Bundle) -> bytes:
    return _canonical_bytes(bundle.to_dict())


def serialize_object(obj) -> bytes:
    """Canonical bytes for a single object (used for fixtures and diffs)."""
    return _canonical_bytes(obj.to_dict())


def parse_bundle(data: bytes | str) -> Bundle:
    """Parse bundle bytes, preserving every property verbatim.

    Raises :class:`BundleParseError` for broken JSON (with the byte offset
    where decoding failed) and :class:`BundleSchemaError` when the JSON is
    fine but not a bundle.  Nothing partial ever escapes.
    """
    if isinstance(data, bytes):
        try:
            text = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise BundleParseError(f"not UTF-8: {exc}", offset=exc.start) from None
    else:
        text = data
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        # exc.pos is a character offset; report the byte position so it is
        # meaningful against the file on disk.
        byte_offset = len(text[: exc.pos].encode("utf-8"))
        raise BundleParseError(f"invalid JSON: {exc.msg}", offset=byte_offset) from None

    if not isinstance(payload, dict):
        raise BundleSchemaError("top level is not a JSON object")
    if payload.get("type") != "bundle":
        raise BundleSchemaError(f"top-level type is {payload.get('type')!r}, not 'bundle'")
    bundle_id = payload.get("id")
    if not isinstance(bundle_id, str) or not is_valid_id(bundle_id) or not bundle_id.startswith("bundle--"):
        raise BundleSchemaError(f"missing or malformed bundle id: {bundle_id!r}")
    raw_objects = payload.get("objects")
    if not isinstance(raw_objects, list):
        raise BundleSchemaError("bundle has no 'objects' array")

    objects = []
    for index, entry in enumerate(raw_objects):
        if not isinstance(entry, dict):
            raise BundleSchemaError(
                f"objects[{index}] is not a JSON object", object_index=index
            )
        objects.append(object_from_properties(entry, index=index))
    return Bundle(bundle_id, objects)
