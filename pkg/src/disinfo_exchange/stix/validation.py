"""Structural validation for whole bundles.

``validate_bundle`` never raises; it returns the list of violations so a
caller can decide whether to reject, repair or report.  Relationships that
touch object types outside the supported subset are logged as warnings,
not flagged — foreign graphs are allowed to pass through.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

from .ids import is_valid_id
from .objects import ALLOWED_RELATIONSHIP_TRIPLES, Bundle

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BundleViolation:
    code: str
    message: str
    object_id: str | None = None


def validate_bundle(bundle: Bundle) -> list[BundleViolation]:
    """Check ids, duplicates, dangling references and relationship shapes."""
    violations: list[BundleViolation] = []

    seen: dict[str, int] = {}
    by_id: dict[str, object] = {}
    for obj in bundle.objects:
        # Construction already guarantees well-formed ids; re-check anyway so
        # hand-built bundles get the same report.
        if not is_valid_id(obj.id):
            violations.append(
                BundleViolation("malformed-id", f"malformed id {obj.id!r}", obj.id)
            )
            continue
        seen[obj.id] = seen.get(obj.id, 0) + 1
        by_id[obj.id] = obj

    for object_id, count in seen.items():
        if count > 1:
            violations.append(
                BundleViolation(
                    "duplicate-id",
                    f"id {object_id} appears {count} times in one bundle",
                    object_id,
                )
            )

    for obj in bundle.objects:
        if not obj.is_relationship:
            continue
        dangling = False
        for ref_name, ref in (("source_ref", obj.source_ref), ("target_ref", obj.target_ref)):
            if ref is None:
                violations.append(
                    BundleViolation(
                        "missing-endpoint",
                        f"relationship {obj.id} has no {ref_name}",
                        obj.id,
                    )
                )
                dangling = True
            elif ref not in by_id:
                violations.append(
                    BundleViolation(
                        "dangling-reference",
                        f"relationship {obj.id} points at {ref} which is not in the bundle",
                        obj.id,
                    )
                )
                dangling = True
        if dangling:
            continue

        source = by_id[obj.source_ref]
        target = by_id[obj.target_ref]
        if source.is_opaque or target.is_opaque:
            logger.warning(
                "relationship %s touches foreign object types (%s -> %s); passing through",
                obj.id,
                source.type,
                target.type,
            )
            continue
        triple = (source.type, obj.relationship_type, target.type)
        if triple not in ALLOWED_RELATIONSHIP_TRIPLES:
            violations.append(
                BundleViolation(
                    "disallowed-relationship",
                    f"relationship {obj.id} has shape {triple}, which the platform does not allow",
                    obj.id,
                )
            )

    return violations
