"""Where forwarded objects end up.

Real deployments implement :class:`SinkContract` against their TIP or
data lake.  :class:`MockSink` is the reference implementation used by the
test rig: it keeps objects in memory (optionally mirrored to a JSON
file) and deduplicates by id, keeping the newest ``modified``.
"""

from __future__ import annotations

import json
import os
import tempfile
import threading
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Protocol

from ..stix import Bundle, BundleParseError, BundleSchemaError, parse_bundle


@dataclass(frozen=True)
class IngestReport:
    ingested: int = 0
    deduplicated: int = 0
    errors: int = 0


class SinkContract(Protocol):
    def ingest(self, bundle: Bundle | bytes) -> IngestReport: ...


def _object_stamp(props: dict[str, Any]) -> str:
    stamp = props.get("modified") or props.get("created") or ""
    return stamp if isinstance(stamp, str) else ""


class MockSink:
    """In-memory sink with id-level dedup and optional file mirroring.

    Feeding the same object twice is a no-op; a newer ``modified`` wins;
    an older one is ignored.  A malformed bundle is rejected whole and
    counted as one error — nothing from it is ingested.
    """

    def __init__(self, path: str | Path | None = None):
        self._path = Path(path) if path is not None else None
        self._lock = threading.Lock()
        self._objects: dict[str, dict[str, Any]] = {}
        if self._path is not None and self._path.exists():
            with open(self._path, encoding="utf-8") as handle:
                payload = json.load(handle)
            for props in payload.get("objects", []):
                self._objects[props["id"]] = props

    def ingest(self, bundle: Bundle | bytes) -> IngestReport:
        if isinstance(bundle, (bytes, str)):
            try:
                bundle = parse_bundle(bundle)
            except (BundleParseError, BundleSchemaError):
                return IngestReport(errors=1)

        ingested = deduplicated = 0
        with self._lock:
            for obj in bundle.objects:
                props = obj.to_dict()
                held = self._objects.get(obj.id)
                if held is None:
                    self._objects[obj.id] = props
                    ingested += 1
                    continue
                if _object_stamp(props) > _object_stamp(held):
                    self._objects[obj.id] = props
                    ingested += 1
                else:
                    deduplicated += 1
            self._flush()
        return IngestReport(ingested=ingested, deduplicated=deduplicated)

    def _flush(self) -> None:
        if self._path is None:
            return
        self._path.parent.mkdir(parents=True, exist_ok=True)
        payload = {"objects": sorted(self._objects.values(), key=lambda p: p["id"])}
        fd, tmp_name = tempfile.mkstemp(
            dir=self._path.parent, prefix=self._path.name + ".", suffix=".tmp"
        )
        with os.fdopen(fd, "w", encoding="utf-8") as handle:
            json.dump(payload, handle, indent=2, sort_keys=True, ensure_ascii=False)
            handle.write("\n")
        os.replace(tmp_name, self._path)

    # -- inspection helpers (used by tests and the CLI summary) ----------

    @property
    def count(self) -> int:
        with self._lock:
            return len(self._objects)

    def object_set(self) -> set[tuple[str, str]]:
        """The ``(id, modified)`` pairs currently held."""
        with self._lock:
            return {
                (object_id, _object_stamp(props))
                for object_id, props in self._objects.items()
            }

    def get(self, object_id: str) -> dict[str, Any] | None:
        with self._lock:
            props = self._objects.get(object_id)
            return dict(props) if props else None
