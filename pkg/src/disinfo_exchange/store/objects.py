"""File-backed object store with an in-memory index.

All objects live in one JSON snapshot; every successful batch rewrites it
atomically.  Reads are answered from memory.  One process owns a data
directory at a time — this is an embedded store, not a database server.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from datetime import datetime
from pathlib import Path
from typing import Iterable

from ..stix import EPOCH, MIN_TICK, StixObject, format_timestamp, parse_timestamp
from .persistence import StoreWriteError, atomic_write_json, load_json

EXCERPT_LIMIT = 280
MAX_PAGE_SIZE = 200


class PagingError(ValueError):
    """Page or page size outside the allowed range."""


class IncidentNotFoundError(KeyError):
    """No stored object has the requested id."""


class NotAnIncidentError(ValueError):
    """The id exists but is not an intrusion set."""


@dataclass(frozen=True)
class StoredObject:
    """One stored object plus its bookkeeping."""

    object: StixObject
    version: datetime  # ordering key for the feed; normally == modified
    stored_at: datetime
    uploader: str


@dataclass(frozen=True)
class UpsertReport:
    inserted: int
    updated: int


@dataclass(frozen=True)
class IncidentRow:
    id: str
    name: str
    excerpt: str
    first_seen: str  # YYYY-MM-DD


@dataclass(frozen=True)
class IncidentPage:
    rows: tuple[IncidentRow, ...]
    total: int
    page: int
    page_size: int


@dataclass(frozen=True)
class IncidentView:
    intrusion_set: StixObject
    actors: tuple[StixObject, ...]
    locations: tuple[StixObject, ...]
    techniques: tuple[StixObject, ...]
    relationships: tuple[StixObject, ...]

    @property
    def all_objects(self) -> tuple[StixObject, ...]:
        return (
            (self.intrusion_set,)
            + self.actors
            + self.locations
            + self.techniques
            + self.relationships
        )


@dataclass(frozen=True)
class RankedCount:
    name: str
    incident_count: int
    code: str | None = None  # alpha-2, for country rows


@dataclass(frozen=True)
class DashboardStats:
    incident_count: int
    object_count: int
    actor_count: int
    country_count: int
    recent_incidents: tuple[IncidentRow, ...]
    top_actors: tuple[RankedCount, ...]
    top_countries: tuple[RankedCount, ...]


def make_excerpt(text: str, limit: int = EXCERPT_LIMIT) -> str:
    """First *limit* characters, cut back to a word boundary, with an
    ellipsis when anything was dropped."""
    flat = " ".join(text.split())
    if len(flat) <= limit:
        return flat
    head = flat[:limit]
    cut = head.rsplit(" ", 1)[0] if " " in head else head
    return cut.rstrip() + "…"


def _object_version(obj: StixObject, fallback: datetime) -> datetime:
    return obj.modified_at or obj.created_at or fallback


class ObjectStore:
    """The STIX object half of the platform store."""

    def __init__(self, snapshot_path: Path | None):
        self._path = snapshot_path
        self._lock = threading.RLock()
        self._records: dict[str, StoredObject] = {}
        if snapshot_path is not None:
            self._load()

    def _load(self) -> None:
        payload = load_json(self._path)
        if payload is None:
            return
        for entry in payload.get("objects", []):
            obj = StixObject(entry["object"])
            record = StoredObject(
                object=obj,
                version=parse_timestamp(entry["version"]),
                stored_at=parse_timestamp(entry["stored_at"]),
                uploader=entry.get("uploader", "unknown"),
            )
            self._records[obj.id] = record

    def _persist(self, records: dict[str, StoredObject]) -> None:
        if self._path is None:
            return
        payload = {
            "format": 1,
            "objects": [
                {
                    "object": rec.object.to_dict(),
                    "version": format_timestamp(rec.version),
                    "stored_at": format_timestamp(rec.stored_at),
                    "uploader": rec.uploader,
                }
                for rec in records.values()
            ],
        }
        try:
            atomic_write_json(self._path, payload)
        except OSError as exc:
            raise StoreWriteError(f"cannot persist object snapshot: {exc}") from exc

    # -- writes ----------------------------------------------------------

    def upsert_objects(
        self, objects: Iterable[StixObject], uploader: str, at: datetime
    ) -> UpsertReport:
        """Insert or replace a batch, all or nothing.

        The stored version never predates the write instant, and a
        collision also clears the previous version by at least one tick.
        Together these guarantee that an incremental poller sees every
        write — even a byte-identical re-post, and even objects whose
        payload carries old framework timestamps (catalog copies keep
        their ``created``; their ``modified`` is rebased on storage so the
        feed can deliver them).
        """
        batch = list(objects)
        with self._lock:
            candidate = dict(self._records)
            inserted = updated = 0
            for obj in batch:
                previous = candidate.get(obj.id)
                incoming = _object_version(obj, at)
                if previous is None:
                    version = max(incoming, at)
                    inserted += 1
                else:
                    version = max(incoming, previous.version + MIN_TICK, at)
                    updated += 1
                if obj.modified_at is None or obj.modified_at != version:
                    obj = obj.with_modified(version)
                candidate[obj.id] = StoredObject(
                    object=obj, version=version, stored_at=at, uploader=uploader
                )
            self._persist(candidate)
            self._records = candidate
            return UpsertReport(inserted=inserted, updated=updated)

    # -- reads -----------------------------------------------------------

    def get(self, object_id: str) -> StixObject | None:
        with self._lock:
            record = self._records.get(object_id)
            return record.object if record else None

    @property
    def object_count(self) -> int:
        with self._lock:
            return len(self._records)

    def objects_newer_than(self, cursor: datetime) -> list[StixObject]:
        """Objects strictly newer than *cursor*, ordered (version, id)."""
        with self._lock:
            hits = [
                rec for rec in self._records.values() if rec.version > cursor
            ]
        hits.sort(key=lambda rec: (rec.version, rec.object.id))
        return [rec.object for rec in hits]

    def all_objects(self) -> list[StixObject]:
        return self.objects_newer_than(EPOCH - MIN_TICK)

    # -- incident-shaped reads -------------------------------------------

    def _incident_sort_key(self, record: StoredObject):
        obj = record.object
        first_seen = obj.properties.get("first_seen")
        if isinstance(first_seen, str):
            try:
                moment = parse_timestamp(first_seen)
            except ValueError:
                moment = record.version
        else:
            moment = obj.created_at or record.version
        return moment

    def _incident_row(self, record: StoredObject) -> IncidentRow:
        obj = record.object
        return IncidentRow(
            id=obj.id,
            name=obj.name or obj.id,
            excerpt=make_excerpt(obj.description),
            first_seen=self._incident_sort_key(record).date().isoformat(),
        )

    def list_incidents(
        self,
        page: int = 1,
        page_size: int = 50,
        name_filter: str | None = None,
    ) -> IncidentPage:
        """Newest first (by first-seen, names breaking ties), paged."""
        if page < 1:
            raise PagingError(f"page must be >= 1, got {page}")
        if not 1 <= page_size <= MAX_PAGE_SIZE:
            raise PagingError(
                f"page_size must be in 1..{MAX_PAGE_SIZE}, got {page_size}"
            )
        needle = " ".join(name_filter.split()).casefold() if name_filter else None
        with self._lock:
            records = [
                rec
                for rec in self._records.values()
                if rec.object.type == "intrusion-set"
            ]
        if needle:
            records = [
                rec for rec in records if needle in (rec.object.name or "").casefold()
            ]
        records.sort(
            key=lambda rec: (
                -self._incident_sort_key(rec).timestamp(),
                (rec.object.name or "").casefold(),
            )
        )
        start = (page - 1) * page_size
        rows = tuple(self._incident_row(rec) for rec in records[start : start + page_size])
        return IncidentPage(rows=rows, total=len(records), page=page, page_size=page_size)

    def get_incident_view(self, incident_id: str) -> IncidentView:
        """The incident's own graph, reassembled from stored objects."""
        with self._lock:
            record = self._records.get(incident_id)
            if record is None:
                raise IncidentNotFoundError(incident_id)
            root = record.object
            if root.type != "intrusion-set":
                raise NotAnIncidentError(
                    f"{incident_id} is a {root.type}, not an intrusion-set"
                )
            actors: list[StixObject] = []
            locations: list[StixObject] = []
            techniques: list[StixObject] = []
            relationships: list[StixObject] = []
            for rec in self._records.values():
                rel = rec.object
                if not rel.is_relationship or rel.source_ref != incident_id:
                    continue
                target_rec = self._records.get(rel.target_ref or "")
                if target_rec is None:
                    continue
                target = target_rec.object
                bucket = {
                    "threat-actor": actors,
                    "location": locations,
                    "attack-pattern": techniques,
                }.get(target.type)
                if bucket is None:
                    continue
                bucket.append(target)
                relationships.append(rel)
        for bucket in (actors, locations, techniques):
            bucket.sort(key=lambda obj: ((obj.name or "").casefold(), obj.id))
        relationships.sort(key=lambda obj: (obj.relationship_type or "", obj.id))
        return IncidentView(
            intrusion_set=root,
            actors=tuple(actors),
            locations=tuple(locations),
            techniques=tuple(techniques),
            relationships=tuple(relationships),
        )

    def dashboard_stats(self, top_n: int | None = None) -> DashboardStats:
        """Counts for the landing page; ties rank alphabetically."""
        with self._lock:
            records = dict(self._records)

        actor_incidents: dict[str, set[str]] = {}
        country_incidents: dict[tuple[str, str | None], set[str]] = {}
        incident_ids = {
            oid for oid, rec in records.items() if rec.object.type == "intrusion-set"
        }
        actor_ids = {
            oid for oid, rec in records.items() if rec.object.type == "threat-actor"
        }
        location_ids = {
            oid for oid, rec in records.items() if rec.object.type == "location"
        }
        for rec in records.values():
            rel = rec.object
            if not rel.is_relationship:
                continue
            source, target = rel.source_ref, rel.target_ref
            if source not in incident_ids or target is None:
                continue
            if rel.relationship_type == "attributed-to" and target in actor_ids:
                name = records[target].object.name or target
                actor_incidents.setdefault(name, set()).add(source)
            elif rel.relationship_type == "targets" and target in location_ids:
                location = records[target].object
                key = (location.name or target, location.properties.get("country"))
                country_incidents.setdefault(key, set()).add(source)

        def ranked(counts: dict, *, with_code: bool) -> tuple[RankedCount, ...]:
            rows = []
            for key, sources in counts.items():
                if with_code:
                    name, code = key
                    rows.append(RankedCount(name=name, incident_count=len(sources), code=code))
                else:
                    rows.append(RankedCount(name=key, incident_count=len(sources)))
            rows.sort(key=lambda row: (-row.incident_count, row.name.casefold()))
            return tuple(rows[:top_n] if top_n is not None else rows)

        recent = self.list_incidents(page=1, page_size=5).rows
        return DashboardStats(
            incident_count=len(incident_ids),
            object_count=len(records),
            actor_count=len(actor_ids),
            country_count=len(location_ids),
            recent_incidents=recent,
            top_actors=ranked(actor_incidents, with_code=False),
            top_countries=ranked(country_incidents, with_code=True),
        )
