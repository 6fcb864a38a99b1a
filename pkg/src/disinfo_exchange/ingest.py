"""Bulk ingestion: submissions in, graphs stored, per-row accounting out.

Both the CSV and the bundle import path funnel through here, and single
form submissions reuse the same building block, so every entry point
shares one set of semantics: each row stands or falls on its own, and a
stored row is stored atomically.
"""

from __future__ import annotations

from dataclasses import dataclass
from datetime import datetime

from .catalog import DisarmCatalog
from .store import Store
from .transform import (
    BundleImport,
    IncidentGraph,
    IncidentSubmission,
    RowError,
    RowResult,
    build_incident_graph,
    graph_to_bundle,
    parse_bundle_import,
    parse_csv_submissions,
)
from .stix import Bundle


@dataclass(frozen=True)
class RejectedRow:
    row: int
    reason: str


@dataclass(frozen=True)
class ImportReport:
    accepted: int
    rejected: tuple[RejectedRow, ...] = ()
    dropped_object_ids: tuple[str, ...] = ()

    def to_payload(self) -> dict:
        payload = {
            "accepted": self.accepted,
            "rejected": [{"row": r.row, "reason": r.reason} for r in self.rejected],
        }
        if self.dropped_object_ids:
            payload["dropped_object_ids"] = list(self.dropped_object_ids)
        return payload


def store_submission(
    store: Store,
    catalog: DisarmCatalog,
    submission: IncidentSubmission,
    uploader: str,
    at: datetime,
) -> IncidentGraph:
    """Build one incident graph and upsert it as a single batch."""
    graph = build_incident_graph(submission, catalog, at)
    store.objects.upsert_objects(graph.all_objects, uploader, at)
    return graph


def import_rows(
    store: Store,
    catalog: DisarmCatalog,
    rows: list[RowResult],
    uploader: str,
    at: datetime,
) -> ImportReport:
    accepted = 0
    rejected: list[RejectedRow] = []
    for row_number, outcome in rows:
        if isinstance(outcome, RowError):
            rejected.append(RejectedRow(row=row_number, reason=outcome.message))
            continue
        try:
            store_submission(store, catalog, outcome, uploader, at)
        except ValueError as exc:
            rejected.append(RejectedRow(row=row_number, reason=str(exc)))
            continue
        accepted += 1
    return ImportReport(accepted=accepted, rejected=tuple(rejected))


def import_csv(
    store: Store,
    catalog: DisarmCatalog,
    data: bytes | str,
    uploader: str,
    at: datetime,
) -> ImportReport:
    """Import the CSV template; raises ``CsvSchemaError`` on a bad header."""
    return import_rows(store, catalog, parse_csv_submissions(data), uploader, at)


def import_bundle(
    store: Store,
    catalog: DisarmCatalog,
    bundle: Bundle,
    uploader: str,
    at: datetime,
) -> ImportReport:
    """Import incidents recovered from a STIX bundle.

    Row numbers in the report are the 1-based positions of the intrusion
    sets in the bundle.  Raises ``EmptyImportError`` when there are none.
    """
    recovered: BundleImport = parse_bundle_import(bundle)
    report = import_rows(store, catalog, list(recovered.entries), uploader, at)
    return ImportReport(
        accepted=report.accepted,
        rejected=report.rejected,
        dropped_object_ids=recovered.dropped_ids,
    )


__all__ = [
    "ImportReport",
    "RejectedRow",
    "graph_to_bundle",
    "import_bundle",
    "import_csv",
    "import_rows",
    "store_submission",
]
