"""From analyst submissions to STIX graphs and back.

One submission (name, date, actors, target countries, techniques) becomes
one intrusion set plus one threat actor per actor, one location per
country, the referenced catalog attack-patterns copied verbatim, and the
relationships wiring them together.  Because every non-bundle id is
name-based, re-submitting the same incident reproduces the same graph and
two incidents naming the same actor share one actor node.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from datetime import datetime

from .catalog import DisarmCatalog, DisarmTechnique
from .countries import resolve_country
from .stix import (
    Bundle,
    StixObject,
    TimestampError,
    make_intrusion_set,
    make_location,
    make_relationship,
    make_threat_actor,
    parse_date,
)


class SubmissionError(ValueError):
    """A submission's own fields are unusable (bad name, date, ...)."""


class UnknownTechniqueError(SubmissionError):
    """Technique references that match nothing in the catalog."""

    def __init__(self, refs: list[str]):
        super().__init__(f"unknown technique reference(s): {', '.join(refs)}")
        self.refs = tuple(refs)


class CsvSchemaError(ValueError):
    """The CSV file as a whole is unusable (header mismatch, not UTF-8)."""

    def __init__(self, missing: list[str], unexpected: list[str], message: str | None = None):
        if message is None:
            parts = []
            if missing:
                parts.append(f"missing column(s): {', '.join(missing)}")
            if unexpected:
                parts.append(f"unexpected column(s): {', '.join(unexpected)}")
            message = "; ".join(parts) or "bad CSV header"
        super().__init__(message)
        self.missing = tuple(missing)
        self.unexpected = tuple(unexpected)


class EmptyImportError(ValueError):
    """A bundle import contained no intrusion sets at all."""


#: Import template header, in canonical order.  List-valued cells hold
#: ``;``-separated entries; ``date`` is strict ``YYYY-MM-DD``.
CSV_COLUMNS = (
    "name",
    "description",
    "date",
    "target_countries",
    "threat_actors",
    "disarm_techniques",
)


def _dedupe(values: list[str]) -> tuple[str, ...]:
    """Trim, drop empties, and dedupe case-insensitively keeping first spelling."""
    seen: set[str] = set()
    out: list[str] = []
    for value in values:
        trimmed = " ".join(value.split())
        if not trimmed:
            continue
        key = trimmed.casefold()
        if key in seen:
            continue
        seen.add(key)
        out.append(trimmed)
    return tuple(out)


@dataclass(frozen=True)
class IncidentSubmission:
    """A validated incident as captured from form, CSV or import."""

    name: str
    description: str
    first_seen: datetime
    threat_actors: tuple[str, ...]
    target_countries: tuple[str, ...]
    technique_refs: tuple[str, ...]

    @classmethod
    def build(
        cls,
        name: str,
        description: str,
        date: str | datetime,
        threat_actors: list[str] | tuple[str, ...],
        target_countries: list[str] | tuple[str, ...],
        technique_refs: list[str] | tuple[str, ...],
    ) -> "IncidentSubmission":
        clean_name = " ".join(str(name).split())
        if not clean_name:
            raise SubmissionError("incident name must not be empty")
        if isinstance(date, datetime):
            first_seen = date
        else:
            try:
                first_seen = parse_date(str(date))
            except TimestampError as exc:
                raise SubmissionError(str(exc)) from None
        return cls(
            name=clean_name,
            description=str(description or "").strip(),
            first_seen=first_seen,
            threat_actors=_dedupe([str(v) for v in threat_actors]),
            target_countries=_dedupe([str(v) for v in target_countries]),
            technique_refs=_dedupe([str(v) for v in technique_refs]),
        )


@dataclass(frozen=True)
class IncidentGraph:
    """The STIX objects for one incident, grouped by role."""

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

    def __len__(self) -> int:
        return 1 + len(self.actors) + len(self.locations) + len(self.techniques) + len(self.relationships)


def build_incident_graph(
    submission: IncidentSubmission,
    catalog: DisarmCatalog,
    at: datetime,
) -> IncidentGraph:
    """Expand a submission into its incident graph.

    Catalog attack-patterns are copied as-is — their ``created`` and
    ``modified`` still describe the framework file, not this incident.
    All technique references must resolve; otherwise the whole submission
    is rejected with :class:`UnknownTechniqueError`.
    """
    resolved: list[DisarmTechnique] = []
    unknown: list[str] = []
    seen_codes: set[str] = set()
    for ref in submission.technique_refs:
        technique = catalog.resolve(ref)
        if technique is None:
            unknown.append(ref)
        elif technique.external_id not in seen_codes:
            seen_codes.add(technique.external_id)
            resolved.append(technique)
    if unknown:
        raise UnknownTechniqueError(unknown)

    intrusion_set = make_intrusion_set(
        submission.name, submission.description, submission.first_seen, at
    )
    actors = tuple(make_threat_actor(name, at) for name in submission.threat_actors)

    locations = []
    seen_location_ids: set[str] = set()
    for raw_name in submission.target_countries:
        code, display = resolve_country(raw_name)
        location = make_location(display, at, country_code=code)
        # Aliases can collapse two spellings into one country.
        if location.id not in seen_location_ids:
            seen_location_ids.add(location.id)
            locations.append(location)

    techniques = tuple(t.object for t in resolved)

    relationships = (
        [make_relationship(intrusion_set, "attributed-to", actor, at) for actor in actors]
        + [make_relationship(intrusion_set, "targets", location, at) for location in locations]
        + [make_relationship(intrusion_set, "uses", technique, at) for technique in techniques]
    )

    return IncidentGraph(
        intrusion_set=intrusion_set,
        actors=actors,
        locations=tuple(locations),
        techniques=techniques,
        relationships=tuple(relationships),
    )


def graph_to_bundle(graph: IncidentGraph) -> Bundle:
    """Wrap a graph in a bundle (fresh wrapper id, fixed object order)."""
    return Bundle.new(graph.all_objects)


# -- CSV import ----------------------------------------------------------


@dataclass(frozen=True)
class RowError:
    """Why one CSV row (or imported entry) was rejected."""

    message: str


RowResult = tuple[int, "IncidentSubmission | RowError"]


def parse_csv_submissions(data: bytes | str) -> list[RowResult]:
    """Parse the import CSV into per-row submissions or errors.

    Row numbers count the header as line 1, so the first data row is 2.
    A broken row never affects its neighbours; header problems, by
    contrast, fail the whole file with :class:`CsvSchemaError`.
    """
    if isinstance(data, bytes):
        try:
            text = data.decode("utf-8-sig")
        except UnicodeDecodeError as exc:
            raise CsvSchemaError([], [], f"file is not UTF-8: {exc}") from None
    else:
        text = data

    reader = csv.reader(io.StringIO(text))
    try:
        header = next(reader)
    except StopIteration:
        raise CsvSchemaError(list(CSV_COLUMNS), []) from None

    got = [cell.strip().lower() for cell in header]
    missing = [c for c in CSV_COLUMNS if c not in got]
    unexpected = [c for c in got if c not in CSV_COLUMNS]
    if missing or unexpected:
        raise CsvSchemaError(missing, unexpected)
    index = {name: got.index(name) for name in CSV_COLUMNS}

    results: list[RowResult] = []
    for row_number, row in enumerate(reader, start=2):
        if not any(cell.strip() for cell in row):
            continue  # blank line
        if len(row) != len(got):
            results.append(
                (row_number, RowError(f"expected {len(got)} cells, got {len(row)}"))
            )
            continue

        def cell(name: str) -> str:
            return row[index[name]]

        def cells(name: str) -> list[str]:
            return cell(name).split(";")

        try:
            submission = IncidentSubmission.build(
                name=cell("name"),
                description=cell("description"),
                date=cell("date").strip(),
                threat_actors=cells("threat_actors"),
                target_countries=cells("target_countries"),
                technique_refs=cells("disarm_techniques"),
            )
        except SubmissionError as exc:
            results.append((row_number, RowError(str(exc))))
            continue
        results.append((row_number, submission))
    return results


def submissions_to_csv(submissions: list[IncidentSubmission]) -> str:
    """Render submissions back into the import template (round-trip aid)."""
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for s in submissions:
        writer.writerow(
            [
                s.name,
                s.description,
                s.first_seen.date().isoformat(),
                ";".join(s.target_countries),
                ";".join(s.threat_actors),
                ";".join(s.technique_refs),
            ]
        )
    return out.getvalue()


# -- bundle import -------------------------------------------------------


@dataclass(frozen=True)
class BundleImport:
    """Per-entry results recovered from a foreign bundle, plus leftovers.

    ``entries`` pairs each intrusion set's 1-based position with either a
    submission or the reason it could not become one.  ``dropped_ids``
    lists objects unreachable from any intrusion set.
    """

    entries: tuple[RowResult, ...]
    dropped_ids: tuple[str, ...] = field(default=())

    @property
    def submissions(self) -> tuple[IncidentSubmission, ...]:
        return tuple(s for _, s in self.entries if isinstance(s, IncidentSubmission))


def technique_code(obj: StixObject) -> str | None:
    """The DISARM code carried in an attack-pattern's external references,
    falling back to the technique name."""
    refs = obj.properties.get("external_references")
    if isinstance(refs, list):
        for ref in refs:
            if (
                isinstance(ref, dict)
                and isinstance(ref.get("source_name"), str)
                and ref["source_name"].casefold().startswith("disarm")
                and isinstance(ref.get("external_id"), str)
            ):
                return ref["external_id"].strip()
    return obj.name


def parse_bundle_import(bundle: Bundle) -> BundleImport:
    """Recover submissions from a bundle of incident graphs.

    Walks each intrusion set's relationships: ``attributed-to`` yields
    actor names, ``targets`` yields country names, ``uses`` yields DISARM
    codes (falling back to technique names).  Objects not reachable from
    any intrusion set are dropped and reported, never imported blind.  A
    bundle with no intrusion sets raises :class:`EmptyImportError`.
    """
    by_id = {obj.id: obj for obj in bundle.objects}
    intrusion_sets = [obj for obj in bundle.objects if obj.type == "intrusion-set"]
    if not intrusion_sets:
        raise EmptyImportError("bundle contains no intrusion-set objects")

    reachable: set[str] = set()
    entries: list[RowResult] = []
    for position, intrusion_set in enumerate(intrusion_sets, start=1):
        reachable.add(intrusion_set.id)
        actors: list[str] = []
        countries: list[str] = []
        techniques: list[str] = []
        for obj in bundle.objects:
            if not obj.is_relationship or obj.source_ref != intrusion_set.id:
                continue
            target = by_id.get(obj.target_ref or "")
            if target is None:
                continue
            kind = obj.relationship_type
            if kind == "attributed-to" and target.type == "threat-actor" and target.name:
                actors.append(target.name)
            elif kind == "targets" and target.type == "location" and target.name:
                countries.append(target.name)
            elif kind == "uses" and target.type == "attack-pattern":
                ref = technique_code(target)
                if ref:
                    techniques.append(ref)
            else:
                continue
            reachable.add(obj.id)
            reachable.add(target.id)

        try:
            first_seen_raw = intrusion_set.properties.get("first_seen")
            if isinstance(first_seen_raw, str):
                first_seen = parse_date(first_seen_raw[:10])
            elif intrusion_set.created_at is not None:
                first_seen = parse_date(intrusion_set.created_at.date().isoformat())
            else:
                raise SubmissionError(
                    f"intrusion-set {intrusion_set.id} has neither first_seen nor created"
                )
            submission = IncidentSubmission.build(
                name=intrusion_set.name or "",
                description=intrusion_set.description,
                date=first_seen,
                threat_actors=actors,
                target_countries=countries,
                technique_refs=techniques,
            )
        except (SubmissionError, TimestampError) as exc:
            entries.append((position, RowError(str(exc))))
            continue
        entries.append((position, submission))

    dropped = tuple(obj.id for obj in bundle.objects if obj.id not in reachable)
    return BundleImport(entries=tuple(entries), dropped_ids=dropped)
