"""DISARM technique catalog.

The catalog is loaded once at startup from a STIX bundle of
attack-patterns (the framework distribution file).  Techniques are keyed
by their DISARM code (``T0114``, sub-techniques dotted like ``T0085.001``)
taken from the external reference whose source identifies DISARM.  The
loaded catalog is read-only; lookups never mutate it.
"""

from __future__ import annotations

import hashlib
import logging
from dataclasses import dataclass, field
from datetime import datetime
from importlib import resources
from pathlib import Path

from .stix import Bundle, StixObject, now_utc, parse_bundle

logger = logging.getLogger(__name__)

KILL_CHAIN_NAME = "disarm"

#: Group label for techniques that declare no kill-chain phase.
UNPHASED = "(unphased)"


class CatalogError(ValueError):
    """The catalog file is unusable (unreadable, or no techniques in it)."""


@dataclass(frozen=True)
class DisarmTechnique:
    """One catalog entry: the STIX object plus its indexed fields."""

    external_id: str
    name: str
    phases: tuple[str, ...]
    object: StixObject

    @property
    def description(self) -> str:
        return self.object.description


@dataclass(frozen=True)
class LoadReport:
    """What happened while indexing the source bundle."""

    technique_count: int
    skipped_no_code: int
    duplicate_codes: tuple[str, ...] = ()


def _disarm_external_id(obj: StixObject) -> str | None:
    refs = obj.properties.get("external_references")
    if not isinstance(refs, list):
        return None
    for ref in refs:
        if not isinstance(ref, dict):
            continue
        source = ref.get("source_name")
        code = ref.get("external_id")
        if (
            isinstance(source, str)
            and source.casefold().startswith("disarm")
            and isinstance(code, str)
            and code.strip()
        ):
            return code.strip()
    return None


def _phases(obj: StixObject) -> tuple[str, ...]:
    raw = obj.properties.get("kill_chain_phases")
    if not isinstance(raw, list):
        return ()
    names = []
    for entry in raw:
        if isinstance(entry, dict) and isinstance(entry.get("phase_name"), str):
            names.append(entry["phase_name"])
    return tuple(names)


@dataclass(frozen=True)
class DisarmCatalog:
    """Immutable technique index built from one framework bundle."""

    version_label: str
    loaded_at: datetime
    report: LoadReport
    _by_code: dict[str, DisarmTechnique] = field(repr=False)
    _by_name: dict[str, DisarmTechnique] = field(repr=False)
    _phase_order: tuple[str, ...] = field(repr=False)

    def __len__(self) -> int:
        return len(self._by_code)

    def __iter__(self):
        return iter(self._by_code.values())

    def lookup_by_external_id(self, code: str) -> DisarmTechnique | None:
        """Exact, case-sensitive match on the trimmed code."""
        return self._by_code.get(code.strip())

    def lookup_by_name(self, name: str) -> DisarmTechnique | None:
        """Case-insensitive match on the trimmed technique name."""
        return self._by_name.get(" ".join(name.split()).casefold())

    def resolve(self, ref: str) -> DisarmTechnique | None:
        """Resolve a free-form reference: code first, then name."""
        return self.lookup_by_external_id(ref) or self.lookup_by_name(ref)

    def list_by_tactic(self) -> dict[str, list[DisarmTechnique]]:
        """Techniques grouped by phase.

        Phase order follows first appearance in the source bundle; within a
        phase, techniques sort by code.  A technique declaring several
        phases shows up under each; one declaring none lands in the
        ``(unphased)`` group.
        """
        groups: dict[str, list[DisarmTechnique]] = {name: [] for name in self._phase_order}
        for technique in self._by_code.values():
            for phase in technique.phases or (UNPHASED,):
                groups.setdefault(phase, []).append(technique)
        for bucket in groups.values():
            bucket.sort(key=lambda t: t.external_id)
        return {name: bucket for name, bucket in groups.items() if bucket}


def load_catalog(data: bytes | Bundle, *, version_label: str | None = None) -> DisarmCatalog:
    """Index a framework bundle into a :class:`DisarmCatalog`.

    Attack-patterns without a DISARM code are skipped (and counted); on a
    duplicate code the first entry wins.  Non-attack-pattern objects are
    ignored except that an ``identity`` object, when present, names the
    catalog version.  A bundle yielding zero techniques raises
    :class:`CatalogError`.
    """
    if isinstance(data, Bundle):
        bundle = data
        content_label = None
    else:
        bundle = parse_bundle(data)
        content_label = "sha256:" + hashlib.sha256(data if isinstance(data, bytes) else data.encode()).hexdigest()[:12]

    by_code: dict[str, DisarmTechnique] = {}
    by_name: dict[str, DisarmTechnique] = {}
    phase_order: list[str] = []
    skipped = 0
    duplicates: list[str] = []
    identity_label = None

    for obj in bundle.objects:
        if obj.type == "identity" and obj.name:
            identity_label = obj.name
            continue
        if obj.type != "attack-pattern":
            continue
        code = _disarm_external_id(obj)
        if code is None:
            skipped += 1
            logger.warning("attack-pattern %s has no DISARM code; skipped", obj.id)
            continue
        if code in by_code:
            duplicates.append(code)
            logger.warning("duplicate DISARM code %s; keeping the first entry", code)
            continue
        technique = DisarmTechnique(
            external_id=code,
            name=obj.name or code,
            phases=_phases(obj),
            object=obj,
        )
        by_code[code] = technique
        key = " ".join(technique.name.split()).casefold()
        by_name.setdefault(key, technique)
        for phase in technique.phases:
            if phase not in phase_order:
                phase_order.append(phase)

    if not by_code:
        raise CatalogError("catalog bundle contains no usable attack-patterns")

    label = version_label or identity_label or content_label or "unversioned"
    return DisarmCatalog(
        version_label=label,
        loaded_at=now_utc(),
        report=LoadReport(
            technique_count=len(by_code),
            skipped_no_code=skipped,
            duplicate_codes=tuple(duplicates),
        ),
        _by_code=by_code,
        _by_name=by_name,
        _phase_order=tuple(phase_order),
    )


def load_catalog_file(path: str | Path) -> DisarmCatalog:
    try:
        data = Path(path).read_bytes()
    except OSError as exc:
        raise CatalogError(f"cannot read catalog file {path}: {exc}") from exc
    return load_catalog(data)


def default_catalog_path() -> Path:
    """Path of the framework snapshot shipped inside the package."""
    return Path(resources.files("disinfo_exchange").joinpath("data/disarm_snapshot.json"))
