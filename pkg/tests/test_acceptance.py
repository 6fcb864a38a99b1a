"""The acceptance gate: one test per shipped guarantee.

Each test here restates a headline behaviour of the platform and checks
it end to end, against independent oracles where the number being
asserted could otherwise be an artifact of the code under test.  The
per-criterion PASS/FAIL summary is printed by the hook in conftest.
"""

from __future__ import annotations

import csv
import io
import json
import random
import time
from collections import Counter
from datetime import datetime, timedelta, timezone

import httpx
import pytest
from fastapi.testclient import TestClient

from disinfo_exchange.backend import create_backend_app
from disinfo_exchange.connector import ConnectorConfig, MockSink, run_once
from disinfo_exchange.connector.cli import main as connector_main
from disinfo_exchange.countries import resolve_country
from disinfo_exchange.ingest import import_csv, store_submission
from disinfo_exchange.public_api import create_public_app
from disinfo_exchange.stix import (
    EPOCH,
    format_timestamp,
    now_utc,
    serialize_bundle,
    validate_bundle,
)
from disinfo_exchange.store import open_store
from disinfo_exchange.transform import (
    IncidentSubmission,
    build_incident_graph,
    graph_to_bundle,
    technique_code,
)

from conftest import login
from e2e import run_server
from oracles import (
    brute_force_newer_than,
    count_type_markers,
    expected_graph_counts,
    parse_wire_timestamp,
    type_histogram,
)

PASSWORD = "correct horse battery"

#: Canonical country names, all distinct places (sanity-checked below).
COUNTRY_POOL = [
    "Ukraine", "France", "Germany", "Poland", "Moldova", "Romania",
    "Estonia", "Latvia", "Lithuania", "Finland", "Sweden", "Norway",
    "Spain", "Italy", "Greece", "Portugal", "Netherlands", "Belgium",
    "Austria", "Hungary", "Slovakia", "Slovenia", "Croatia", "Serbia",
    "Bulgaria", "Georgia", "Armenia", "Turkey", "Canada", "Mexico",
    "Brazil", "Argentina", "Chile", "Japan", "Australia", "India",
    "Kenya", "Nigeria", "Egypt", "Morocco",
]

ACTOR_POOL = [
    "Internet Research Agency", "Storm-1679", "Doppelganger Network",
    "Pravda Network", "Ghostwriter", "Secondary Infektion",
    "CopyCop", "Spamouflage", "NoName057(16)", "RRN Collective",
]


def _stamp(props: dict) -> str:
    return props.get("modified") or props.get("created") or ""


def _bundle_identity(payload: dict) -> tuple[str, str, frozenset, frozenset, frozenset]:
    """(name, date, actors, countries, codes) from a bundle, by plain json walk."""
    objects = payload["objects"]
    incident = next(o for o in objects if o["type"] == "intrusion-set")
    return (
        incident["name"],
        incident["first_seen"][:10],
        frozenset(o["name"] for o in objects if o["type"] == "threat-actor"),
        frozenset(o["name"] for o in objects if o["type"] == "location"),
        frozenset(
            ref["external_id"]
            for o in objects
            if o["type"] == "attack-pattern"
            for ref in o.get("external_references", [])
            if str(ref.get("source_name", "")).lower().startswith("disarm")
        ),
    )


def _server_pairs(store) -> set[tuple[str, str]]:
    return {(o.id, _stamp(o.properties)) for o in store.objects.all_objects()}


# ---------------------------------------------------------------------------


def test_criterion_1_bulk_csv_import(backend, store, admin, seed_csv_bytes):
    """The full seed CSV imports cleanly, idempotently, and fast."""
    started = time.monotonic()

    # Independent row count: a plain csv walk over the same bytes.
    reader = csv.reader(io.StringIO(seed_csv_bytes.decode("utf-8-sig")))
    rows = [row for row in reader if any(cell.strip() for cell in row)]
    assert len(rows) - 1 == 118  # header + 118 data rows

    response = admin.post(
        "/api/incidents/bulk",
        content=seed_csv_bytes,
        headers={"content-type": "text/csv"},
    )
    assert response.status_code == 200, response.text
    report = response.json()
    assert report["accepted"] == 118
    assert report["rejected"] == []

    listing = admin.get("/api/incidents", params={"page_size": 200})
    assert listing.status_code == 200
    assert listing.json()["total"] == 118

    # Re-importing the same file must change nothing but version stamps.
    again = admin.post(
        "/api/incidents/bulk",
        content=seed_csv_bytes,
        headers={"content-type": "text/csv"},
    )
    assert again.status_code == 200
    assert again.json()["accepted"] == 118
    assert again.json()["rejected"] == []
    assert admin.get("/api/incidents", params={"page_size": 200}).json()["total"] == 118

    intrusion_sets = sum(
        1 for o in store.objects.all_objects() if o.type == "intrusion-set"
    )
    assert intrusion_sets == 118

    assert time.monotonic() - started < 30


def test_criterion_2_end_to_end_exchange(tmp_path, catalog, seed_csv_bytes, monkeypatch):
    """Seed a live instance over real HTTP, then pull everything with the
    connector CLI; the sink must mirror the server exactly."""
    started = time.monotonic()

    store = open_store(tmp_path / "server-data")
    backend_app = create_backend_app(store, catalog)
    feed_app = create_public_app(store, catalog)

    state_path = tmp_path / "connector_state.json"
    sink_path = tmp_path / "sink_objects.json"

    with run_server(backend_app) as backend_url, run_server(feed_app) as feed_url:
        with httpx.Client(base_url=backend_url, timeout=30.0) as http:
            r = http.post(
                "/api/users", json={"username": "operator", "password": PASSWORD}
            )
            assert r.status_code == 201, r.text
            token = http.post(
                "/api/session", json={"username": "operator", "password": PASSWORD}
            ).json()["token"]
            auth = {"Authorization": f"Bearer {token}"}

            r = http.post(
                "/api/incidents/bulk",
                content=seed_csv_bytes,
                headers={**auth, "content-type": "text/csv"},
            )
            assert r.status_code == 200, r.text
            assert r.json()["accepted"] == 118

            api_key = http.post(
                "/api/profile/apikeys", json={"label": "acceptance sync"}, headers=auth
            ).json()["token"]

        for name in ("RUN_EVERY", "CONNECTOR_RUN_EVERY"):
            monkeypatch.delenv(name, raising=False)
        monkeypatch.setenv("FEED_URL", feed_url)
        monkeypatch.setenv("FEED_API_KEY", api_key)
        monkeypatch.setenv("STATE_PATH", str(state_path))
        monkeypatch.setenv("SINK_PATH", str(sink_path))

        assert connector_main(["--once"]) == 0

    # Fresh handle onto the sink file — nothing shared with the run above.
    sink = MockSink(sink_path)
    server = _server_pairs(store)
    assert sink.object_set() == server
    assert len(server) > 118  # incidents plus their satellite objects

    sunk_incidents = sum(
        1
        for object_id, _ in sink.object_set()
        if object_id.startswith("intrusion-set--")
    )
    assert sunk_incidents == 118  # "more than 100 incidents" exchanged

    assert time.monotonic() - started < 30


def test_criterion_3_cardinality_law(catalog):
    """200 randomized submissions produce exactly 1+A+C+T SDOs and A+C+T
    SROs, with zero bundle violations."""
    resolved = [resolve_country(name) for name in COUNTRY_POOL]
    assert len({code for code, _ in resolved}) == len(COUNTRY_POOL)
    assert all(code is not None for code, _ in resolved)

    codes = sorted(t.external_id for t in catalog)
    assert len(codes) >= 15

    rng = random.Random(20240322)
    at = datetime(2024, 5, 4, 12, 0, 0, tzinfo=timezone.utc)
    for i in range(200):
        a = rng.randint(0, 5)
        c = rng.randint(0, 5)
        t = rng.randint(0, 15)
        submission = IncidentSubmission.build(
            name=f"Randomized incident {i:03d}",
            description="cardinality drill",
            date="2023-06-01",
            threat_actors=rng.sample(ACTOR_POOL, a),
            target_countries=rng.sample(COUNTRY_POOL, c),
            technique_refs=rng.sample(codes, t),
        )
        graph = build_incident_graph(submission, catalog, at)

        expected_sdo, expected_sro = expected_graph_counts(a, c, t)
        assert len(graph.all_objects) == expected_sdo + expected_sro, (i, a, c, t)
        assert (len(graph.actors), len(graph.locations), len(graph.techniques)) == (a, c, t)

        bundle = graph_to_bundle(graph)
        histogram = type_histogram(serialize_bundle(bundle))
        expected_histogram = {"intrusion-set": 1}
        for object_type, count in (
            ("threat-actor", a),
            ("location", c),
            ("attack-pattern", t),
            ("relationship", a + c + t),
        ):
            if count:
                expected_histogram[object_type] = count
        assert histogram == expected_histogram, (i, a, c, t)

        assert validate_bundle(bundle) == []


def test_criterion_4_reference_incident(backend, store, admin, catalog):
    """The worked reference incident: 29 objects, 15 nodes, 14 edges —
    all counts re-derived from the produced bundle, not assumed."""
    codes = sorted(t.external_id for t in catalog)[:12]
    assert len(set(codes)) == 12

    response = admin.post(
        "/api/incidents",
        json={
            "name": "Bucha massacre at Ukraine",
            "description": "Coordinated denial narratives around the Bucha events.",
            "date": "2022-04-01",
            "threat_actors": ["Russia"],
            "target_countries": ["Ukraine"],
            "techniques": codes,
        },
    )
    assert response.status_code == 201, response.text
    body = response.json()
    assert body["object_count"] == 29
    incident_id = body["incident_id"]

    raw = admin.get(f"/api/incidents/{incident_id}/bundle").content
    histogram = type_histogram(raw)
    assert histogram == {
        "intrusion-set": 1,
        "threat-actor": 1,
        "location": 1,
        "attack-pattern": 12,
        "relationship": 14,
    }
    assert sum(histogram.values()) == 29

    # Second, cruder oracle: count type markers in the canonical text.
    text = raw.decode("utf-8")
    for object_type, count in histogram.items():
        assert count_type_markers(text, object_type) == count

    sdo_count = sum(n for t, n in histogram.items() if t != "relationship")
    assert (sdo_count, histogram["relationship"]) == (15, 14)

    graph = admin.get(f"/api/incidents/{incident_id}/graph").json()
    assert len(graph["nodes"]) == 15
    assert len(graph["edges"]) == 14
    node_ids = {node["id"] for node in graph["nodes"]}
    assert len(node_ids) == 15
    for edge in graph["edges"]:
        assert edge["source"] in node_ids
        assert edge["target"] in node_ids
    assert Counter(edge["type"] for edge in graph["edges"]) == Counter(
        {"attributed-to": 1, "targets": 1, "uses": 12}
    )


def test_criterion_5_feed_matches_brute_force(feed, store, catalog, seed_csv_bytes):
    """/incidents?newer_than=t equals the brute-force filter over the raw
    stored objects, for 100 random cursors plus both edges."""
    report = import_csv(store, catalog, seed_csv_bytes, "seeder", now_utc())
    assert report.accepted == 118 and not report.rejected

    # Randomize the store beyond the fixture: 20 extra mixed submissions.
    rng = random.Random(20240501)
    codes = sorted(t.external_id for t in catalog)
    for i in range(20):
        submission = IncidentSubmission.build(
            name=f"Feed fuzz incident {i:02d}",
            description="",
            date="2024-01-15",
            threat_actors=rng.sample(ACTOR_POOL, rng.randint(0, 5)),
            target_countries=rng.sample(COUNTRY_POOL, rng.randint(0, 5)),
            technique_refs=rng.sample(codes, rng.randint(0, 15)),
        )
        store_submission(store, catalog, submission, "seeder", now_utc())

    user = store.accounts.create_user("feeder", PASSWORD, now_utc())
    _, raw_key = store.accounts.create_api_key(user.user_id, "acceptance", now_utc())
    headers = {"Authorization": raw_key}

    raws = [o.to_dict() for o in store.objects.all_objects()]
    stamps = sorted(parse_wire_timestamp(_stamp(p)) for p in raws)
    assert len(raws) > 118

    cursors = list(rng.sample(stamps, 30))  # exact stamps: strictness at the boundary
    span_start = stamps[0] - timedelta(hours=1)
    span_seconds = (stamps[-1] + timedelta(hours=1) - span_start).total_seconds()
    while len(cursors) < 100:
        cursors.append(span_start + timedelta(seconds=rng.uniform(0, span_seconds)))

    for cursor in cursors:
        response = feed.get(
            "/incidents",
            params={"newer_than": format_timestamp(cursor)},
            headers=headers,
        )
        assert response.status_code == 200
        got = [
            (parse_wire_timestamp(_stamp(entry)), entry["id"])
            for entry in response.json()["objects"]
        ]
        assert got == brute_force_newer_than(raws, cursor), format_timestamp(cursor)

    full = feed.get(
        "/incidents", params={"newer_than": format_timestamp(EPOCH)}, headers=headers
    ).json()
    assert len(full["objects"]) == len(raws)
    assert {e["id"] for e in full["objects"]} == {p["id"] for p in raws}

    empty = feed.get(
        "/incidents",
        params={"newer_than": format_timestamp(stamps[-1])},
        headers=headers,
    ).json()
    assert empty["type"] == "bundle"
    assert empty["objects"] == []


def test_criterion_6_delta_sync(feed, backend, store, catalog, seed_csv_bytes, tmp_path):
    """After a full sync, a second run forwards nothing; one new incident
    makes the next run forward exactly that incident's bundle, counted by
    enumerating the bundle itself."""
    # Seed a prefix of the corpus so part of the technique vocabulary
    # stays unused — the new incident below needs both kinds.
    reader = csv.reader(io.StringIO(seed_csv_bytes.decode("utf-8-sig")))
    rows = list(reader)
    out = io.StringIO()
    csv.writer(out, lineterminator="\n").writerows(rows[:41])  # header + 40
    report = import_csv(store, catalog, out.getvalue(), "seeder", now_utc())
    assert report.accepted == 40 and not report.rejected

    operator = login(backend, store, "sync-admin")
    api_key = operator.post(
        "/api/profile/apikeys", json={"label": "delta sync"}
    ).json()["token"]

    config = ConnectorConfig(
        feed_url="http://testserver",
        api_key=api_key,
        state_path=tmp_path / "state.json",
        run_every=timedelta(minutes=5),
    )
    sink = MockSink(tmp_path / "sink.json")

    first = run_once(config, sink, http=feed)
    assert first.last_status == "ok"
    assert first.total_objects_forwarded == store.objects.object_count
    assert sink.object_set() == _server_pairs(store)

    second = run_once(config, sink, http=feed)
    assert second.last_status == "ok"
    assert second.total_objects_forwarded - first.total_objects_forwarded == 0

    # One new incident, deliberately mixing vocabulary the store has seen
    # with vocabulary it has not: a reused actor and technique must ride
    # the feed again (version rebased on write), fresh ones for the first
    # time.
    stored = store.objects.all_objects()
    reused_actor = next(o.name for o in stored if o.type == "threat-actor")
    stored_codes = {
        technique_code(o) for o in stored if o.type == "attack-pattern"
    }
    fresh_codes = [c for c in sorted(t.external_id for t in catalog) if c not in stored_codes]
    assert fresh_codes, "corpus prefix left no unused techniques; shrink the prefix"
    techniques = sorted(stored_codes)[:4] + fresh_codes[:3]
    assert len(techniques) >= 5

    response = operator.post(
        "/api/incidents",
        json={
            "name": "Delta sync drill",
            "description": "Inserted between connector runs.",
            "date": "2024-06-15",
            "threat_actors": [reused_actor, "Bolt Cutter"],
            "target_countries": ["Moldova"],
            "techniques": techniques,
        },
    )
    assert response.status_code == 201, response.text
    incident_id = response.json()["incident_id"]

    raw = operator.get(f"/api/incidents/{incident_id}/bundle").content
    bundle_count = len(json.loads(raw.decode("utf-8"))["objects"])
    assert bundle_count == response.json()["object_count"]

    third = run_once(config, sink, http=feed)
    assert third.last_status == "ok"
    assert third.total_objects_forwarded - second.total_objects_forwarded == bundle_count
    assert sink.count == store.objects.object_count
    assert sink.object_set() == _server_pairs(store)


def test_criterion_7_auth_contract(feed, backend, store, catalog):
    """Every bad API key answers a stable 401; a valid key answers 200;
    the internal API never accepts API keys."""
    holder = login(backend, store, "keyholder")
    first_key = holder.post("/api/profile/apikeys", json={"label": "will revoke"}).json()
    second_key = holder.post("/api/profile/apikeys", json={"label": "stays live"}).json()

    params = {"newer_than": format_timestamp(EPOCH)}

    def feed_call(headers):
        return feed.get("/incidents", params=params, headers=headers)

    # valid key → 200
    assert feed_call({"Authorization": first_key["token"]}).status_code == 200

    bad_cases = {
        "missing": {},
        "malformed": {"Authorization": "!!! not a key !!!"},
        "unknown": {"Authorization": "0" * 64},
    }
    # revoked: kill the first key, then present it again
    revoke = holder.delete(f"/api/profile/apikeys/{first_key['key_id']}")
    assert revoke.status_code == 204
    bad_cases["revoked"] = {"Authorization": first_key["token"]}

    for label, headers in bad_cases.items():
        responses = [feed_call(headers) for _ in range(2)]
        for response in responses:
            assert response.status_code == 401, label
            assert response.json()["code"] == "invalid-api-key", label
        # stable: byte-identical body on repeat
        assert responses[0].content == responses[1].content, label

    # valid (live) key still 200 after all that
    assert feed_call({"Authorization": second_key["token"]}).status_code == 200

    # the internal API rejects even a live API key
    for headers in (
        {"Authorization": second_key["token"]},
        {"Authorization": f"Bearer {second_key['token']}"},
    ):
        response = backend.get("/api/session", headers=headers)
        assert response.status_code == 401
        assert response.json()["code"] == "invalid-session"


def test_criterion_8_round_trip_inverse(catalog, tmp_path):
    """100 randomized incidents exported from one instance and imported
    into a fresh one keep their identity: name, date, actors, countries,
    technique codes."""
    rng = random.Random(20240815)
    codes = sorted(t.external_id for t in catalog)

    store_a = open_store(None)
    store_b = open_store(None)
    app_a = create_backend_app(store_a, catalog)
    app_b = create_backend_app(store_b, catalog)

    with TestClient(app_a, raise_server_exceptions=False) as client_a, TestClient(
        app_b, raise_server_exceptions=False
    ) as client_b:
        exporter = login(client_a, store_a, "exporter")
        importer = login(client_b, store_b, "importer")

        expected: dict[str, tuple[str, frozenset, frozenset, frozenset]] = {}
        for i in range(100):
            a = rng.randint(0, 5)
            c = rng.randint(0, 5)
            t = rng.randint(0, 15)
            name = f"Round trip incident {i:03d}"
            date = (
                datetime(2020, 1, 1, tzinfo=timezone.utc)
                + timedelta(days=rng.randint(0, 1500))
            ).date().isoformat()
            actors = rng.sample(ACTOR_POOL, a)
            countries = rng.sample(COUNTRY_POOL, c)
            techniques = rng.sample(codes, t)

            response = exporter.post(
                "/api/incidents",
                json={
                    "name": name,
                    "description": f"round trip case {i}",
                    "date": date,
                    "threat_actors": actors,
                    "target_countries": countries,
                    "techniques": techniques,
                },
            )
            assert response.status_code == 201, response.text
            # Countries are stored under their canonical display names
            # ("Turkey" → "Türkiye"), so the expectation is canonical too.
            expected[name] = (
                date,
                frozenset(actors),
                frozenset(resolve_country(n)[1] for n in countries),
                frozenset(techniques),
            )

        listing = exporter.get("/api/incidents", params={"page_size": 200}).json()
        assert listing["total"] == 100

        identity_a: dict[str, tuple] = {}
        for row in listing["rows"]:
            bundle_bytes = exporter.get(f"/api/incidents/{row['id']}/bundle").content
            name, *rest = _bundle_identity(json.loads(bundle_bytes))
            identity_a[name] = tuple(rest)
            imported = importer.post(
                "/api/incidents/bulk",
                content=bundle_bytes,
                headers={"content-type": "application/json"},
            )
            assert imported.status_code == 200, imported.text
            assert imported.json()["accepted"] == 1
            assert imported.json()["rejected"] == []

        listing_b = importer.get("/api/incidents", params={"page_size": 200}).json()
        assert listing_b["total"] == 100

        # The fresh instance must reproduce each incident's identity
        # exactly — checked against the original instance's export and
        # against the submissions themselves.
        identity_b: dict[str, tuple] = {}
        for row in listing_b["rows"]:
            payload = json.loads(
                importer.get(f"/api/incidents/{row['id']}/bundle").content
            )
            name, *rest = _bundle_identity(payload)
            identity_b[name] = tuple(rest)

        assert identity_b == identity_a
        assert set(identity_b) == set(expected)
        for name, (date, actors, countries, codes) in expected.items():
            assert identity_b[name] == (date, actors, countries, codes), name
