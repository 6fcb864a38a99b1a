import json
from datetime import datetime, timedelta, timezone

import pytest

from disinfo_exchange.stix import EPOCH, MIN_TICK, make_threat_actor
from disinfo_exchange.store import (
    IncidentNotFoundError,
    NotAnIncidentError,
    PagingError,
    StoreWriteError,
    make_excerpt,
    open_store,
)
from disinfo_exchange.store import objects as store_objects
from disinfo_exchange.transform import IncidentSubmission, build_incident_graph

from oracles import brute_force_newer_than, parse_wire_timestamp

T0 = datetime(2024, 3, 1, 12, 0, 0, tzinfo=timezone.utc)


def submit(store, catalog, name, date="2022-04-01", actors=("IRA",),
           countries=("Ukraine",), techniques=("T0114",), at=T0, uploader="tester"):
    submission = IncidentSubmission.build(
        name=name, description=f"About {name}", date=date,
        threat_actors=list(actors), target_countries=list(countries),
        technique_refs=list(techniques),
    )
    graph = build_incident_graph(submission, catalog, at)
    store.objects.upsert_objects(graph.all_objects, uploader, at)
    return graph


# ---------------------------------------------------------------------------
# upsert


def test_insert_keeps_the_incoming_version(memory_store):
    actor = make_threat_actor("Fresh", T0)
    report = memory_store.objects.upsert_objects([actor], "u", T0)
    assert (report.inserted, report.updated) == (1, 0)
    assert memory_store.objects.get(actor.id).to_dict() == actor.to_dict()


def test_identical_repost_at_same_instant_bumps_by_exactly_one_tick(memory_store):
    actor = make_threat_actor("Same", T0)
    memory_store.objects.upsert_objects([actor], "u", T0)
    report = memory_store.objects.upsert_objects([actor], "u", T0)
    assert (report.inserted, report.updated) == (0, 1)

    stored = memory_store.objects.get(actor.id)
    # oracle: original wire stamp, advanced by hand
    expected = parse_wire_timestamp(actor.properties["modified"]) + timedelta(microseconds=1)
    assert parse_wire_timestamp(stored.properties["modified"]) == expected
    assert MIN_TICK == timedelta(microseconds=1)


def test_identical_repost_later_is_stamped_with_the_write_instant(memory_store):
    actor = make_threat_actor("Same", T0)
    memory_store.objects.upsert_objects([actor], "u", T0)
    later = T0 + timedelta(hours=1)
    memory_store.objects.upsert_objects([actor], "u", later)
    stored = memory_store.objects.get(actor.id)
    assert parse_wire_timestamp(stored.properties["modified"]) == later


def test_genuinely_newer_version_is_kept_as_is(memory_store):
    actor = make_threat_actor("Evolving", T0)
    memory_store.objects.upsert_objects([actor], "u", T0)
    newer = actor.with_modified(T0 + timedelta(days=3))
    memory_store.objects.upsert_objects([newer], "u", T0 + timedelta(days=3))
    stored = memory_store.objects.get(actor.id)
    assert stored.properties["modified"] == newer.properties["modified"]


def test_stale_version_still_moves_forward(memory_store):
    actor = make_threat_actor("Ahead", T0 + timedelta(days=5))
    memory_store.objects.upsert_objects([actor], "u", T0)
    stale = actor.with_modified(T0)  # older than what is stored
    at = T0 + timedelta(days=6)
    memory_store.objects.upsert_objects([stale], "u", at)
    stored = memory_store.objects.get(actor.id)
    assert parse_wire_timestamp(stored.properties["modified"]) == at


def test_backdated_write_still_clears_the_stored_version(memory_store):
    # clock skew: the write instant is behind what is already stored
    actor = make_threat_actor("Skewed", T0 + timedelta(days=5))
    memory_store.objects.upsert_objects([actor], "u", T0 + timedelta(days=5))
    memory_store.objects.upsert_objects([actor], "u", T0)  # backdated at
    stored = memory_store.objects.get(actor.id)
    got = parse_wire_timestamp(stored.properties["modified"])
    expected = parse_wire_timestamp(actor.properties["modified"]) + timedelta(microseconds=1)
    assert got == expected


def test_old_framework_stamps_are_rebased_on_insert(memory_store, catalog):
    # a catalog copy arrives with its framework-era modified; storing it
    # rebases modified to the write instant so the feed can deliver it
    technique = next(iter(catalog)).object
    original = parse_wire_timestamp(technique.properties["modified"])
    at = original + timedelta(days=90)
    memory_store.objects.upsert_objects([technique], "u", at)
    stored = memory_store.objects.get(technique.id)
    assert parse_wire_timestamp(stored.properties["modified"]) == at
    # created still names the framework file's date
    assert stored.properties["created"] == technique.properties["created"]


def test_mixed_batch_report(memory_store):
    old = make_threat_actor("Old", T0)
    memory_store.objects.upsert_objects([old], "u", T0)
    new = make_threat_actor("New", T0)
    report = memory_store.objects.upsert_objects([old, new], "u", T0 + MIN_TICK)
    assert (report.inserted, report.updated) == (1, 1)
    assert memory_store.objects.object_count == 2


def test_failed_persist_changes_nothing(store, monkeypatch):
    actor = make_threat_actor("Kept", T0)
    store.objects.upsert_objects([actor], "u", T0)
    snapshot_before = store.data_dir.joinpath("objects.json").read_bytes()

    def explode(path, payload):
        raise OSError("disk full")

    monkeypatch.setattr(store_objects, "atomic_write_json", explode)
    with pytest.raises(StoreWriteError):
        store.objects.upsert_objects([make_threat_actor("Lost", T0)], "u", T0)

    assert store.objects.object_count == 1  # memory untouched
    assert store.data_dir.joinpath("objects.json").read_bytes() == snapshot_before


def test_reload_round_trip(store, catalog, tmp_path):
    graph = submit(store, catalog, "Persisted incident", uploader="alice")
    reopened = open_store(store.data_dir)
    assert reopened.objects.object_count == store.objects.object_count
    for obj in graph.all_objects:
        assert reopened.objects.get(obj.id).to_dict() == store.objects.get(obj.id).to_dict()
    # bookkeeping fields survive too
    payload = json.loads(store.data_dir.joinpath("objects.json").read_text())
    assert {entry["uploader"] for entry in payload["objects"]} == {"alice"}


# ---------------------------------------------------------------------------
# the feed query


def seed_versions(store):
    """Objects with hand-picked version stamps; returns their raw dicts."""
    raws = []
    for i, name in enumerate(["alpha", "bravo", "charlie", "delta", "echo"]):
        at = T0 + timedelta(minutes=10 * i)
        actor = make_threat_actor(name, at)
        store.objects.upsert_objects([actor], "u", at)
        raws.append(actor.to_dict())
    return raws


def test_newer_than_matches_brute_force(memory_store):
    raws = seed_versions(memory_store)
    for cursor in [
        EPOCH,
        T0 - timedelta(days=1),
        T0,  # exactly equal to the oldest: strict, so it drops out
        T0 + timedelta(minutes=15),
        T0 + timedelta(minutes=40),  # equal to the newest
        T0 + timedelta(days=1),
    ]:
        got = [
            (parse_wire_timestamp(o.properties["modified"]), o.id)
            for o in memory_store.objects.objects_newer_than(cursor)
        ]
        assert got == brute_force_newer_than(raws, cursor), cursor


def test_newer_than_orders_ties_by_id(memory_store):
    # same instant, different ids
    actors = [make_threat_actor(name, T0) for name in ["zz", "aa", "mm"]]
    memory_store.objects.upsert_objects(actors, "u", T0)
    ids = [o.id for o in memory_store.objects.objects_newer_than(EPOCH)]
    assert ids == sorted(ids)


def test_all_objects_includes_epoch_stamps(memory_store):
    ancient = make_threat_actor("Ancient", EPOCH)
    memory_store.objects.upsert_objects([ancient], "u", EPOCH)
    assert [o.id for o in memory_store.objects.all_objects()] == [ancient.id]
    # but an epoch cursor excludes it: strictly-newer means what it says
    assert memory_store.objects.objects_newer_than(EPOCH) == []


# ---------------------------------------------------------------------------
# excerpts


@pytest.mark.parametrize(
    "text, expected",
    [
        ("", ""),
        ("short and sweet", "short and sweet"),
        ("  spaced\n\nout   text ", "spaced out text"),
    ],
)
def test_excerpt_short_texts(text, expected):
    assert make_excerpt(text) == expected


def test_excerpt_cuts_at_word_boundary():
    text = ("word " * 100).strip()  # 499 chars
    cut = make_excerpt(text)
    assert cut.endswith("…")
    assert len(cut) <= 281
    assert not cut[:-1].endswith(" ")
    # never cuts mid-word
    assert cut[:-1].split(" ")[-1] == "word"


def test_excerpt_handles_unbroken_runs():
    cut = make_excerpt("x" * 500, limit=10)
    assert cut == "x" * 10 + "…"


# ---------------------------------------------------------------------------
# incident listing


def test_listing_orders_newest_first_names_break_ties(memory_store, catalog):
    submit(memory_store, catalog, "Older incident", date="2021-01-01")
    submit(memory_store, catalog, "zeta event", date="2023-05-05")
    submit(memory_store, catalog, "Alpha event", date="2023-05-05")
    page = memory_store.objects.list_incidents()
    assert [r.name for r in page.rows] == ["Alpha event", "zeta event", "Older incident"]
    assert page.total == 3


def test_listing_pages(memory_store, catalog):
    for i in range(7):
        submit(memory_store, catalog, f"Incident {i:02d}", date=f"2022-01-{i + 1:02d}")
    first = memory_store.objects.list_incidents(page=1, page_size=3)
    second = memory_store.objects.list_incidents(page=2, page_size=3)
    third = memory_store.objects.list_incidents(page=3, page_size=3)
    names = [r.name for r in first.rows + second.rows + third.rows]
    assert len(names) == 7
    assert names == sorted(names, reverse=True)  # dates ascend with the index
    assert first.total == second.total == 7
    assert memory_store.objects.list_incidents(page=4, page_size=3).rows == ()


def test_listing_filters_by_name_substring(memory_store, catalog):
    submit(memory_store, catalog, "Hospital bombing claims")
    submit(memory_store, catalog, "Election fraud narrative", date="2022-05-01")
    page = memory_store.objects.list_incidents(name_filter="  HOSPITAL ")
    assert [r.name for r in page.rows] == ["Hospital bombing claims"]
    assert page.total == 1
    assert memory_store.objects.list_incidents(name_filter="nothing").total == 0


def test_listing_rejects_bad_paging(memory_store):
    with pytest.raises(PagingError):
        memory_store.objects.list_incidents(page=0)
    with pytest.raises(PagingError):
        memory_store.objects.list_incidents(page_size=0)
    with pytest.raises(PagingError):
        memory_store.objects.list_incidents(page_size=201)


def test_listing_row_shape(memory_store, catalog):
    submit(memory_store, catalog, "Shaped", date="2022-04-01")
    row = memory_store.objects.list_incidents().rows[0]
    assert row.first_seen == "2022-04-01"
    assert row.excerpt == "About Shaped"
    assert row.id.startswith("intrusion-set--")


# ---------------------------------------------------------------------------
# incident views


def test_view_reassembles_the_graph(memory_store, catalog):
    graph = submit(
        memory_store, catalog, "Viewed",
        actors=["Zulu group", "alpha cell", "Mike unit"],
        countries=["Ukraine", "Moldova"],
        techniques=["T0114", "T0110"],
    )
    view = memory_store.objects.get_incident_view(graph.intrusion_set.id)
    assert [a.name for a in view.actors] == ["alpha cell", "Mike unit", "Zulu group"]
    assert [l.name for l in view.locations] == ["Moldova", "Ukraine"]
    assert {t.id for t in view.techniques} == {t.id for t in graph.techniques}
    kinds = [r.relationship_type for r in view.relationships]
    assert kinds == sorted(kinds)
    assert len(view.all_objects) == len(graph.all_objects)


def test_view_is_scoped_to_one_incident(memory_store, catalog):
    first = submit(memory_store, catalog, "First", actors=["Shared actor"])
    submit(memory_store, catalog, "Second", date="2022-06-01",
           actors=["Shared actor", "Extra actor"])
    view = memory_store.objects.get_incident_view(first.intrusion_set.id)
    assert [a.name for a in view.actors] == ["Shared actor"]


def test_view_errors(memory_store, catalog):
    graph = submit(memory_store, catalog, "Present")
    with pytest.raises(IncidentNotFoundError):
        memory_store.objects.get_incident_view(
            "intrusion-set--7f1c62bb-82a0-47f5-9b8f-21e0db3b99ad"
        )
    with pytest.raises(NotAnIncidentError):
        memory_store.objects.get_incident_view(graph.actors[0].id)


# ---------------------------------------------------------------------------
# dashboard


def test_dashboard_counts_and_ranking(memory_store, catalog):
    submit(memory_store, catalog, "One", date="2022-01-01",
           actors=["IRA"], countries=["Ukraine"])
    submit(memory_store, catalog, "Two", date="2022-02-01",
           actors=["IRA", "GRU"], countries=["Ukraine", "Poland"])
    submit(memory_store, catalog, "Three", date="2022-03-01",
           actors=["apt unit"], countries=["Moldova"])

    stats = memory_store.objects.dashboard_stats()
    assert stats.incident_count == 3
    assert stats.actor_count == 3
    assert stats.country_count == 3  # Ukraine is shared, stored once

    assert [(r.name, r.incident_count) for r in stats.top_actors] == [
        ("IRA", 2), ("apt unit", 1), ("GRU", 1),  # ties alphabetical, casefolded
    ]
    countries = [(r.name, r.incident_count, r.code) for r in stats.top_countries]
    assert countries[0] == ("Ukraine", 2, "UA")
    assert {c[0] for c in countries[1:]} == {"Poland", "Moldova"}

    assert [r.name for r in stats.recent_incidents] == ["Three", "Two", "One"]


def test_dashboard_top_n_truncates(memory_store, catalog):
    for i in range(4):
        submit(memory_store, catalog, f"I{i}", date=f"2022-01-0{i + 1}",
               actors=[f"Actor {i}"])
    stats = memory_store.objects.dashboard_stats(top_n=2)
    assert len(stats.top_actors) == 2
    assert len(stats.recent_incidents) == 4  # recent list is capped at 5, not top_n


def test_dashboard_empty_store(memory_store):
    stats = memory_store.objects.dashboard_stats()
    assert stats.incident_count == 0
    assert stats.object_count == 0
    assert stats.top_actors == ()
    assert stats.recent_incidents == ()
