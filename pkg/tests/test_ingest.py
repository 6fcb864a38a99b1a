from datetime import datetime, timezone

import pytest

from disinfo_exchange.ingest import import_bundle, import_csv, store_submission
from disinfo_exchange.stix import Bundle, StixObject
from disinfo_exchange.transform import (
    CSV_COLUMNS,
    CsvSchemaError,
    EmptyImportError,
    IncidentSubmission,
    build_incident_graph,
)

from oracles import expected_graph_counts

T0 = datetime(2024, 3, 1, 12, 0, 0, tzinfo=timezone.utc)
HEADER = ",".join(CSV_COLUMNS)


def test_store_submission_counts(memory_store, catalog):
    submission = IncidentSubmission.build(
        name="Counted", description="", date="2022-04-01",
        threat_actors=["IRA", "GRU"], target_countries=["Ukraine"],
        technique_refs=["T0114", "T0110", "T0085.001"],
    )
    store_submission(memory_store, catalog, submission, "u", T0)
    sdo, sro = expected_graph_counts(2, 1, 3)
    assert memory_store.objects.object_count == sdo + sro


def test_import_csv_keeps_good_rows_reports_bad_ones(memory_store, catalog):
    data = (
        HEADER + "\n"
        + "Good one,,2022-04-01,Ukraine,IRA,T0114\n"
        + "No techniques match,,2022-04-02,Poland,GRU,T9999\n"
        + "Good two,,2022-04-03,Moldova,IRA,T0110\n"
        + ",,bad-date,,,\n"
    )
    report = import_csv(memory_store, catalog, data, "u", T0)
    assert report.accepted == 2
    assert [r.row for r in report.rejected] == [3, 5]
    assert "T9999" in report.rejected[0].reason
    assert memory_store.objects.list_incidents().total == 2


def test_import_csv_bad_header_stores_nothing(memory_store, catalog):
    with pytest.raises(CsvSchemaError):
        import_csv(memory_store, catalog, "name,description\nGood,,\n", "u", T0)
    assert memory_store.objects.object_count == 0


def test_import_csv_payload_shape(memory_store, catalog):
    data = HEADER + "\nOnly,,2022-04-01,Ukraine,IRA,T0114\n"
    payload = import_csv(memory_store, catalog, data, "u", T0).to_payload()
    assert payload == {"accepted": 1, "rejected": []}


def test_import_bundle_positions_and_drops(memory_store, catalog):
    good = build_incident_graph(
        IncidentSubmission.build(
            name="From a peer", description="", date="2022-04-01",
            threat_actors=["IRA"], target_countries=["Ukraine"],
            technique_refs=["T0114"],
        ),
        catalog,
        T0,
    )
    nameless = StixObject(
        {
            "type": "intrusion-set",
            "id": "intrusion-set--7f1c62bb-82a0-47f5-9b8f-21e0db3b99ad",
            "created": "2022-01-01T00:00:00.000Z",
            "modified": "2022-01-01T00:00:00.000Z",
        }
    )
    orphan = StixObject(
        {
            "type": "location",
            "id": "location--7f1c62bb-82a0-47f5-9b8f-21e0db3b99ad",
            "name": "Nowhere",
        }
    )
    bundle = Bundle.new(list(good.all_objects) + [nameless, orphan])
    report = import_bundle(memory_store, catalog, bundle, "u", T0)
    assert report.accepted == 1
    assert [r.row for r in report.rejected] == [2]  # second intrusion set
    assert report.dropped_object_ids == (orphan.id,)
    assert "dropped_object_ids" in report.to_payload()
    assert memory_store.objects.get(orphan.id) is None  # never stored blind


def test_import_bundle_requires_incidents(memory_store, catalog):
    actor = StixObject(
        {
            "type": "threat-actor",
            "id": "threat-actor--7f1c62bb-82a0-47f5-9b8f-21e0db3b99ad",
            "name": "Alone",
        }
    )
    with pytest.raises(EmptyImportError):
        import_bundle(memory_store, catalog, Bundle.new([actor]), "u", T0)


def test_reimport_is_idempotent_for_totals(memory_store, catalog):
    data = HEADER + "\nRepeat,,2022-04-01,Ukraine,IRA,T0114\n"
    import_csv(memory_store, catalog, data, "u", T0)
    before = memory_store.objects.object_count
    import_csv(memory_store, catalog, data, "u", T0)
    assert memory_store.objects.object_count == before
    assert memory_store.objects.list_incidents().total == 1
