from __future__ import annotations

import re
import sys
import warnings
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))  # for `oracles` / `e2e` imports

warnings.filterwarnings("ignore", category=DeprecationWarning)

from fastapi.testclient import TestClient  # noqa: E402

from disinfo_exchange.backend import create_backend_app  # noqa: E402
from disinfo_exchange.catalog import default_catalog_path, load_catalog_file  # noqa: E402
from disinfo_exchange.public_api import create_public_app  # noqa: E402
from disinfo_exchange.store import open_store  # noqa: E402


@pytest.fixture(scope="session")
def catalog():
    return load_catalog_file(default_catalog_path())


@pytest.fixture(scope="session")
def catalog_bytes() -> bytes:
    return default_catalog_path().read_bytes()


@pytest.fixture()
def store(tmp_path):
    """A file-backed store in a fresh directory."""
    return open_store(tmp_path / "data")


@pytest.fixture()
def memory_store():
    return open_store(None)


@pytest.fixture()
def backend(store, catalog):
    app = create_backend_app(store, catalog)
    with TestClient(app, raise_server_exceptions=False) as client:
        yield client


@pytest.fixture()
def feed(store, catalog):
    app = create_public_app(store, catalog)
    with TestClient(app, raise_server_exceptions=False) as client:
        yield client


class Actor:
    """A logged-in API user: client + auth headers in one handle."""

    def __init__(self, client: TestClient, token: str, username: str, role: str, user_id: str):
        self.client = client
        self.token = token
        self.username = username
        self.role = role
        self.user_id = user_id
        self.headers = {"Authorization": f"Bearer {token}"}

    def _merged(self, kw):
        kw["headers"] = {**self.headers, **kw.get("headers", {})}
        return kw

    def get(self, path, **kw):
        return self.client.get(path, **self._merged(kw))

    def post(self, path, **kw):
        return self.client.post(path, **self._merged(kw))

    def put(self, path, **kw):
        return self.client.put(path, **self._merged(kw))

    def delete(self, path, **kw):
        return self.client.delete(path, **self._merged(kw))


def login(client: TestClient, store, username: str, password: str = "correct horse battery",
          role: str | None = None) -> Actor:
    """Register (or create with an explicit role) and log in."""
    if role is None:
        response = client.post(
            "/api/users", json={"username": username, "password": password}
        )
        assert response.status_code == 201, response.text
    else:
        from disinfo_exchange.stix import now_utc

        store.accounts.create_user(username, password, now_utc(), role=role)
    response = client.post(
        "/api/session", json={"username": username, "password": password}
    )
    assert response.status_code == 200, response.text
    body = response.json()
    who = client.get(
        "/api/session", headers={"Authorization": f"Bearer {body['token']}"}
    ).json()
    return Actor(client, body["token"], body["username"], body["role"], who["user_id"])


@pytest.fixture()
def admin(backend, store) -> Actor:
    """First registered account — the admin."""
    return login(backend, store, "admin-user")


@pytest.fixture(scope="session")
def seed_csv_bytes() -> bytes:
    from disinfo_exchange.cli import default_seed_path

    return default_seed_path().read_bytes()


# -- acceptance summary --------------------------------------------------

ACCEPTANCE_TITLES = {
    1: "118-row CSV bulk import accepted in full, idempotently, under 30s",
    2: "connector --once forwards the whole corpus; sink matches server exactly",
    3: "200 randomized submissions: exact graph cardinality, zero violations",
    4: "reference incident: 29-object bundle; graph 15 nodes / 14 edges",
    5: "100 random cursors: feed equals brute-force filter, incl. edge cursors",
    6: "incremental pull: steady state forwards 0; a new incident forwards exactly its bundle",
    7: "feed auth is hermetic: stable 401s for every bad key; internal API rejects keys",
    8: "100 randomized incidents survive export → import into a fresh instance",
}

_ACCEPTANCE_RESULTS: dict[int, str] = {}
_CRITERION_RE = re.compile(r"test_criterion_(\d+)")


def pytest_runtest_logreport(report):
    match = _CRITERION_RE.search(report.nodeid)
    if not match or "test_acceptance" not in report.nodeid:
        return
    criterion = int(match.group(1))
    if report.when == "call":
        _ACCEPTANCE_RESULTS[criterion] = "PASS" if report.passed else "FAIL"
    elif report.when == "setup" and (report.failed or report.skipped):
        _ACCEPTANCE_RESULTS[criterion] = "FAIL" if report.failed else "SKIP"


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for criterion in sorted(ACCEPTANCE_TITLES):
        outcome = _ACCEPTANCE_RESULTS.get(criterion, "NOT RUN")
        title = ACCEPTANCE_TITLES[criterion]
        terminalreporter.write_line(f"[{outcome}] criterion {criterion}: {title}")
    terminalreporter.write_line(
        "[INFO] criterion 9: web UI flows — covered by the frontend vitest suite"
    )
