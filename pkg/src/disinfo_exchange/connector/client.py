"""The pull loop: ask the feed for everything new, hand it to the sink.

Each run: note the wall clock, request ``/incidents?newer_than=<cursor>``
with the feed API key, push the returned bundle into the sink unchanged,
then advance the cursor to the noted instant and persist it.  Because the
cursor is the *request* time, objects written while the response was in
flight are picked up again next run — the sink's dedup makes that
harmless, and nothing is ever missed.
"""

from __future__ import annotations

import logging
import re
import threading
from dataclasses import dataclass
from datetime import timedelta
from pathlib import Path

import httpx

from ..stix import EPOCH, format_timestamp, now_utc
from .sink import SinkContract
from .state import ConnectorState, load_state, save_state

logger = logging.getLogger(__name__)

DEFAULT_RUN_EVERY = timedelta(minutes=5)


class ConnectorConfigError(ValueError):
    """The connector cannot start with the configuration it was given."""


class CredentialError(RuntimeError):
    """The feed rejected the API key — retrying cannot help."""


_ISO_DURATION = re.compile(
    r"^[Pp](?:(?P<days>\d+)[Dd])?"
    r"(?:[Tt](?:(?P<hours>\d+)[Hh])?(?:(?P<minutes>\d+)[Mm])?(?:(?P<seconds>\d+)[Ss])?)?$"
)
_SHORT_DURATION = re.compile(r"^(?P<value>\d+)(?P<unit>[smhd]?)$")


def parse_duration(text: str) -> timedelta:
    """Accept ISO 8601 durations (``PT30S``), short forms (``30s``, ``5m``,
    ``2h``, ``1d``) and bare seconds (``300``)."""
    text = text.strip()
    match = _ISO_DURATION.match(text)
    if match and any(match.groupdict().values()):
        parts = {k: int(v) for k, v in match.groupdict().items() if v}
        return timedelta(**parts)
    match = _SHORT_DURATION.match(text)
    if match:
        value = int(match.group("value"))
        unit = match.group("unit") or "s"
        return timedelta(
            seconds=value * {"s": 1, "m": 60, "h": 3600, "d": 86400}[unit]
        )
    raise ConnectorConfigError(f"cannot parse duration {text!r}")


@dataclass(frozen=True)
class ConnectorConfig:
    feed_url: str
    api_key: str
    state_path: Path
    run_every: timedelta = DEFAULT_RUN_EVERY

    def __post_init__(self):
        if not self.feed_url:
            raise ConnectorConfigError("feed_url is required")
        if not self.api_key:
            raise ConnectorConfigError("feed_api_key is required")
        if self.run_every <= timedelta(0):
            raise ConnectorConfigError("run_every must be positive")


def run_once(
    config: ConnectorConfig,
    sink: SinkContract,
    *,
    state: ConnectorState | None = None,
    http: httpx.Client | None = None,
) -> ConnectorState:
    """One pull cycle.  Returns the new state (already persisted).

    Transient failures (network, 5xx) leave the cursor untouched so the
    next run retries the same window.  A 401 raises
    :class:`CredentialError` — that needs a human, not a retry.
    """
    if state is None:
        state = load_state(config.state_path)
    run_started = now_utc()
    cursor = state.last_run if state.last_run is not None else EPOCH
    url = config.feed_url.rstrip("/") + "/incidents"
    params = {"newer_than": format_timestamp(cursor)}
    headers = {"Authorization": config.api_key}

    owns_client = http is None
    client = http or httpx.Client(timeout=30.0)
    try:
        response = client.get(url, params=params, headers=headers)
    except httpx.HTTPError as exc:
        new_state = state.failed(f"network: {exc}")
        save_state(config.state_path, new_state)
        logger.error("feed request failed: %s", exc)
        return new_state
    finally:
        if owns_client:
            client.close()

    if response.status_code == 401:
        new_state = state.failed("invalid API key")
        save_state(config.state_path, new_state)
        raise CredentialError("the feed rejected the API key (401)")
    if response.status_code != 200:
        new_state = state.failed(f"HTTP {response.status_code}")
        save_state(config.state_path, new_state)
        logger.error("feed answered %s; cursor not advanced", response.status_code)
        return new_state

    # Forward the bundle exactly as received.
    report = sink.ingest(response.content)
    if report.errors:
        new_state = state.failed("sink rejected the bundle")
        save_state(config.state_path, new_state)
        logger.error("sink rejected the bundle; cursor not advanced")
        return new_state

    forwarded = report.ingested + report.deduplicated
    new_state = state.advanced(run_started, forwarded)
    save_state(config.state_path, new_state)
    logger.info(
        "pulled %d object(s) (%d new, %d duplicate); cursor now %s",
        forwarded,
        report.ingested,
        report.deduplicated,
        format_timestamp(run_started),
    )
    return new_state


def run_loop(
    config: ConnectorConfig,
    sink: SinkContract,
    *,
    stop: threading.Event | None = None,
    http: httpx.Client | None = None,
) -> ConnectorState:
    """Pull forever (until *stop* is set), sleeping ``run_every`` between
    rounds.  Credential failures abort the loop."""
    stop = stop or threading.Event()
    state = load_state(config.state_path)
    while not stop.is_set():
        state = run_once(config, sink, state=state, http=http)
        if stop.wait(config.run_every.total_seconds()):
            break
    return state
