"""Connector cursor state, persisted between runs.

The state file is tiny JSON, rewritten atomically after every completed
run.  ``last_run`` is the *request initiation* instant of the newest
successful pull — the next run asks for everything newer than that.
"""

from __future__ import annotations

import json
import os
import tempfile
from dataclasses import dataclass, replace
from datetime import datetime
from pathlib import Path

from ..stix import format_timestamp, parse_timestamp


@dataclass(frozen=True)
class ConnectorState:
    last_run: datetime | None = None
    last_status: str = "never-ran"
    total_objects_forwarded: int = 0

    def advanced(self, run_started: datetime, forwarded: int) -> "ConnectorState":
        return replace(
            self,
            last_run=run_started,
            last_status="ok",
            total_objects_forwarded=self.total_objects_forwarded + forwarded,
        )

    def failed(self, reason: str) -> "ConnectorState":
        """Record the failure; the cursor deliberately does not move."""
        return replace(self, last_status=f"error: {reason}")


def load_state(path: str | Path) -> ConnectorState:
    try:
        with open(path, encoding="utf-8") as handle:
            payload = json.load(handle)
    except FileNotFoundError:
        return ConnectorState()
    last_run = payload.get("last_run")
    return ConnectorState(
        last_run=parse_timestamp(last_run) if isinstance(last_run, str) else None,
        last_status=str(payload.get("last_status", "never-ran")),
        total_objects_forwarded=int(payload.get("total_objects_forwarded", 0)),
    )


def save_state(path: str | Path, state: ConnectorState) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    payload = {
        "last_run": format_timestamp(state.last_run) if state.last_run else None,
        "last_status": state.last_status,
        "total_objects_forwarded": state.total_objects_forwarded,
    }
    fd, tmp_name = tempfile.mkstemp(dir=path.parent, prefix=path.name + ".", suffix=".tmp")
    with os.fdopen(fd, "w", encoding="utf-8") as handle:
        json.dump(payload, handle, indent=2, sort_keys=True)
        handle.write("\n")
    os.replace(tmp_name, path)
