"""Snapshot files: write-then-rename JSON, so readers never see a torn file."""

from __future__ import annotations

import json
import os
import tempfile
from pathlib import Path
from typing import Any


class StoreWriteError(RuntimeError):
    """Persisting a snapshot failed; in-memory state was left untouched."""


def atomic_write_json(path: Path, payload: Any) -> None:
    """Serialize *payload* next to *path* and rename it into place.

    Snapshots are machine state, so they are written compact; dumping the
    whole store happens on every batch and the bytes add up.
    """
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp_name = tempfile.mkstemp(
        dir=path.parent, prefix=path.name + ".", suffix=".tmp"
    )
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as handle:
            json.dump(
                payload, handle, sort_keys=True, separators=(",", ":"), ensure_ascii=False
            )
            handle.write("\n")
        os.replace(tmp_name, path)
    except OSError:
        try:
            os.unlink(tmp_name)
        except OSError:
            pass
        raise


def load_json(path: Path) -> Any | None:
    """Read a snapshot, or None when it does not exist yet."""
    try:
        with open(path, encoding="utf-8") as handle:
            return json.load(handle)
    except FileNotFoundError:
        return None
