"""Service configuration from environment variables.

Recognized keys (upper-case preferred, lower-case accepted):

- ``BIND_ADDR``          internal API bind, default ``127.0.0.1:8000``
- ``PUBLIC_BIND_ADDR``   public feed bind, default ``127.0.0.1:8100``
- ``DATA_DIR``           store directory, default ``./data``
- ``CATALOG_PATH``       DISARM snapshot, default: the vendored copy
- ``SEED_ON_START``      ``1``/``true`` loads the seed corpus into an empty store
- ``STATIC_DIR``         built web UI to serve at ``/`` (optional)
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from pathlib import Path
from typing import Mapping

from .catalog import default_catalog_path

_TRUTHY = {"1", "true", "yes", "on"}


@dataclass(frozen=True)
class ServiceConfig:
    bind_addr: str = "127.0.0.1:8000"
    public_bind_addr: str = "127.0.0.1:8100"
    data_dir: Path = Path("data")
    catalog_path: Path = None  # type: ignore[assignment]  # filled in __post_init__
    seed_on_start: bool = False
    static_dir: Path | None = None

    def __post_init__(self):
        if self.catalog_path is None:
            object.__setattr__(self, "catalog_path", default_catalog_path())


def _get(env: Mapping[str, str], name: str, default: str = "") -> str:
    return env.get(name.upper()) or env.get(name.lower()) or default


def load_config(env: Mapping[str, str] | None = None) -> ServiceConfig:
    env = env if env is not None else os.environ
    static_raw = _get(env, "STATIC_DIR")
    catalog_raw = _get(env, "CATALOG_PATH")
    return ServiceConfig(
        bind_addr=_get(env, "BIND_ADDR", "127.0.0.1:8000"),
        public_bind_addr=_get(env, "PUBLIC_BIND_ADDR", "127.0.0.1:8100"),
        data_dir=Path(_get(env, "DATA_DIR", "data")),
        catalog_path=Path(catalog_raw) if catalog_raw else default_catalog_path(),
        seed_on_start=_get(env, "SEED_ON_START").strip().lower() in _TRUTHY,
        static_dir=Path(static_raw) if static_raw else None,
    )


def split_bind(addr: str) -> tuple[str, int]:
    host, _, port = addr.rpartition(":")
    if not host or not port.isdigit():
        raise ValueError(f"bind address must look like host:port, got {addr!r}")
    return host, int(port)
