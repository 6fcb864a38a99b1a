"""``disinfo-exchange`` command-line entry point.

``serve`` runs both HTTP surfaces in one process: the internal API (and
web UI, when built) on ``BIND_ADDR`` and the public feed on
``PUBLIC_BIND_ADDR``.  ``seed`` loads the bundled demo corpus — or any
CSV in the import template — into a data directory.
"""

from __future__ import annotations

import argparse
import logging
import sys
import threading
from importlib import resources
from pathlib import Path

from .backend import create_backend_app
from .catalog import load_catalog_file
from .config import load_config, split_bind
from .ingest import import_csv
from .public_api import create_public_app
from .store import open_store
from .stix import now_utc

logger = logging.getLogger(__name__)

SEED_UPLOADER = "system:seed"


def default_seed_path() -> Path:
    return Path(resources.files("disinfo_exchange").joinpath("data/seed_incidents.csv"))


def _seed(store, catalog, csv_path: Path) -> None:
    report = import_csv(store, catalog, csv_path.read_bytes(), SEED_UPLOADER, now_utc())
    print(f"seeded {report.accepted} incident(s), {len(report.rejected)} rejected")
    for row in report.rejected:
        print(f"  row {row.row}: {row.reason}", file=sys.stderr)


def cmd_seed(args: argparse.Namespace) -> int:
    config = load_config()
    data_dir = Path(args.data_dir) if args.data_dir else config.data_dir
    store = open_store(data_dir)
    catalog = load_catalog_file(args.catalog or config.catalog_path)
    _seed(store, catalog, Path(args.csv) if args.csv else default_seed_path())
    return 0


def cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    config = load_config()
    data_dir = Path(args.data_dir) if args.data_dir else config.data_dir
    store = open_store(data_dir)
    catalog = load_catalog_file(args.catalog or config.catalog_path)

    if config.seed_on_start and store.objects.object_count == 0:
        logger.info("store is empty and SEED_ON_START is set; loading seed corpus")
        _seed(store, catalog, default_seed_path())

    backend = create_backend_app(store, catalog, static_dir=config.static_dir)
    feed = create_public_app(store, catalog)

    host, port = split_bind(config.bind_addr)
    public_host, public_port = split_bind(config.public_bind_addr)

    servers = [
        uvicorn.Server(uvicorn.Config(backend, host=host, port=port, log_level="info")),
        uvicorn.Server(
            uvicorn.Config(feed, host=public_host, port=public_port, log_level="info")
        ),
    ]
    threads = [
        threading.Thread(target=server.run, daemon=True) for server in servers[1:]
    ]
    for thread in threads:
        thread.start()
    print(f"internal API on http://{config.bind_addr}  |  feed on http://{config.public_bind_addr}")
    servers[0].run()  # blocks until interrupted
    for server in servers[1:]:
        server.should_exit = True
    for thread in threads:
        thread.join(timeout=5)
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(
        prog="disinfo-exchange",
        description="Threat-intelligence exchange for disinformation incidents.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    serve = sub.add_parser("serve", help="run the internal API and the public feed")
    serve.add_argument("--data-dir", default=None, help="override DATA_DIR")
    serve.add_argument("--catalog", default=None, help="override CATALOG_PATH")
    serve.set_defaults(func=cmd_serve)

    seed = sub.add_parser("seed", help="load incidents from a CSV into the store")
    seed.add_argument("--data-dir", default=None, help="override DATA_DIR")
    seed.add_argument("--catalog", default=None, help="override CATALOG_PATH")
    seed.add_argument("--csv", default=None, help="CSV file (default: bundled corpus)")
    seed.set_defaults(func=cmd_seed)

    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO, stream=sys.stderr)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
