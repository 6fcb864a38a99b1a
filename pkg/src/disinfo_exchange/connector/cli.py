"""``connector`` command-line entry point.

Configuration comes from the environment (flags override):

- ``FEED_URL``        base URL of the public feed
- ``FEED_API_KEY``    feed API key (created on the profile page)
- ``RUN_EVERY``       loop interval: ``PT30S``, ``30s``, ``5m`` or bare seconds
  (``CONNECTOR_RUN_EVERY`` works too)
- ``STATE_PATH``      cursor state file (default ``./connector_state.json``)
- ``SINK_PATH``       mock sink storage file (default ``./sink_objects.json``)

Exit codes: 0 success, 2 bad configuration, 3 rejected credentials,
1 anything else fatal.
"""

from __future__ import annotations

import argparse
import logging
import os
import signal
import sys
import threading
from pathlib import Path

from .client import (
    DEFAULT_RUN_EVERY,
    ConnectorConfig,
    ConnectorConfigError,
    CredentialError,
    parse_duration,
    run_loop,
    run_once,
)
from .sink import MockSink
from .state import load_state


def _env(*names: str, default: str = "") -> str:
    for name in names:
        value = os.environ.get(name)
        if value:
            return value
    return default


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="connector",
        description="Pull incidents from a disinfo-exchange feed into a sink.",
    )
    mode = parser.add_mutually_exclusive_group(required=True)
    mode.add_argument("--once", action="store_true", help="run one pull cycle and exit")
    mode.add_argument("--loop", action="store_true", help="pull on an interval until stopped")
    parser.add_argument("--feed-url", default=None, help="override FEED_URL")
    parser.add_argument("--api-key", default=None, help="override FEED_API_KEY")
    parser.add_argument("--run-every", default=None, help="override RUN_EVERY (e.g. PT30S)")
    parser.add_argument("--state-path", default=None, help="override STATE_PATH")
    parser.add_argument("--sink-path", default=None, help="override SINK_PATH")
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging")
    return parser


def config_from(args: argparse.Namespace) -> ConnectorConfig:
    run_every_raw = args.run_every or _env("RUN_EVERY", "CONNECTOR_RUN_EVERY", "run_every")
    run_every = parse_duration(run_every_raw) if run_every_raw else DEFAULT_RUN_EVERY
    return ConnectorConfig(
        feed_url=args.feed_url or _env("FEED_URL", "feed_url"),
        api_key=args.api_key or _env("FEED_API_KEY", "feed_api_key"),
        state_path=Path(
            args.state_path or _env("STATE_PATH", "state_path", default="connector_state.json")
        ),
        run_every=run_every,
    )


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.INFO,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    try:
        config = config_from(args)
    except ConnectorConfigError as exc:
        print(f"connector: {exc}", file=sys.stderr)
        return 2

    sink_path = args.sink_path or _env("SINK_PATH", "sink_path", default="sink_objects.json")
    sink = MockSink(sink_path)

    stop = threading.Event()

    def handle_signal(signum, frame):
        logging.getLogger(__name__).info("signal %s; finishing up", signum)
        stop.set()

    try:
        if args.once:
            before = load_state(config.state_path).total_objects_forwarded
            state = run_once(config, sink)
            if state.last_status != "ok":
                print(f"connector: run failed ({state.last_status})", file=sys.stderr)
                return 1
            print(
                f"forwarded {state.total_objects_forwarded - before} object(s); "
                f"sink now holds {sink.count}"
            )
            return 0
        signal.signal(signal.SIGINT, handle_signal)
        signal.signal(signal.SIGTERM, handle_signal)
        run_loop(config, sink, stop=stop)
        return 0
    except CredentialError as exc:
        print(f"connector: {exc}", file=sys.stderr)
        return 3
    except ConnectorConfigError as exc:
        print(f"connector: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
