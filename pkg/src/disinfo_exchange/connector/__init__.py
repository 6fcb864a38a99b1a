"""Feed-polling connector: pulls incidents into a downstream sink."""

from .client import (
    DEFAULT_RUN_EVERY,
    ConnectorConfig,
    ConnectorConfigError,
    CredentialError,
    parse_duration,
    run_loop,
    run_once,
)
from .sink import IngestReport, MockSink, SinkContract
from .state import ConnectorState, load_state, save_state

__all__ = [
    "ConnectorConfig",
    "ConnectorConfigError",
    "ConnectorState",
    "CredentialError",
    "DEFAULT_RUN_EVERY",
    "IngestReport",
    "MockSink",
    "SinkContract",
    "load_state",
    "parse_duration",
    "run_loop",
    "run_once",
    "save_state",
]
