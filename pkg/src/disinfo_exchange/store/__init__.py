"""Platform storage: STIX objects plus accounts, file-backed."""

from __future__ import annotations

from pathlib import Path

from .accounts import (
    ROLES,
    AccountError,
    AccountStore,
    ApiKey,
    AuthenticationError,
    DuplicateUsernameError,
    UnknownKeyError,
    UserAccount,
    role_at_least,
)
from .objects import (
    DashboardStats,
    IncidentNotFoundError,
    IncidentPage,
    IncidentRow,
    IncidentView,
    NotAnIncidentError,
    ObjectStore,
    PagingError,
    RankedCount,
    StoredObject,
    UpsertReport,
    make_excerpt,
)
from .persistence import StoreWriteError

__all__ = [
    "ROLES",
    "AccountError",
    "AccountStore",
    "ApiKey",
    "AuthenticationError",
    "DashboardStats",
    "DuplicateUsernameError",
    "IncidentNotFoundError",
    "IncidentPage",
    "IncidentRow",
    "IncidentView",
    "NotAnIncidentError",
    "ObjectStore",
    "PagingError",
    "RankedCount",
    "Store",
    "StoreWriteError",
    "StoredObject",
    "UnknownKeyError",
    "UpsertReport",
    "UserAccount",
    "make_excerpt",
    "open_store",
    "role_at_least",
]


class Store:
    """Both halves of the store behind one handle.

    ``data_dir=None`` keeps everything in memory (handy in tests); with a
    directory, objects land in ``objects.json`` and accounts in
    ``accounts.json`` inside it.
    """

    def __init__(self, data_dir: str | Path | None):
        base = Path(data_dir) if data_dir is not None else None
        self.data_dir = base
        self.objects = ObjectStore(base / "objects.json" if base else None)
        self.accounts = AccountStore(base / "accounts.json" if base else None)


def open_store(data_dir: str | Path | None) -> Store:
    return Store(data_dir)
