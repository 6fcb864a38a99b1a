"""Accounts, sessions and API keys.

Passwords are digested with scrypt (memory-hard, stdlib).  API keys are
256-bit random tokens; only the SHA-256 digest is stored, so the raw
token can be shown exactly once at creation.  Sessions live in memory —
restarting the service logs everyone out, which is fine for a tool like
this.
"""

from __future__ import annotations

import hashlib
import hmac
import secrets
import threading
from dataclasses import dataclass, replace
from datetime import datetime
from pathlib import Path

from ..stix import format_timestamp, parse_timestamp
from .persistence import StoreWriteError, atomic_write_json, load_json

ROLES = ("viewer", "reporter", "admin")

_SCRYPT_N = 2**14
_SCRYPT_R = 8
_SCRYPT_P = 1

MIN_PASSWORD_LENGTH = 8
MAX_USERNAME_LENGTH = 64


class AccountError(ValueError):
    pass


class DuplicateUsernameError(AccountError):
    pass


class AuthenticationError(AccountError):
    """Bad username/password — deliberately not saying which."""


class UnknownKeyError(AccountError):
    pass


def role_at_least(role: str, minimum: str) -> bool:
    return ROLES.index(role) >= ROLES.index(minimum)


def _hash_password(password: str) -> str:
    salt = secrets.token_bytes(16)
    digest = hashlib.scrypt(
        password.encode("utf-8"), salt=salt, n=_SCRYPT_N, r=_SCRYPT_R, p=_SCRYPT_P
    )
    return f"scrypt${_SCRYPT_N}${_SCRYPT_R}${_SCRYPT_P}${salt.hex()}${digest.hex()}"


def _check_password(password: str, encoded: str) -> bool:
    try:
        scheme, n, r, p, salt_hex, digest_hex = encoded.split("$")
        if scheme != "scrypt":
            return False
        digest = hashlib.scrypt(
            password.encode("utf-8"),
            salt=bytes.fromhex(salt_hex),
            n=int(n),
            r=int(r),
            p=int(p),
        )
    except (ValueError, TypeError):
        return False
    return hmac.compare_digest(digest.hex(), digest_hex)


@dataclass(frozen=True)
class UserAccount:
    user_id: str
    username: str
    role: str
    created_at: datetime
    favorites: tuple[str, ...] = ()
    password_digest: str = ""


@dataclass(frozen=True)
class ApiKey:
    key_id: str
    user_id: str
    label: str
    created_at: datetime
    revoked: bool = False
    secret_digest: str = ""


class AccountStore:
    """The account half of the platform store."""

    def __init__(self, snapshot_path: Path | None):
        self._path = snapshot_path
        self._lock = threading.RLock()
        self._users: dict[str, UserAccount] = {}  # by user_id
        self._keys: dict[str, ApiKey] = {}  # by key_id
        self._sessions: dict[str, str] = {}  # token -> user_id
        if snapshot_path is not None:
            self._load()

    # -- persistence -----------------------------------------------------

    def _load(self) -> None:
        payload = load_json(self._path)
        if payload is None:
            return
        for entry in payload.get("users", []):
            user = UserAccount(
                user_id=entry["user_id"],
                username=entry["username"],
                role=entry["role"],
                created_at=parse_timestamp(entry["created_at"]),
                favorites=tuple(entry.get("favorites", [])),
                password_digest=entry["password"],
            )
            self._users[user.user_id] = user
        for entry in payload.get("api_keys", []):
            key = ApiKey(
                key_id=entry["key_id"],
                user_id=entry["user_id"],
                label=entry.get("label", ""),
                created_at=parse_timestamp(entry["created_at"]),
                revoked=bool(entry.get("revoked", False)),
                secret_digest=entry["digest"],
            )
            self._keys[key.key_id] = key

    def _persist(self, users: dict[str, UserAccount], keys: dict[str, ApiKey]) -> None:
        if self._path is None:
            return
        payload = {
            "format": 1,
            "users": [
                {
                    "user_id": u.user_id,
                    "username": u.username,
                    "role": u.role,
                    "created_at": format_timestamp(u.created_at),
                    "favorites": list(u.favorites),
                    "password": u.password_digest,
                }
                for u in users.values()
            ],
            "api_keys": [
                {
                    "key_id": k.key_id,
                    "user_id": k.user_id,
                    "label": k.label,
                    "created_at": format_timestamp(k.created_at),
                    "revoked": k.revoked,
                    "digest": k.secret_digest,
                }
                for k in keys.values()
            ],
        }
        try:
            atomic_write_json(self._path, payload)
        except OSError as exc:
            raise StoreWriteError(f"cannot persist account snapshot: {exc}") from exc

    def _commit(self, users=None, keys=None) -> None:
        candidate_users = users if users is not None else self._users
        candidate_keys = keys if keys is not None else self._keys
        self._persist(candidate_users, candidate_keys)
        self._users = candidate_users
        self._keys = candidate_keys

    # -- users and sessions ----------------------------------------------

    def create_user(
        self, username: str, password: str, at: datetime, role: str | None = None
    ) -> UserAccount:
        """Register a user.  The very first account becomes the admin."""
        name = " ".join(username.split())
        if not name or len(name) > MAX_USERNAME_LENGTH:
            raise AccountError("username must be 1..64 characters")
        if len(password) < MIN_PASSWORD_LENGTH:
            raise AccountError(
                f"password must be at least {MIN_PASSWORD_LENGTH} characters"
            )
        if role is not None and role not in ROLES:
            raise AccountError(f"unknown role {role!r}")
        with self._lock:
            if any(u.username.casefold() == name.casefold() for u in self._users.values()):
                raise DuplicateUsernameError(f"username {name!r} is taken")
            effective_role = role or ("admin" if not self._users else "reporter")
            user = UserAccount(
                user_id=f"user-{secrets.token_hex(8)}",
                username=name,
                role=effective_role,
                created_at=at,
                password_digest=_hash_password(password),
            )
            users = dict(self._users)
            users[user.user_id] = user
            self._commit(users=users)
            return user

    def authenticate(self, username: str, password: str) -> tuple[str, UserAccount]:
        """Check credentials and open a session; returns (token, user)."""
        name = " ".join(username.split()).casefold()
        with self._lock:
            match = next(
                (u for u in self._users.values() if u.username.casefold() == name),
                None,
            )
        if match is None or not _check_password(password, match.password_digest):
            raise AuthenticationError("bad username or password")
        token = secrets.token_urlsafe(32)
        with self._lock:
            self._sessions[token] = match.user_id
        return token, match

    def session_user(self, token: str) -> UserAccount | None:
        with self._lock:
            user_id = self._sessions.get(token)
            return self._users.get(user_id) if user_id else None

    def end_session(self, token: str) -> bool:
        with self._lock:
            return self._sessions.pop(token, None) is not None

    def get_user(self, user_id: str) -> UserAccount | None:
        with self._lock:
            return self._users.get(user_id)

    @property
    def user_count(self) -> int:
        with self._lock:
            return len(self._users)

    # -- API keys --------------------------------------------------------

    def create_api_key(self, user_id: str, label: str, at: datetime) -> tuple[ApiKey, str]:
        """Mint a key for *user_id*; the raw token is returned only here."""
        raw = secrets.token_urlsafe(32)
        key = ApiKey(
            key_id=f"key-{secrets.token_hex(8)}",
            user_id=user_id,
            label=" ".join(label.split()) or "api key",
            created_at=at,
            secret_digest=hashlib.sha256(raw.encode("utf-8")).hexdigest(),
        )
        with self._lock:
            if user_id not in self._users:
                raise AccountError(f"no such user {user_id!r}")
            keys = dict(self._keys)
            keys[key.key_id] = key
            self._commit(keys=keys)
        return key, raw

    def list_api_keys(self, user_id: str) -> list[ApiKey]:
        with self._lock:
            keys = [k for k in self._keys.values() if k.user_id == user_id]
        keys.sort(key=lambda k: (k.created_at, k.key_id))
        return keys

    def revoke_api_key(self, user_id: str, key_id: str) -> None:
        """Revocation is permanent and takes effect immediately."""
        with self._lock:
            key = self._keys.get(key_id)
            if key is None or key.user_id != user_id:
                raise UnknownKeyError(f"no key {key_id!r} for this user")
            keys = dict(self._keys)
            keys[key_id] = replace(key, revoked=True)
            self._commit(keys=keys)

    def verify_api_key(self, raw_token: str) -> UserAccount | None:
        """Resolve a presented feed token; None for anything not valid.

        Comparison is digest-against-digest via ``hmac.compare_digest``,
        so verification cost does not leak which byte differed.
        """
        if not raw_token or not isinstance(raw_token, str):
            return None
        presented = hashlib.sha256(raw_token.encode("utf-8")).hexdigest()
        with self._lock:
            keys = list(self._keys.values())
            users = dict(self._users)
        matched: ApiKey | None = None
        for key in keys:
            # Check every key (no early exit) to keep timing flat.
            if hmac.compare_digest(presented, key.secret_digest) and not key.revoked:
                matched = key
        if matched is None:
            return None
        return users.get(matched.user_id)

    # -- favorites -------------------------------------------------------

    def set_favorite(self, user_id: str, incident_id: str, wanted: bool) -> tuple[str, ...]:
        """Add or remove one favorite; returns the new set, sorted."""
        with self._lock:
            user = self._users.get(user_id)
            if user is None:
                raise AccountError(f"no such user {user_id!r}")
            favorites = set(user.favorites)
            if wanted:
                favorites.add(incident_id)
            else:
                favorites.discard(incident_id)
            updated = replace(user, favorites=tuple(sorted(favorites)))
            users = dict(self._users)
            users[user_id] = updated
            self._commit(users=users)
            return updated.favorites

    def toggle_favorite(self, user_id: str, incident_id: str) -> tuple[str, ...]:
        with self._lock:
            user = self._users.get(user_id)
            if user is None:
                raise AccountError(f"no such user {user_id!r}")
            wanted = incident_id not in user.favorites
            return self.set_favorite(user_id, incident_id, wanted)
