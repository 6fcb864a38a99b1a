"""RFC 3339 timestamps, always UTC, microsecond precision.

Emitted strings carry exactly six fractional digits and a trailing ``Z``.
Parsing is more forgiving: zero to six fractional digits and an explicit
numeric offset are both accepted, everything is normalized to UTC.
"""

from __future__ import annotations

import re
from datetime import datetime, timedelta, timezone
from typing import Final

from .errors import TimestampError

__all__ = [
    "EPOCH",
    "MIN_TICK",
    "format_timestamp",
    "parse_timestamp",
    "parse_date",
    "now_utc",
]

EPOCH: Final = datetime(1970, 1, 1, tzinfo=timezone.utc)

#: Smallest representable increment; used when a re-upload needs its
#: ``modified`` nudged past the stored copy.
MIN_TICK: Final = timedelta(microseconds=1)

_TS = re.compile(
    r"^(\d{4})-(\d{2})-(\d{2})[Tt]"
    r"(\d{2}):(\d{2}):(\d{2})"
    r"(?:\.(\d{1,6}))?"
    r"(?:[Zz]|([+-]\d{2}):(\d{2}))$"
)

_DATE = re.compile(r"^(\d{4})-(\d{2})-(\d{2})$")


def format_timestamp(moment: datetime) -> str:
    """Render a timezone-aware datetime as ``YYYY-MM-DDTHH:MM:SS.ffffffZ``."""
    if moment.tzinfo is None:
        raise TimestampError("refusing to format a naive datetime")
    return moment.astimezone(timezone.utc).strftime("%Y-%m-%dT%H:%M:%S.%fZ")


def parse_timestamp(value: str) -> datetime:
    """Parse an RFC 3339 timestamp into an aware UTC datetime.

    Fractional seconds are optional and zero-padded to microseconds, so
    ``...T10:00:00.5Z`` means 500000 microseconds.
    """
    if not isinstance(value, str):
        raise TimestampError(f"timestamp must be a string, got {type(value).__name__}")
    match = _TS.match(value.strip())
    if match is None:
        raise TimestampError(f"not an RFC 3339 timestamp: {value!r}")
    year, month, day, hour, minute, second = (int(g) for g in match.groups()[:6])
    fraction = match.group(7) or ""
    micros = int(fraction.ljust(6, "0")) if fraction else 0
    if match.group(8) is not None:
        sign = -1 if match.group(8).startswith("-") else 1
        shift = timedelta(hours=abs(int(match.group(8))), minutes=int(match.group(9)))
        offset = timezone(sign * shift)
    else:
        offset = timezone.utc
    try:
        moment = datetime(year, month, day, hour, minute, second, micros, tzinfo=offset)
    except ValueError as exc:  # e.g. month 13, day 32
        raise TimestampError(f"invalid calendar values in {value!r}: {exc}") from None
    return moment.astimezone(timezone.utc)


def parse_date(value: str) -> datetime:
    """Parse strict ``YYYY-MM-DD`` into midnight UTC of that day."""
    match = _DATE.match(value.strip())
    if match is None:
        raise TimestampError(f"not a YYYY-MM-DD date: {value!r}")
    try:
        return datetime(
            int(match.group(1)), int(match.group(2)), int(match.group(3)),
            tzinfo=timezone.utc,
        )
    except ValueError as exc:
        raise TimestampError(f"invalid calendar values in {value!r}: {exc}") from None


def now_utc() -> datetime:
    return datetime.now(timezone.utc)
