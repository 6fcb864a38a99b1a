"""Public machine-to-machine feed.

One job: hand downstream CTI tooling every stored object newer than a
cursor, as a STIX bundle.  Authentication is by feed API key presented in
the ``Authorization`` header (bare token; a ``Bearer `` prefix is
tolerated).  Session tokens mean nothing here, and failures reveal
nothing beyond the stable error code.
"""

from __future__ import annotations

import hashlib
import uuid
from typing import Final

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse, Response

from .catalog import DisarmCatalog
from .store import Store
from .stix import Bundle, TimestampError, parse_timestamp, serialize_bundle

#: Hard ceiling on objects in one feed response.  A corpus past this size
#: needs an out-of-band transfer, not a bigger HTTP body.
MAX_FEED_OBJECTS: Final = 50_000


def _error(status: int, code: str, message: str) -> JSONResponse:
    return JSONResponse(
        status_code=status,
        content={"code": code, "message": message, "details": {}},
    )


def _feed_bundle_id(objects) -> str:
    """Content-derived wrapper id: same cursor + same corpus ⇒ same bytes."""
    digest = hashlib.sha256()
    for obj in objects:
        digest.update(obj.id.encode())
        digest.update(str(obj.properties.get("modified", "")).encode())
    return f"bundle--{uuid.uuid5(uuid.NAMESPACE_OID, digest.hexdigest())}"


def create_public_app(store: Store, catalog: DisarmCatalog) -> FastAPI:
    app = FastAPI(title="disinfo-exchange feed", docs_url=None, redoc_url=None)

    @app.get("/incidents")
    async def incidents(request: Request):
        header = request.headers.get("authorization", "")
        token = header[7:] if header.lower().startswith("bearer ") else header
        token = token.strip()
        user = store.accounts.verify_api_key(token) if token else None
        if user is None:
            return _error(401, "invalid-api-key", "missing, unknown or revoked API key")

        if "newer_than" not in request.query_params:
            return _error(400, "missing-parameter", "newer_than is required")
        cursor_raw = request.query_params["newer_than"]
        try:
            cursor = parse_timestamp(cursor_raw)
        except TimestampError:
            return _error(
                400,
                "bad-timestamp",
                "newer_than must be an RFC 3339 timestamp, e.g. 1970-01-01T00:00:00.000000Z",
            )

        objects = store.objects.objects_newer_than(cursor)
        if len(objects) > MAX_FEED_OBJECTS:
            return _error(
                413,
                "response-too-large",
                f"{len(objects)} objects match; the feed serves at most {MAX_FEED_OBJECTS}",
            )
        bundle = Bundle(_feed_bundle_id(objects), objects)
        return Response(content=serialize_bundle(bundle), media_type="application/json")

    @app.get("/health")
    async def health():
        return {
            "status": "ok",
            "object_count": store.objects.object_count,
            "catalog_version": catalog.version_label,
        }

    return app
