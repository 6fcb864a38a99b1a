"""Internal HTTP API: accounts, incident CRUD, stats, bulk import.

Everything under ``/api`` speaks JSON and authenticates with a session
token (``Authorization: Bearer <token>``).  Feed API keys are not valid
here — the public feed is a separate app with its own authentication.

Error responses all share one shape::

    {"code": "<stable-code>", "message": "<human text>", "details": {...}}
"""

from __future__ import annotations

import logging
from datetime import datetime
from pathlib import Path
from typing import Any, Callable

from fastapi import Depends, FastAPI, Request, Response
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles
from pydantic import BaseModel, Field

from ..catalog import DisarmCatalog
from ..ingest import import_bundle, import_csv, store_submission
from ..store import (
    AccountError,
    AuthenticationError,
    DuplicateUsernameError,
    IncidentNotFoundError,
    NotAnIncidentError,
    PagingError,
    Store,
    UnknownKeyError,
    UserAccount,
    role_at_least,
)
from ..stix import (
    Bundle,
    BundleParseError,
    BundleSchemaError,
    format_timestamp,
    now_utc,
    parse_bundle,
    serialize_bundle,
)
from ..transform import (
    CsvSchemaError,
    EmptyImportError,
    IncidentSubmission,
    SubmissionError,
    technique_code,
)
from .reports import render_markdown

logger = logging.getLogger(__name__)

#: Bulk uploads larger than this are refused outright.
MAX_BULK_BYTES = 10 * 1024 * 1024

#: Minimum role per endpoint; ``None`` means unauthenticated access.
#: Tests walk this table, so keep it in sync with the routes below.
ENDPOINT_MIN_ROLE: dict[tuple[str, str], str | None] = {
    ("POST", "/api/users"): None,
    ("POST", "/api/session"): None,
    ("GET", "/api/session"): "viewer",
    ("DELETE", "/api/session"): "viewer",
    ("GET", "/api/profile/apikeys"): "viewer",
    ("POST", "/api/profile/apikeys"): "viewer",
    ("DELETE", "/api/profile/apikeys/{key_id}"): "viewer",
    ("GET", "/api/profile/favorites"): "viewer",
    ("PUT", "/api/profile/favorites"): "viewer",
    ("POST", "/api/incidents"): "reporter",
    ("POST", "/api/incidents/bulk"): "reporter",
    ("GET", "/api/incidents"): "viewer",
    ("GET", "/api/incidents/{incident_id}"): "viewer",
    ("GET", "/api/incidents/{incident_id}/bundle"): "viewer",
    ("GET", "/api/incidents/{incident_id}/graph"): "viewer",
    ("GET", "/api/incidents/{incident_id}/report"): "viewer",
    ("GET", "/api/stats/dashboard"): "viewer",
    ("GET", "/api/catalog/techniques"): "viewer",
}


class ApiError(Exception):
    """Raise anywhere inside a handler to produce the standard error body."""

    def __init__(self, status: int, code: str, message: str, details: Any = None):
        super().__init__(message)
        self.status = status
        self.code = code
        self.message = message
        self.details = details if details is not None else {}


# -- request bodies ------------------------------------------------------


class RegisterBody(BaseModel):
    username: str
    password: str


class LoginBody(BaseModel):
    username: str
    password: str


class ApiKeyBody(BaseModel):
    label: str = ""


class FavoriteBody(BaseModel):
    incident_id: str
    favorite: bool = True


class IncidentBody(BaseModel):
    name: str
    description: str = ""
    date: str
    threat_actors: list[str] = Field(default_factory=list)
    target_countries: list[str] = Field(default_factory=list)
    techniques: list[str] = Field(default_factory=list)


# -- payload helpers -----------------------------------------------------


def _incident_row_payload(row) -> dict:
    return {
        "id": row.id,
        "name": row.name,
        "excerpt": row.excerpt,
        "first_seen": row.first_seen,
    }


def _view_payload(view) -> dict:
    incident = view.intrusion_set
    first_seen = incident.properties.get("first_seen", "")
    return {
        "incident": {
            "id": incident.id,
            "name": incident.name,
            "description": incident.description,
            "first_seen": first_seen[:10] if isinstance(first_seen, str) else None,
            "created": incident.properties.get("created"),
            "modified": incident.properties.get("modified"),
        },
        "actors": [{"id": o.id, "name": o.name} for o in view.actors],
        "locations": [
            {"id": o.id, "name": o.name, "country": o.properties.get("country")}
            for o in view.locations
        ],
        "techniques": [
            {
                "id": o.id,
                "name": o.name,
                "external_id": technique_code(o),
                "phases": [
                    p.get("phase_name")
                    for p in o.properties.get("kill_chain_phases", [])
                    if isinstance(p, dict)
                ],
            }
            for o in view.techniques
        ],
        "relationship_count": len(view.relationships),
    }


def _graph_payload(view) -> dict:
    nodes = [
        {"id": obj.id, "type": obj.type, "label": obj.name or obj.id}
        for obj in (view.intrusion_set, *view.actors, *view.locations, *view.techniques)
    ]
    edges = [
        {
            "id": rel.id,
            "source": rel.source_ref,
            "target": rel.target_ref,
            "type": rel.relationship_type,
        }
        for rel in view.relationships
    ]
    return {"nodes": nodes, "edges": edges}


def create_backend_app(
    store: Store,
    catalog: DisarmCatalog,
    *,
    static_dir: str | Path | None = None,
    clock: Callable[[], datetime] = now_utc,
) -> FastAPI:
    app = FastAPI(title="disinfo-exchange", docs_url=None, redoc_url=None)

    # -- error shaping ---------------------------------------------------

    @app.exception_handler(ApiError)
    async def on_api_error(request: Request, exc: ApiError):
        return JSONResponse(
            status_code=exc.status,
            content={"code": exc.code, "message": exc.message, "details": exc.details},
        )

    @app.exception_handler(RequestValidationError)
    async def on_validation_error(request: Request, exc: RequestValidationError):
        details = [
            {"field": ".".join(str(part) for part in err.get("loc", [])), "problem": err.get("msg", "")}
            for err in exc.errors()
        ]
        return JSONResponse(
            status_code=422,
            content={
                "code": "invalid-body",
                "message": "request body failed validation",
                "details": details,
            },
        )

    @app.exception_handler(Exception)
    async def on_unexpected(request: Request, exc: Exception):
        logger.exception("unhandled error on %s %s", request.method, request.url.path)
        return JSONResponse(
            status_code=500,
            content={"code": "internal", "message": "internal error", "details": {}},
        )

    # -- auth ------------------------------------------------------------

    def bearer_token(request: Request) -> str | None:
        header = request.headers.get("authorization", "")
        if not header:
            return None
        if header.lower().startswith("bearer "):
            return header[7:].strip() or None
        return header.strip() or None

    def require_role(minimum: str):
        def dependency(request: Request) -> UserAccount:
            token = bearer_token(request)
            user = store.accounts.session_user(token) if token else None
            if user is None:
                raise ApiError(401, "invalid-session", "missing or invalid session token")
            if not role_at_least(user.role, minimum):
                raise ApiError(
                    403,
                    "forbidden",
                    f"this endpoint requires the {minimum} role",
                    {"role": user.role},
                )
            return user

        return dependency

    viewer = Depends(require_role("viewer"))
    reporter = Depends(require_role("reporter"))

    # -- accounts --------------------------------------------------------

    @app.post("/api/users", status_code=201)
    async def register(body: RegisterBody):
        try:
            user = store.accounts.create_user(body.username, body.password, clock())
        except DuplicateUsernameError as exc:
            raise ApiError(409, "username-taken", str(exc)) from None
        except AccountError as exc:
            raise ApiError(422, "invalid-account", str(exc)) from None
        return {"user_id": user.user_id, "username": user.username, "role": user.role}

    @app.post("/api/session")
    async def login(body: LoginBody):
        try:
            token, user = store.accounts.authenticate(body.username, body.password)
        except AuthenticationError as exc:
            raise ApiError(401, "bad-credentials", str(exc)) from None
        return {"token": token, "username": user.username, "role": user.role}

    @app.get("/api/session")
    async def whoami(user: UserAccount = viewer):
        return {"username": user.username, "role": user.role, "user_id": user.user_id}

    @app.delete("/api/session", status_code=204)
    async def logout(request: Request, user: UserAccount = viewer):
        store.accounts.end_session(bearer_token(request) or "")
        return Response(status_code=204)

    # -- profile ---------------------------------------------------------

    @app.get("/api/profile/apikeys")
    async def list_keys(user: UserAccount = viewer):
        return {
            "keys": [
                {
                    "key_id": k.key_id,
                    "label": k.label,
                    "created_at": format_timestamp(k.created_at),
                    "revoked": k.revoked,
                }
                for k in store.accounts.list_api_keys(user.user_id)
            ]
        }

    @app.post("/api/profile/apikeys", status_code=201)
    async def create_key(body: ApiKeyBody, user: UserAccount = viewer):
        key, raw = store.accounts.create_api_key(user.user_id, body.label, clock())
        # The raw token appears in this response and nowhere else, ever.
        return {
            "key_id": key.key_id,
            "label": key.label,
            "created_at": format_timestamp(key.created_at),
            "token": raw,
        }

    @app.delete("/api/profile/apikeys/{key_id}", status_code=204)
    async def revoke_key(key_id: str, user: UserAccount = viewer):
        try:
            store.accounts.revoke_api_key(user.user_id, key_id)
        except UnknownKeyError as exc:
            raise ApiError(404, "not-found", str(exc)) from None
        return Response(status_code=204)

    @app.get("/api/profile/favorites")
    async def favorites(user: UserAccount = viewer):
        current = store.accounts.get_user(user.user_id)
        return {"favorites": list(current.favorites if current else ())}

    @app.put("/api/profile/favorites")
    async def set_favorite(body: FavoriteBody, user: UserAccount = viewer):
        updated = store.accounts.set_favorite(user.user_id, body.incident_id, body.favorite)
        return {"favorites": list(updated)}

    # -- incidents -------------------------------------------------------

    @app.post("/api/incidents", status_code=201)
    async def create_incident(body: IncidentBody, user: UserAccount = reporter):
        try:
            submission = IncidentSubmission.build(
                name=body.name,
                description=body.description,
                date=body.date,
                threat_actors=body.threat_actors,
                target_countries=body.target_countries,
                technique_refs=body.techniques,
            )
            graph = store_submission(store, catalog, submission, user.user_id, clock())
        except SubmissionError as exc:
            raise ApiError(422, "invalid-submission", str(exc)) from None
        return {
            "incident_id": graph.intrusion_set.id,
            "object_count": len(graph),
        }

    @app.post("/api/incidents/bulk")
    async def bulk_import(request: Request, user: UserAccount = reporter):
        body = await request.body()
        if len(body) > MAX_BULK_BYTES:
            raise ApiError(
                413,
                "too-large",
                f"bulk uploads are capped at {MAX_BULK_BYTES} bytes",
                {"size": len(body)},
            )
        content_type = request.headers.get("content-type", "").split(";")[0].strip().lower()
        at = clock()
        if content_type == "text/csv":
            try:
                report = import_csv(store, catalog, body, user.user_id, at)
            except CsvSchemaError as exc:
                raise ApiError(
                    400,
                    "bad-csv-header",
                    str(exc),
                    {"missing": list(exc.missing), "unexpected": list(exc.unexpected)},
                ) from None
        elif content_type == "application/json":
            try:
                bundle = parse_bundle(body)
            except BundleParseError as exc:
                raise ApiError(400, "bundle-parse", str(exc), {"offset": exc.offset}) from None
            except BundleSchemaError as exc:
                raise ApiError(422, "bundle-schema", str(exc)) from None
            try:
                report = import_bundle(store, catalog, bundle, user.user_id, at)
            except BundleSchemaError as exc:
                raise ApiError(422, "bundle-schema", str(exc)) from None
            except EmptyImportError as exc:
                raise ApiError(422, "empty-import", str(exc)) from None
        else:
            raise ApiError(
                400,
                "unsupported-content-type",
                "send text/csv (import template) or application/json (STIX bundle)",
                {"content_type": content_type},
            )
        return report.to_payload()

    @app.get("/api/incidents")
    async def list_incidents(
        page: int = 1,
        page_size: int = 50,
        q: str | None = None,
        user: UserAccount = viewer,
    ):
        try:
            result = store.objects.list_incidents(page=page, page_size=page_size, name_filter=q)
        except PagingError as exc:
            raise ApiError(400, "bad-paging", str(exc)) from None
        return {
            "rows": [_incident_row_payload(row) for row in result.rows],
            "total": result.total,
            "page": result.page,
            "page_size": result.page_size,
        }

    def _view_or_404(incident_id: str):
        try:
            return store.objects.get_incident_view(incident_id)
        except IncidentNotFoundError:
            raise ApiError(404, "not-found", f"no incident {incident_id}") from None
        except NotAnIncidentError as exc:
            raise ApiError(404, "not-an-incident", str(exc)) from None

    @app.get("/api/incidents/{incident_id}")
    async def incident_detail(incident_id: str, user: UserAccount = viewer):
        return _view_payload(_view_or_404(incident_id))

    @app.get("/api/incidents/{incident_id}/bundle")
    async def incident_bundle(incident_id: str, user: UserAccount = viewer):
        view = _view_or_404(incident_id)
        bundle = Bundle.new(view.all_objects)
        return Response(content=serialize_bundle(bundle), media_type="application/json")

    @app.get("/api/incidents/{incident_id}/graph")
    async def incident_graph(incident_id: str, user: UserAccount = viewer):
        return _graph_payload(_view_or_404(incident_id))

    @app.get("/api/incidents/{incident_id}/report")
    async def incident_report(
        incident_id: str, format: str = "markup", user: UserAccount = viewer
    ):
        if format != "markup":
            raise ApiError(
                400,
                "unsupported-format",
                f"report format {format!r} is not available; use format=markup",
                {"format": format},
            )
        view = _view_or_404(incident_id)
        return Response(
            content=render_markdown(view),
            media_type="text/markdown; charset=utf-8",
        )

    # -- stats and catalog ----------------------------------------------

    @app.get("/api/stats/dashboard")
    async def dashboard(user: UserAccount = viewer):
        stats = store.objects.dashboard_stats()
        return {
            "incident_count": stats.incident_count,
            "object_count": stats.object_count,
            "actor_count": stats.actor_count,
            "country_count": stats.country_count,
            "recent_incidents": [_incident_row_payload(r) for r in stats.recent_incidents],
            "top_actors": [
                {"name": row.name, "incident_count": row.incident_count}
                for row in stats.top_actors
            ],
            "top_countries": [
                {"country": row.name, "code": row.code, "incident_count": row.incident_count}
                for row in stats.top_countries
            ],
        }

    @app.get("/api/catalog/techniques")
    async def catalog_techniques(user: UserAccount = viewer):
        return {
            "version": catalog.version_label,
            "tactics": [
                {
                    "phase": phase,
                    "techniques": [
                        {
                            "external_id": t.external_id,
                            "name": t.name,
                            "description": t.description,
                        }
                        for t in techniques
                    ],
                }
                for phase, techniques in catalog.list_by_tactic().items()
            ],
        }

    # -- static UI -------------------------------------------------------

    if static_dir is not None and Path(static_dir).is_dir():
        app.mount("/", StaticFiles(directory=str(static_dir), html=True), name="ui")

    return app
