from .app import ENDPOINT_MIN_ROLE, MAX_BULK_BYTES, ApiError, create_backend_app
from .reports import render_markdown

__all__ = [
    "ENDPOINT_MIN_ROLE",
    "MAX_BULK_BYTES",
    "ApiError",
    "create_backend_app",
    "render_markdown",
]
