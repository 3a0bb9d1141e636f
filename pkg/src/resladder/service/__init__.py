"""HTTP service wrapper around the ladder library."""

from .app import app, create_app

__all__ = ["app", "create_app"]
