"""Client for the service, in-process by default.

Without a server URL the client mounts the ASGI app directly (starlette's
test client is an httpx.Client subclass), so CLI commands run hermetically in
one process: no socket, no daemon, same filesystem. Pointing it at a URL
switches to real HTTP with the same interface.
"""

from __future__ import annotations

import warnings

import httpx


def make_client(server: str | None = None) -> httpx.Client:
    if server is None:
        with warnings.catch_warnings():
            # starlette warns about its own httpx dependency pinning; not
            # actionable here and it would leak onto every CLI run's stderr
            warnings.simplefilter("ignore")
            from starlette.testclient import TestClient

        from .service.app import app

        return TestClient(app)
    return httpx.Client(base_url=server, timeout=300.0)
