"""Read-only HTTP surface over a session registry.

Requests are served from an immutable in-memory snapshot; when auto reload is
on, the snapshot is rebuilt whenever the registry directory's content
fingerprint changes. No endpoint mutates the registry.
"""

from __future__ import annotations

import datetime as dt
import json
import threading
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple, Union

from fastapi import FastAPI, HTTPException, Request
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles

from . import aggregate, store
from .types import Session

DEFAULT_PORT_ENV_VAR = "HEADWATCH_PORT"


@dataclass(frozen=True)
class RegistrySnapshot:
    fingerprint: tuple
    entries: Tuple[store.RegistryEntry, ...]
    sessions: Dict[Tuple[str, str, str], Session]

    def sessions_of_kind(self, kind: str) -> List[Session]:
        return [self.sessions[(e.user, e.date.isoformat(), e.kind)]
                for e in self.entries if e.kind == kind]


def _fingerprint(registry_dir: Path) -> tuple:
    stats = []
    for path in registry_dir.iterdir():
        if path.suffix == ".json":
            stat = path.stat()
            stats.append((path.name, stat.st_size, stat.st_mtime_ns))
    return tuple(sorted(stats))


def _load_snapshot(registry_dir: Path) -> RegistrySnapshot:
    fingerprint = _fingerprint(registry_dir)
    entries = tuple(store.list_sessions(registry_dir))
    sessions = {
        (entry.user, entry.date.isoformat(), entry.kind): store.load_session(
            registry_dir, entry.user, entry.date, entry.kind
        )
        for entry in entries
    }
    return RegistrySnapshot(fingerprint=fingerprint, entries=entries, sessions=sessions)


class _SnapshotHolder:
    """Swaps in a fresh snapshot when the registry's files change on disk."""

    def __init__(self, registry_dir: Path, auto_reload: bool):
        self._registry_dir = registry_dir
        self._auto_reload = auto_reload
        self._lock = threading.Lock()
        self._snapshot = _load_snapshot(registry_dir)

    def get(self) -> RegistrySnapshot:
        if not self._auto_reload:
            return self._snapshot
        with self._lock:
            current = _fingerprint(self._registry_dir)
            if current != self._snapshot.fingerprint:
                self._snapshot = _load_snapshot(self._registry_dir)
            return self._snapshot


def _bad_request(message: str) -> HTTPException:
    return HTTPException(status_code=400, detail=message)


def _parse_width(width: Optional[str]) -> float:
    if width is None:
        return aggregate.DEFAULT_BUCKET_WIDTH_S
    try:
        value = float(width)
    except ValueError:
        raise _bad_request(f"width {width!r} is not a number") from None
    if not value > 0:
        raise _bad_request(f"width {value} must be positive")
    return value


def create_app(
    registry_dir: Union[str, Path],
    assets_dir: Optional[Union[str, Path]] = None,
    cors_origins: Sequence[str] = ("*",),
    auto_reload: bool = True,
) -> FastAPI:
    """Build the service around one registry directory."""
    registry = Path(registry_dir)
    if not registry.is_dir():
        raise store.RegistryError(f"registry directory {registry} does not exist")
    holder = _SnapshotHolder(registry, auto_reload)

    app = FastAPI(title="headwatch", version="0.1.0")
    app.add_middleware(
        CORSMiddleware,
        allow_origins=list(cors_origins),
        allow_methods=["GET"],
        allow_headers=["*"],
    )

    @app.exception_handler(HTTPException)
    async def _http_error(request: Request, exc: HTTPException):
        return JSONResponse(status_code=exc.status_code, content={"error": str(exc.detail)})

    @app.exception_handler(RequestValidationError)
    async def _query_error(request: Request, exc: RequestValidationError):
        return JSONResponse(status_code=400, content={"error": str(exc)})

    @app.exception_handler(Exception)
    async def _server_error(request: Request, exc: Exception):
        return JSONResponse(status_code=500, content={"error": str(exc)})

    @app.get("/api/sessions")
    def list_sessions():
        return [
            {
                "user": entry.user,
                "date": entry.date.isoformat(),
                "kind": entry.kind,
                "events": entry.event_count,
            }
            for entry in holder.get().entries
        ]

    @app.get("/api/sessions/{user}/{date}/{kind}")
    def get_session(user: str, date: str, kind: str):
        if kind not in store.KINDS:
            raise _bad_request(f"kind {kind!r} must be one of {list(store.KINDS)}")
        try:
            parsed_date = dt.date.fromisoformat(date)
        except ValueError:
            raise _bad_request(f"date {date!r} is not yyyy-mm-dd") from None
        snapshot = holder.get()
        session = snapshot.sessions.get((user, parsed_date.isoformat(), kind))
        if session is None:
            raise HTTPException(status_code=404, detail=f"no {kind} session for {user} on {date}")
        return json.loads(store.serialize_sessions([session], kind))

    @app.get("/api/aggregates/direction")
    def direction_aggregates(width: Optional[str] = None):
        buckets = aggregate.direction_series(
            holder.get().sessions_of_kind("movement"), _parse_width(width)
        )
        return [bucket.to_json() for bucket in buckets]

    @app.get("/api/aggregates/emotion")
    def emotion_aggregates(width: Optional[str] = None, filter: Optional[str] = None):
        only = filter.split(",") if filter else None
        try:
            buckets = aggregate.emotion_series(
                holder.get().sessions_of_kind("emotion"), _parse_width(width), only=only
            )
        except ValueError as exc:
            raise _bad_request(str(exc)) from None
        return [bucket.to_json() for bucket in buckets]

    @app.get("/api/scatter")
    def scatter():
        series = aggregate.scatter_series(holder.get().sessions_of_kind("movement"))
        return [
            {
                "user": user,
                "points": [
                    {
                        "t": point.t,
                        "direction": point.direction.value,
                        "intensity": point.intensity,
                        "colorRank": point.color_rank,
                    }
                    for point in points
                ],
            }
            for user, points in series.items()
        ]

    if assets_dir is not None:
        app.mount("/", StaticFiles(directory=str(assets_dir), html=True), name="assets")

    return app
