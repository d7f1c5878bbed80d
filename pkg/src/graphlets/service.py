"""JSON-over-HTTP service backing the interactive explorer.

In-memory sessions with TTL eviction; selection mutations within a session
are serialized behind a lock (single writer), different sessions are fully
isolated. All vertex ids on the wire are the original input ids; counts
above 2^53 are decimal strings.
"""

from __future__ import annotations

import threading
import time
import uuid
from dataclasses import dataclass, field

import numpy as np
from fastapi import FastAPI, Query, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles

from .analytics import GFD_SCOPES, RANK_PATTERNS, edge_weights, gfd
from .census import graphlet_census, micro_table
from .errors import ConsistencyError, EdgeListParseError
from .frequencies import GraphletFrequencies
from .graph import Graph
from .parallel import ParallelConfig
from .selection import SelectionOp, SelectionState
from .serialize import counts_to_json

DEFAULT_MAX_EDGES = 5_000_000
DEFAULT_TTL_SECONDS = 3600.0
EDGE_ECHO_LIMIT = 200_000  # uploads up to this size echo their edge list back


class ApiError(Exception):
    def __init__(self, status: int, code: str, message: str, detail=None):
        super().__init__(message)
        self.status = status
        self.code = code
        self.message = message
        self.detail = detail


@dataclass
class Session:
    graph: Graph
    census: GraphletFrequencies
    created: float
    last_access: float
    lock: threading.Lock = field(default_factory=threading.Lock)
    selection: SelectionState | None = None
    micro: np.ndarray | None = None
    seq: int = 0
    orig_to_dense: dict[int, int] = field(default_factory=dict)

    def dense_vertex(self, orig: int) -> int:
        try:
            return self.orig_to_dense[int(orig)]
        except (KeyError, TypeError, ValueError):
            raise ApiError(422, "invalid_op", f"unknown vertex id {orig!r}")


class SessionStore:
    def __init__(self, ttl: float = DEFAULT_TTL_SECONDS,
                 max_edges: int = DEFAULT_MAX_EDGES,
                 config: ParallelConfig | None = None):
        self.ttl = ttl
        self.max_edges = max_edges
        self.config = config or ParallelConfig(workers=1)
        self._sessions: dict[str, Session] = {}
        self._lock = threading.Lock()

    def _evict_expired(self, now: float) -> None:
        dead = [sid for sid, s in self._sessions.items()
                if now - s.last_access > self.ttl]
        for sid in dead:
            del self._sessions[sid]

    def create_from_text(self, text: str) -> str:
        if not text.strip():
            raise ApiError(400, "parse_error", "empty body")
        try:
            graph = Graph.from_text(text)
        except EdgeListParseError as exc:
            raise ApiError(400, "parse_error", str(exc), detail={"line": exc.line})
        if graph.m > self.max_edges:
            raise ApiError(413, "too_large",
                           f"graph has {graph.m} edges; cap is {self.max_edges}")
        census = graphlet_census(graph, self.config)
        now = time.monotonic()
        session = Session(graph=graph, census=census, created=now, last_access=now)
        session.orig_to_dense = {int(o): i for i, o in enumerate(graph.orig_ids)}
        session.selection = SelectionState(graph)
        sid = uuid.uuid4().hex[:12]
        with self._lock:
            self._evict_expired(now)
            self._sessions[sid] = session
        return sid

    def get(self, sid: str) -> Session:
        now = time.monotonic()
        with self._lock:
            self._evict_expired(now)
            session = self._sessions.get(sid)
            if session is None:
                raise ApiError(404, "unknown_session", f"no session {sid!r}")
            session.last_access = now
            return session


def _counts_payload(freqs: GraphletFrequencies) -> dict:
    return {"n": freqs.n, "m": freqs.m, "counts": counts_to_json(freqs.counts)}


def _parse_ops(session: Session, raw_ops) -> list[SelectionOp]:
    if not isinstance(raw_ops, list):
        raise ApiError(422, "invalid_op", "ops must be a list")
    ops = []
    for item in raw_ops:
        if not isinstance(item, dict) or "action" not in item:
            raise ApiError(422, "invalid_op", f"malformed op {item!r}")
        action = item["action"]
        if action in SelectionOp.VERTEX_ACTIONS:
            if "vertex" not in item:
                raise ApiError(422, "invalid_op", f"{action} requires 'vertex'")
            ops.append(SelectionOp(action, vertex=session.dense_vertex(item["vertex"])))
        elif action in SelectionOp.EDGE_ACTIONS:
            if "u" not in item or "v" not in item:
                raise ApiError(422, "invalid_op", f"{action} requires 'u' and 'v'")
            ops.append(SelectionOp(action,
                                   u=session.dense_vertex(item["u"]),
                                   v=session.dense_vertex(item["v"])))
        else:
            raise ApiError(422, "invalid_op", f"unknown action {action!r}")
    return ops


def create_app(ttl: float = DEFAULT_TTL_SECONDS,
               max_edges: int = DEFAULT_MAX_EDGES,
               workers: int | None = 1,
               ui_dir: str | None = None) -> FastAPI:
    """``ui_dir`` optionally mounts a built explorer frontend at the root so
    the browser client runs same-origin; the API is CORS-open either way (no
    auth by design, exploration tool)."""
    app = FastAPI(title="graphlets", version="0.1.0")
    app.add_middleware(CORSMiddleware, allow_origins=["*"],
                       allow_methods=["*"], allow_headers=["*"])
    store = SessionStore(ttl=ttl, max_edges=max_edges,
                         config=ParallelConfig(workers=workers))
    app.state.store = store

    @app.exception_handler(ApiError)
    async def _api_error(_request, exc: ApiError):
        body = {"code": exc.code, "message": exc.message, "detail": exc.detail}
        return JSONResponse(status_code=exc.status, content=body)

    @app.exception_handler(ConsistencyError)
    async def _consistency_error(_request, exc: ConsistencyError):
        return JSONResponse(status_code=500, content={
            "code": "internal_consistency", "message": str(exc), "detail": None})

    @app.post("/graphs")
    async def upload_graph(request: Request):
        body = (await request.body()).decode("utf-8", errors="replace")
        sid = store.create_from_text(body)
        session = store.get(sid)
        g = session.graph
        payload = {"id": sid, **_counts_payload(session.census)}
        if g.m <= EDGE_ECHO_LIMIT:
            payload["nodes"] = [int(x) for x in g.orig_ids]
            payload["edges"] = [[int(u), int(v)] for u, v in g.original_edges()]
        return payload

    @app.get("/graphs/{sid}/counts")
    async def get_counts(sid: str):
        session = store.get(sid)
        return {"id": sid, **_counts_payload(session.census)}

    @app.get("/graphs/{sid}/gfd")
    async def get_gfd(sid: str, k: int = Query(default=4),
                      scope: str = Query(default="connected")):
        session = store.get(sid)
        if k not in (3, 4) or scope not in GFD_SCOPES:
            raise ApiError(422, "invalid_query",
                           f"k must be 3 or 4 and scope one of {GFD_SCOPES}")
        return {"id": sid, **gfd(session.census, k=k, scope=scope).to_json_dict()}

    @app.post("/graphs/{sid}/selection/ops")
    async def selection_ops(sid: str, request: Request):
        session = store.get(sid)
        try:
            body = await request.json()
        except Exception:
            raise ApiError(422, "invalid_op", "body must be JSON")
        ops = _parse_ops(session, body.get("ops", []))
        with session.lock:
            before = session.selection.frequencies()
            try:
                after = session.selection.apply(ops)
            except ValueError as exc:
                raise ApiError(422, "invalid_op", str(exc))
            session.seq += 1
            seq = session.seq
        deltas = {cid: after.counts[cid] - before.counts[cid]
                  for cid in after.counts}
        payload = {
            "id": sid,
            "seq": seq,
            "n_active": after.n,
            "m_active": after.m,
            "counts": counts_to_json(after.counts),
            "deltas": {k: str(v) if abs(v) > 2**53 else v for k, v in deltas.items()},
            "gfd_k4_connected": list(gfd(after, k=4, scope="connected").values),
        }
        if "client_seq" in (body or {}):
            payload["client_seq"] = body["client_seq"]
        return payload

    @app.get("/graphs/{sid}/selection")
    async def get_selection(sid: str):
        session = store.get(sid)
        with session.lock:
            freqs = session.selection.frequencies()
            active = sorted(int(session.graph.orig_ids[v])
                            for v in session.selection.active)
            seq = session.seq
        return {"id": sid, "seq": seq, "active": active,
                "n_active": freqs.n, "m_active": freqs.m,
                "counts": counts_to_json(freqs.counts)}

    @app.get("/graphs/{sid}/edges/weights")
    async def get_edge_weights(sid: str, pattern: str = Query(default="star4")):
        session = store.get(sid)
        if pattern not in RANK_PATTERNS:
            raise ApiError(422, "invalid_pattern",
                           f"pattern must be one of {RANK_PATTERNS}")
        with session.lock:
            if session.micro is None:
                session.micro = micro_table(session.graph, store.config)
            weights = edge_weights(session.graph, pattern, table=session.micro)
        orig = session.graph.original_edges()
        return {
            "id": sid,
            "pattern": pattern,
            "edges": [[int(u), int(v)] for u, v in orig],
            "weights": [int(w) for w in weights],
        }

    @app.get("/graphs/{sid}/audit")
    async def audit(sid: str):
        session = store.get(sid)
        with session.lock:
            fresh = session.selection.audit()  # raises ConsistencyError on drift
        return {"id": sid, "consistent": True,
                "selection": _counts_payload(fresh)}

    if ui_dir is not None:
        app.mount("/", StaticFiles(directory=ui_dir, html=True), name="ui")

    return app
