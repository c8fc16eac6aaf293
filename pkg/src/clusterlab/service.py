"""Embedded HTTP session service for the mutation explorer UI.

Stdlib-only JSON API over ThreadingHTTPServer.  Sessions are in-memory with
optional JSON snapshot persistence.  Within one session, mutating requests
are serialized: a second mutation arriving while one is in flight is
rejected with 409 rather than queued.  Reads observe immutable snapshots and
never block behind mutations.

Routes (all payloads carry "v": 1; directions are 1-based on the wire):
  GET  /health
  GET  /presets                    GET /presets/{id}
  POST /sessions                   body {"seed": {...}} or {"preset": "a2"}
  GET  /sessions/{id}
  POST /sessions/{id}/mutate       body {"k": 1}
  POST /sessions/{id}/undo
  GET  /sessions/{id}/graph?max_vertices=&max_depth=
"""

from __future__ import annotations

import json
import re
import secrets
import sys
import threading
from dataclasses import dataclass
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from pathlib import Path
from urllib.parse import parse_qs, urlparse

from .explorer import EnumLimits, enumerate_exchange_graph, graph_to_json
from .laurent import LaurentError, denominator_vector
from .presets import list_presets, preset_seed
from .seed import (
    Seed,
    SeedError,
    is_acyclic,
    seed_from_json,
    seed_mutation,
    seed_to_json,
)

GRAPH_DEFAULT_LIMITS = EnumLimits(500, 10)
GRAPH_MAX_LIMITS = EnumLimits(20_000, 64)


class ApiError(Exception):
    def __init__(self, status: int, message: str, **extra):
        super().__init__(message)
        self.status = status
        self.payload = {"v": 1, "error": message, **extra}


@dataclass(frozen=True)
class Snapshot:
    """Immutable view of a session; swapped atomically on mutation."""

    seed: Seed
    history: tuple[int, ...]


class Session:
    def __init__(self, sid: str, initial: Seed, history=()):
        self.sid = sid
        self.initial = initial
        self.lock = threading.Lock()
        seed = initial
        for k in history:
            seed = seed_mutation(seed, k)
        self.snapshot = Snapshot(seed, tuple(history))


class SessionStore:
    """Thread-safe registry of sessions with optional snapshot persistence."""

    def __init__(self, state_dir: str | None = None):
        self._sessions: dict[str, Session] = {}
        self._registry_lock = threading.Lock()
        self.state_dir = Path(state_dir) if state_dir else None
        if self.state_dir:
            self.state_dir.mkdir(parents=True, exist_ok=True)
            self._load_all()

    def _load_all(self) -> None:
        for path in sorted(self.state_dir.glob("*.json")):
            try:
                obj = json.loads(path.read_text())
                seed = seed_from_json(obj["seed"])
                history = tuple(int(k) - 1 for k in obj.get("history", []))
                sid = path.stem
                self._sessions[sid] = Session(sid, seed, history)
            except (SeedError, LaurentError, KeyError, ValueError, json.JSONDecodeError):
                continue

    def _persist(self, session: Session) -> None:
        if not self.state_dir:
            return
        snap = session.snapshot
        payload = {
            "v": 1,
            "seed": seed_to_json(session.initial),
            "history": [k + 1 for k in snap.history],
        }
        (self.state_dir / f"{session.sid}.json").write_text(
            json.dumps(payload, indent=2)
        )

    def create(self, seed: Seed) -> Session:
        sid = secrets.token_hex(6)
        session = Session(sid, seed)
        with self._registry_lock:
            self._sessions[sid] = session
        self._persist(session)
        return session

    def get(self, sid: str) -> Session:
        with self._registry_lock:
            session = self._sessions.get(sid)
        if session is None:
            raise ApiError(404, f"unknown session {sid}")
        return session

    def mutate(self, sid: str, k1: int) -> Session:
        session = self.get(sid)
        if not session.lock.acquire(blocking=False):
            raise ApiError(409, "a mutation is already in flight for this session")
        try:
            snap = session.snapshot
            k = k1 - 1
            if k not in snap.seed.matrix.col_of:
                raise ApiError(
                    400,
                    f"direction {k1} is not exchangeable",
                    valid=[p + 1 for p in snap.seed.matrix.ex],
                )
            seed = seed_mutation(snap.seed, k)
            session.snapshot = Snapshot(seed, snap.history + (k,))
        finally:
            session.lock.release()
        self._persist(session)
        return session

    def undo(self, sid: str) -> Session:
        session = self.get(sid)
        if not session.lock.acquire(blocking=False):
            raise ApiError(409, "a mutation is already in flight for this session")
        try:
            snap = session.snapshot
            if not snap.history:
                raise ApiError(400, "nothing to undo")
            # replay from the initial seed; exact by involutivity of mutation
            seed = session.initial
            for k in snap.history[:-1]:
                seed = seed_mutation(seed, k)
            session.snapshot = Snapshot(seed, snap.history[:-1])
        finally:
            session.lock.release()
        self._persist(session)
        return session


def session_state(session: Session) -> dict:
    snap = session.snapshot
    seed = snap.seed
    names = [seed.varset.names[p] for p in seed.matrix.ex]
    previews = []
    for k in seed.matrix.ex:
        nxt = seed_mutation(seed, k)
        var = nxt.cluster[k]
        previews.append(
            {
                "k": k + 1,
                "variable": str(var),
                "delta": list(denominator_vector(var, names)),
            }
        )
    return {
        "v": 1,
        "id": session.sid,
        "initial": seed_to_json(session.initial),
        "seed": seed_to_json(seed),
        "history": [k + 1 for k in snap.history],
        "ex": [p + 1 for p in seed.matrix.ex],
        "cluster": [str(p) for p in seed.cluster],
        "delta": [
            list(denominator_vector(seed.cluster[p], names)) for p in seed.matrix.ex
        ],
        "acyclic": is_acyclic(seed.matrix)[0],
        "exchange_previews": previews,
    }


class _Handler(BaseHTTPRequestHandler):
    server_version = "clusterlab/0.1"
    store: SessionStore = None  # set by make_server

    # -- plumbing ----------------------------------------------------------

    def log_message(self, fmt, *args):  # quiet by default
        if getattr(self.server, "verbose", False):
            super().log_message(fmt, *args)

    def _send(self, status: int, payload: dict) -> None:
        body = json.dumps(payload, indent=2).encode()
        self.send_response(status)
        self.send_header("Content-Type", "application/json")
        self.send_header("Content-Length", str(len(body)))
        self.send_header("Access-Control-Allow-Origin", "*")
        self.send_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS")
        self.send_header("Access-Control-Allow-Headers", "Content-Type")
        self.end_headers()
        self.wfile.write(body)

    def _body(self) -> dict:
        length = int(self.headers.get("Content-Length") or 0)
        if length == 0:
            return {}
        raw = self.rfile.read(length)
        try:
            obj = json.loads(raw)
        except json.JSONDecodeError as exc:
            raise ApiError(400, f"invalid JSON body: {exc.msg}")
        if not isinstance(obj, dict):
            raise ApiError(400, "JSON body must be an object")
        return obj

    def do_OPTIONS(self):
        self._send(204, {})

    # -- routing -----------------------------------------------------------

    def do_GET(self):
        self._route("GET")

    def do_POST(self):
        self._route("POST")

    def _route(self, method: str):
        url = urlparse(self.path)
        parts = [p for p in url.path.split("/") if p]
        try:
            handler = self._dispatch(method, parts, url)
        except ApiError as exc:
            self._send(exc.status, exc.payload)
        except (SeedError, LaurentError, ValueError) as exc:
            self._send(400, {"v": 1, "error": str(exc)})
        else:
            self._send(*handler)

    def _dispatch(self, method, parts, url):
        store = self.store
        if method == "GET" and parts == ["health"]:
            return 200, {"v": 1, "status": "ok"}
        if method == "GET" and parts == ["presets"]:
            return 200, {"v": 1, "presets": list_presets()}
        if method == "GET" and len(parts) == 2 and parts[0] == "presets":
            try:
                seed = preset_seed(parts[1])
            except ValueError as exc:
                raise ApiError(404, str(exc))
            return 200, {"v": 1, "seed": seed_to_json(seed)}
        if method == "POST" and parts == ["sessions"]:
            body = self._body()
            if "preset" in body:
                try:
                    seed = preset_seed(str(body["preset"]))
                except ValueError as exc:
                    raise ApiError(400, str(exc))
            elif "seed" in body:
                seed = seed_from_json(body["seed"])
            else:
                raise ApiError(400, "body must contain 'seed' or 'preset'")
            session = store.create(seed)
            return 201, session_state(session)
        if len(parts) >= 2 and parts[0] == "sessions":
            sid = parts[1]
            rest = parts[2:]
            if method == "GET" and not rest:
                return 200, session_state(store.get(sid))
            if method == "POST" and rest == ["mutate"]:
                body = self._body()
                if "k" not in body or not isinstance(body["k"], int):
                    raise ApiError(400, "body must contain an integer 'k'")
                return 200, session_state(store.mutate(sid, body["k"]))
            if method == "POST" and rest == ["undo"]:
                return 200, session_state(store.undo(sid))
            if method == "GET" and rest == ["graph"]:
                session = store.get(sid)
                query = parse_qs(url.query)

                def qint(name, default, cap):
                    try:
                        value = int(query.get(name, [default])[0])
                    except ValueError:
                        raise ApiError(400, f"bad integer for {name}")
                    return max(1, min(value, cap))

                limits = EnumLimits(
                    qint("max_vertices", GRAPH_DEFAULT_LIMITS.max_vertices,
                         GRAPH_MAX_LIMITS.max_vertices),
                    qint("max_depth", GRAPH_DEFAULT_LIMITS.max_depth,
                         GRAPH_MAX_LIMITS.max_depth),
                )
                snap = session.snapshot
                graph = enumerate_exchange_graph(snap.seed, limits)
                payload = graph_to_json(graph)
                ids = graph.vertex_ids()
                payload["current"] = ids[snap.seed.canonical_key]
                return 200, payload
        raise ApiError(404, f"no route for {method} {self.path}")


def make_server(port: int = 0, state_dir: str | None = None) -> ThreadingHTTPServer:
    """Create (but do not start) the HTTP server; port 0 picks a free port."""
    store = SessionStore(state_dir)
    handler = type("Handler", (_Handler,), {"store": store})
    server = ThreadingHTTPServer(("127.0.0.1", port), handler)
    server.daemon_threads = True
    server.store = store
    return server


def run_server(port: int, state_dir: str | None = None) -> None:
    server = make_server(port, state_dir)
    server.verbose = True
    host, actual_port = server.server_address
    print(f"clusterlab service listening on http://{host}:{actual_port}", file=sys.stderr)
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        server.server_close()
