"""In-memory session storage with per-session locking and snapshot persistence.

Mutations on one session are serialized by its lock; different sessions
proceed concurrently. When a snapshot directory is configured, every
mutation writes the session's snapshot durably (temp file + fsync +
atomic rename) before the caller gets the result back, and the store
restores all snapshots on startup.
"""

from __future__ import annotations

import json
import logging
import os
import threading
from pathlib import Path
from typing import Callable

from .embeddings import EmbeddingModel
from .errors import SessionNotFoundError
from .session import Session, SessionParams, import_snapshot, new_session

logger = logging.getLogger(__name__)


class SessionStore:
    def __init__(self, registry: dict[str, EmbeddingModel],
                 snapshot_dir: str | Path | None = None):
        self.registry = registry
        self._sessions: dict[str, Session] = {}
        self._locks: dict[str, threading.Lock] = {}
        self._mutex = threading.Lock()
        self.snapshot_dir = Path(snapshot_dir) if snapshot_dir else None
        if self.snapshot_dir is not None:
            self.snapshot_dir.mkdir(parents=True, exist_ok=True)
            self._restore()

    def _restore(self) -> None:
        for path in sorted(self.snapshot_dir.glob("*.json")):
            session_id = path.stem
            try:
                data = json.loads(path.read_text(encoding="utf-8"))
                session = import_snapshot(data, self.registry, session_id=session_id)
            except Exception:
                logger.exception("skipping unreadable snapshot %s", path)
                continue
            self._sessions[session_id] = session
            self._locks[session_id] = threading.Lock()
        if self._sessions:
            logger.info("restored %d session(s) from %s", len(self._sessions), self.snapshot_dir)

    def _lock_for(self, session_id: str) -> threading.Lock:
        with self._mutex:
            if session_id not in self._sessions:
                raise SessionNotFoundError(f"no session {session_id!r}")
            return self._locks[session_id]

    def create(self, params: SessionParams) -> Session:
        session = new_session(params, self.registry)
        with self._mutex:
            self._sessions[session.id] = session
            self._locks[session.id] = threading.Lock()
        self._persist(session)
        return session

    def read(self, session_id: str, fn: Callable[[Session], object]):
        """Run `fn` on the session under its lock, without persisting."""
        lock = self._lock_for(session_id)
        with lock:
            return fn(self._sessions[session_id])

    def mutate(self, session_id: str, fn: Callable[[Session], Session | None],
               result: Callable[[Session], object] = lambda s: s):
        """Apply a mutation under the session lock and persist the result.

        `fn` may return a replacement Session (snapshot import does);
        returning None keeps the mutated-in-place session. `result` runs
        on the final session while the lock is still held, so the value
        handed back reflects exactly the acknowledged state.
        """
        lock = self._lock_for(session_id)
        with lock:
            session = self._sessions[session_id]
            replacement = fn(session)
            if replacement is not None:
                replacement.id = session_id
                self._sessions[session_id] = replacement
                session = replacement
            self._persist(session)
            return result(session)

    def _persist(self, session: Session) -> None:
        if self.snapshot_dir is None:
            return
        payload = json.dumps(session.export_snapshot(), ensure_ascii=False, indent=2)
        final = self.snapshot_dir / f"{session.id}.json"
        tmp = self.snapshot_dir / f".{session.id}.json.tmp"
        with open(tmp, "w", encoding="utf-8") as fh:
            fh.write(payload)
            fh.flush()
            os.fsync(fh.fileno())
        os.replace(tmp, final)
