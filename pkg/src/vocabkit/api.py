"""HTTP service exposing loaded models and interactive expansion sessions.

All scoring happens server-side; every mutation responds with the full
session view so clients just rerender. Error bodies are
``{"code": ..., "message": ...}``.
"""

from __future__ import annotations

import json
import logging
from pathlib import Path

from fastapi import FastAPI, Request, Response
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse, PlainTextResponse
from fastapi.staticfiles import StaticFiles
from starlette.concurrency import run_in_threadpool

from .embeddings import EmbeddingModel
from .errors import MalformedSnapshotError, VocabError
from .schemas import (
    CreateSessionRequest,
    CreateSessionResponse,
    ModelInfo,
    ParamsModel,
    SessionView,
    TermRequest,
    view_of,
)
from .session import import_snapshot
from .store import SessionStore

logger = logging.getLogger(__name__)


def create_app(registry: dict[str, EmbeddingModel],
               snapshot_dir: str | Path | None = None,
               static_dir: str | Path | None = None,
               defaults: ParamsModel | None = None) -> FastAPI:
    """Build the service around a registry of already-loaded models."""
    app = FastAPI(title="vocabkit", docs_url="/api/docs", openapi_url="/api/openapi.json")
    store = SessionStore(registry, snapshot_dir=snapshot_dir)
    app.state.store = store

    @app.exception_handler(VocabError)
    def vocab_error_handler(request: Request, exc: VocabError) -> JSONResponse:
        return JSONResponse(status_code=exc.status,
                            content={"code": exc.code, "message": str(exc)})

    @app.exception_handler(RequestValidationError)
    def validation_error_handler(request: Request, exc: RequestValidationError) -> JSONResponse:
        return JSONResponse(status_code=400,
                            content={"code": "invalid_payload", "message": str(exc)})

    @app.get("/api/models", response_model=list[ModelInfo])
    def list_models():
        return [ModelInfo(id=m.id, dimension=m.dimension, vocab_size=m.vocab_size)
                for m in registry.values()]

    def _merged_params(requested: ParamsModel | None) -> ParamsModel:
        base = defaults.model_dump(by_alias=True) if defaults is not None else {}
        if requested is not None:
            base.update(requested.model_dump(by_alias=True, exclude_unset=True))
        return ParamsModel.model_validate(base)

    @app.post("/api/sessions", response_model=CreateSessionResponse, status_code=201)
    def create_session(body: CreateSessionRequest | None = None):
        params = _merged_params(body.params if body else None)
        session = store.create(params.to_engine(list(registry)))
        return CreateSessionResponse(session_id=session.id, state=view_of(session))

    @app.get("/api/sessions/{session_id}", response_model=SessionView)
    def get_session(session_id: str):
        return store.read(session_id, view_of)

    @app.post("/api/sessions/{session_id}/accept", response_model=SessionView)
    def accept(session_id: str, body: TermRequest):
        return store.mutate(session_id, lambda s: s.accept_term(body.term), view_of)

    @app.post("/api/sessions/{session_id}/reject", response_model=SessionView)
    def reject(session_id: str, body: TermRequest):
        return store.mutate(session_id, lambda s: s.reject_term(body.term), view_of)

    @app.post("/api/sessions/{session_id}/remove", response_model=SessionView)
    def remove(session_id: str, body: TermRequest):
        return store.mutate(session_id, lambda s: s.remove_accepted(body.term), view_of)

    @app.get("/api/sessions/{session_id}/export")
    def export_session(session_id: str, format: str = "snapshot") -> Response:
        if format == "snapshot":
            snapshot = store.read(session_id, lambda s: s.export_snapshot())
            return JSONResponse(content=snapshot)
        if format == "terms":
            text = store.read(session_id, lambda s: s.export_term_list())
            return PlainTextResponse(content=text)
        raise MalformedSnapshotError(f"unknown export format {format!r}")

    def _apply_import(session_id: str, body: bytes, content_type: str):
        if "json" in content_type:
            try:
                data = json.loads(body.decode("utf-8"))
            except (UnicodeDecodeError, json.JSONDecodeError) as exc:
                raise MalformedSnapshotError(f"bad snapshot payload: {exc}") from None

            def replace(_session):
                return import_snapshot(data, registry, session_id=session_id)

            return store.mutate(session_id, replace, view_of)

        try:
            text = body.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise MalformedSnapshotError(f"term list is not UTF-8: {exc}") from None

        def extend(session):
            for line in text.splitlines():
                if line.strip():
                    session.accept_term(line)

        return store.mutate(session_id, extend, view_of)

    @app.post("/api/sessions/{session_id}/import", response_model=SessionView)
    async def import_session(session_id: str, request: Request):
        body = await request.body()
        content_type = request.headers.get("content-type", "").lower()
        return await run_in_threadpool(_apply_import, session_id, body, content_type)

    if static_dir is not None:
        app.mount("/", StaticFiles(directory=static_dir, html=True), name="ui")

    return app
