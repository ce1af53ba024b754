"""HTTP facade over the pipeline for the companion UI.

Three endpoints: POST /identify runs the pipeline and returns the
detailed export structure, GET /meters lists the loaded database, and
GET /health reports readiness (503 until the database is loaded).  The
database is read once at startup and shared read-only, so requests need
no coordination.
"""

from __future__ import annotations

import json
import os

from fastapi import FastAPI, Request, Response
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from pydantic import BaseModel, Field

from . import __version__, meterdb, pipeline
from .matcher import DEFAULT_TOP_K
from .translit import EmptyInput

DEFAULT_MAX_TEXT_BYTES = 1 << 20  # 1 MiB


class IdentifyRequest(BaseModel):
    text: str
    mode: str = Field(default="verse", pattern="^(line|verse)$")
    scheme: str = Field(
        default="auto", pattern="^(auto|devanagari|iast|hk|slp1)$"
    )
    k: int = Field(default=DEFAULT_TOP_K, ge=1)


def _json_response(payload: dict, status_code: int = 200) -> Response:
    body = json.dumps(payload, ensure_ascii=False, separators=(",", ":"))
    return Response(
        content=body, status_code=status_code, media_type="application/json"
    )


def create_app(
    db_path: str | None = None,
    cors_origins: list[str] | None = None,
    max_text_bytes: int = DEFAULT_MAX_TEXT_BYTES,
    defer_db: bool = False,
) -> FastAPI:
    """Build the service; ``defer_db`` keeps the database unloaded."""
    app = FastAPI(title="vrtta", version=__version__)
    app.state.db = None if defer_db else meterdb.load_path(db_path)
    app.state.db_path = db_path
    app.state.max_text_bytes = max_text_bytes

    origins = cors_origins
    if origins is None:
        env = os.environ.get("VRTTA_CORS_ORIGINS", "")
        origins = [o.strip() for o in env.split(",") if o.strip()]
    if origins:
        app.add_middleware(
            CORSMiddleware,
            allow_origins=origins,
            allow_methods=["GET", "POST"],
            allow_headers=["*"],
        )

    @app.exception_handler(RequestValidationError)
    async def _validation(request: Request, exc: RequestValidationError):
        malformed = any(
            err.get("type") in ("json_invalid", "model_attributes_type")
            for err in exc.errors()
        )
        status = 400 if malformed else 422
        detail = [
            {"loc": list(err.get("loc", ())), "type": err.get("type", "")}
            for err in exc.errors()
        ]
        return _json_response({"detail": detail}, status)

    @app.get("/health")
    async def health():
        if app.state.db is None:
            return _json_response({"status": "loading"}, 503)
        return _json_response({"status": "ok", "version": __version__})

    @app.get("/meters")
    async def meters():
        db = app.state.db
        if db is None:
            return _json_response({"detail": "database not loaded"}, 503)
        out = []
        for name in sorted(db.meters):
            meter = db.meters[name]
            out.append(
                {
                    "name": meter.name,
                    "name_iast": meter.name_latin,
                    "patterns": [p.text for p in meter.pada_patterns],
                    "syllable_counts": [len(p) for p in meter.pada_patterns],
                    "gana": meter.gana_display(),
                }
            )
        return _json_response({"meters": out})

    @app.post("/identify")
    async def identify(request: IdentifyRequest):
        db = app.state.db
        if db is None:
            return _json_response({"detail": "database not loaded"}, 503)
        if not request.text.strip():
            return _json_response({"detail": "text is empty"}, 422)
        if len(request.text.encode("utf-8")) > app.state.max_text_bytes:
            return _json_response({"detail": "text too large"}, 413)
        try:
            result = pipeline.identify_document(
                request.text,
                db,
                mode=request.mode,
                scheme=request.scheme,
                k=request.k,
            )
        except EmptyInput:
            return _json_response({"detail": "text is empty"}, 422)
        except Exception:  # opaque by design
            return _json_response({"detail": "internal error"}, 500)
        return _json_response(pipeline.to_dict(result))

    return app


def app() -> FastAPI:
    """Factory for ``uvicorn vrtta.service:app --factory``."""
    return create_app(os.environ.get(meterdb.DEFAULT_DB_ENV))
