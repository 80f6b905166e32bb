"""HTTP/JSON API over the engine, codec, catalog and comparator.

Stateless: every handler calls pure functions over the immutable catalog.
Domain failures map to 400 with a machine code mirroring the codec error
names; the 500 handler never leaks internals. When built calculator UI
assets are present they are served under ``/``; otherwise the service is
API-only.
"""

from __future__ import annotations

import os
from pathlib import Path

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles
from starlette.exceptions import HTTPException as StarletteHTTPException

from . import catalog, codec, comparator, engine
from .catalog import Scheme
from .errors import EmptyCorpus, UnreadableSource, VectorError

DEFAULT_ADDR = "127.0.0.1:8315"
MAX_COMPARE_RECORDS = 10_000

_SCHEME_SLUGS = {"cvss3": Scheme.CVSS_3_0, "rvss1": Scheme.RVSS_1_0}


def resolve_addr(addr: str | None = None) -> tuple[str, int]:
    value = addr or os.environ.get("SERVE_ADDR") or DEFAULT_ADDR
    host, _, port = value.rpartition(":")
    return host or "127.0.0.1", int(port)


def _default_ui_dir() -> Path | None:
    env = os.environ.get("RVSS_UI_DIR")
    if env:
        return Path(env)
    candidate = Path(__file__).resolve().parents[2] / "frontend" / "dist"
    return candidate


def _api_error(
    status: int,
    code: str,
    detail: str,
    token: str | None = None,
    metric: str | None = None,
):
    body = {"status": status, "code": code, "detail": detail}
    if token is not None:
        body["offendingToken"] = token
    if metric is not None:
        body["offendingMetric"] = metric
    return JSONResponse(status_code=status, content=body)


def create_app(ui_dir: str | os.PathLike | None = None) -> FastAPI:
    app = FastAPI(title="rvss", docs_url=None, redoc_url=None)

    cors = os.environ.get("RVSS_CORS_ORIGINS")
    if cors:
        from fastapi.middleware.cors import CORSMiddleware

        app.add_middleware(
            CORSMiddleware,
            allow_origins=[o.strip() for o in cors.split(",") if o.strip()],
            allow_methods=["*"],
            allow_headers=["*"],
        )

    @app.exception_handler(VectorError)
    async def _vector_error(request: Request, exc: VectorError):
        # the metric key, when the error pins one, lets the UI flag the panel
        metric = getattr(exc, "key", None)
        return _api_error(400, exc.code, str(exc), exc.token, metric)

    @app.exception_handler(RequestValidationError)
    async def _validation_error(request: Request, exc: RequestValidationError):
        return _api_error(400, "MalformedBody", "request body is malformed")

    @app.exception_handler(StarletteHTTPException)
    async def _http_error(request: Request, exc: StarletteHTTPException):
        codes = {404: "NotFound", 405: "MethodNotAllowed", 413: "TooManyRecords"}
        code = codes.get(exc.status_code, "HttpError")
        return _api_error(exc.status_code, code, str(exc.detail))

    @app.exception_handler(Exception)
    async def _internal_error(request: Request, exc: Exception):
        return _api_error(500, "InternalError", "internal error")

    @app.get("/healthz")
    async def healthz():
        return {"status": "ok", "schemes": [s.prefix for s in Scheme]}

    @app.post("/api/v1/score")
    async def score_vector(body: dict):
        vector_text = body.get("vector")
        if not isinstance(vector_text, str):
            return _api_error(400, "MalformedBody", "body must carry a string 'vector'")
        include_subscores = bool(body.get("subscores", True))
        report = engine.score(codec.parse(vector_text))
        return report.to_json_dict(include_subscores=include_subscores)

    @app.get("/api/v1/catalog/{scheme_slug}")
    async def catalog_document(scheme_slug: str):
        scheme = _SCHEME_SLUGS.get(scheme_slug)
        if scheme is None:
            return _api_error(404, "NotFound", f"unknown scheme {scheme_slug!r}")
        return catalog.catalog_export(scheme)

    @app.post("/api/v1/compare")
    async def compare_records(request: Request):
        content_type = request.headers.get("content-type", "")
        if content_type.startswith("multipart/form-data"):
            form = await request.form()
            upload = form.get("corpus")
            if upload is None or isinstance(upload, str):
                return _api_error(400, "MalformedBody",
                                  "multipart body must carry a 'corpus' file")
            name = upload.filename or ""
            corpus_format = "csv" if name.endswith(".csv") else "jsonl"
            try:
                records, diagnostics = comparator.load_records(
                    upload.file, corpus_format
                )
            except UnreadableSource as exc:
                return _api_error(400, "UnreadableSource", str(exc))
            except EmptyCorpus as exc:
                return _api_error(400, "EmptyCorpus", str(exc))
        else:
            try:
                body = await request.json()
            except Exception:
                return _api_error(400, "MalformedBody", "request body is not JSON")
            raw_records = body.get("records") if isinstance(body, dict) else None
            if not isinstance(raw_records, list):
                return _api_error(400, "MalformedBody",
                                  "body must carry a 'records' array")
            if len(raw_records) > MAX_COMPARE_RECORDS:
                return _api_error(413, "TooManyRecords",
                                  f"at most {MAX_COMPARE_RECORDS} records per request")
            records, diagnostics = [], []
            for position, raw in enumerate(raw_records, start=1):
                if not isinstance(raw, dict):
                    diagnostics.append(comparator.ParseDiagnostic(
                        position, None, "BadJson", "record is not an object"))
                    continue
                record = comparator.record_from_dict(raw, position, diagnostics)
                if record:
                    records.append(record)

        if len(records) > MAX_COMPARE_RECORDS:
            return _api_error(413, "TooManyRecords",
                              f"at most {MAX_COMPARE_RECORDS} records per request")
        rows = comparator.compare(records)
        return {
            "rows": [comparator.row_json_dict(r) for r in rows],
            "diagnostics": [
                {"line": d.line, "recordId": d.record_id,
                 "code": d.code, "message": d.message}
                for d in diagnostics
            ],
        }

    resolved_ui = Path(ui_dir) if ui_dir is not None else _default_ui_dir()
    if resolved_ui and resolved_ui.is_dir():
        app.mount("/", StaticFiles(directory=resolved_ui, html=True), name="ui")
    else:
        @app.get("/")
        async def landing():
            return _api_error(
                404, "NotFound",
                "calculator UI assets not built; API-only mode "
                "(see /healthz, /api/v1/score, /api/v1/catalog/{scheme})",
            )

    return app


app = create_app()
