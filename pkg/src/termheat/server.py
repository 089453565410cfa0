"""HTTP gateway: read-only JSON API over a shared immutable index.

Endpoints mirror the CLI exactly; heat map bodies are byte-identical to
`termheat heatmap --format json` for the same arguments.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse, Response

from .coindex import CoIndex
from .heatmap import build_heatmap, heatmap_to_json
from .recommender import first_order_terms, recommendation_to_dict
from .session import Scope, drilldown_documents

__all__ = ["ServiceConfig", "create_app"]


@dataclass(frozen=True)
class ServiceConfig:
    default_k: int = 10
    default_m: int = 3
    page_size: int = 20
    assets_dir: str | None = None

    def __post_init__(self) -> None:
        if self.default_k < 1 or self.default_m < 1 or self.page_size < 1:
            raise ValueError("k, m and page_size must be >= 1")


class _BadRequest(Exception):
    def __init__(self, message: str):
        self.message = message


def _json_body(payload: dict) -> Response:
    return Response(
        content=json.dumps(payload, ensure_ascii=False, separators=(",", ":")),
        media_type="application/json",
    )


def _int_param(request: Request, name: str, default: int, minimum: int = 1) -> int:
    raw = request.query_params.get(name)
    if raw is None or raw == "":
        return default
    try:
        value = int(raw)
    except ValueError:
        raise _BadRequest(f"invalid {name}")
    if value < minimum:
        raise _BadRequest(f"invalid {name}")
    return value


def _terms_param(index: CoIndex, request: Request, name: str) -> list[str]:
    raw = request.query_params.get(name, "")
    terms = [t.strip() for t in raw.split(",") if t.strip()]
    for term in terms:
        if term not in index.term_postings:
            raise _BadRequest("unknown term")
    return terms


def _query_param(request: Request) -> str:
    q = request.query_params.get("q", "")
    if not q.strip():
        raise _BadRequest("empty query")
    return q


def create_app(index: CoIndex, config: ServiceConfig | None = None) -> FastAPI:
    config = config or ServiceConfig()
    app = FastAPI(title="termheat", docs_url=None, redoc_url=None)

    @app.exception_handler(_BadRequest)
    async def bad_request_handler(_request: Request, exc: _BadRequest) -> JSONResponse:
        return JSONResponse(status_code=400, content={"error": exc.message})

    @app.exception_handler(ValueError)
    async def value_error_handler(_request: Request, exc: ValueError) -> JSONResponse:
        return JSONResponse(status_code=400, content={"error": str(exc)})

    @app.get("/api/stats")
    async def stats() -> Response:
        return _json_body({"doc_count": index.doc_count, "vocab_size": len(index.term_postings)})

    @app.get("/api/recommend")
    async def recommend(request: Request) -> Response:
        q = _query_param(request)
        k = _int_param(request, "k", config.default_k)
        scope = _terms_param(index, request, "scope")
        include_self = request.query_params.get("include_self") in ("1", "true")
        rec = first_order_terms(index, q, k=k, scope=scope, include_self=include_self)
        return _json_body(recommendation_to_dict(rec, k=k, scope=scope))

    @app.get("/api/heatmap")
    async def heatmap(request: Request) -> Response:
        q = _query_param(request)
        k = _int_param(request, "k", config.default_k)
        m = _int_param(request, "m", config.default_m)
        scope = _terms_param(index, request, "scope")
        hm = build_heatmap(index, q, k=k, m=m, scope=scope)
        return Response(content=heatmap_to_json(hm), media_type="application/json")

    @app.get("/api/documents")
    async def documents(request: Request) -> Response:
        q = _query_param(request)
        scope = _terms_param(index, request, "scope")
        selection = _terms_param(index, request, "terms")
        page = _int_param(request, "page", 1)
        page_size = _int_param(request, "page_size", config.page_size)
        dp = drilldown_documents(
            index, q, Scope(tuple(scope)), selection, page=page, page_size=page_size
        )
        return _json_body(
            {
                "query": q,
                "scope": scope,
                "terms": selection,
                "total": dp.total,
                "page": dp.page,
                "page_size": dp.page_size,
                "items": list(dp.items),
            }
        )

    if config.assets_dir:
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=config.assets_dir, html=True), name="assets")

    return app
