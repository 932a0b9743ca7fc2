"""HTTP service wrapping the analysis pipeline.

Request/response bodies are pydantic models; the full architectural
model travels as its canonical document (the same shape as
`.sydra.json`, schema in docs/). The app also serves stored model files
and, when a built viewer directory is supplied, the viewer itself.
"""
from __future__ import annotations

import json
from pathlib import Path

from fastapi import FastAPI, HTTPException
from fastapi.responses import HTMLResponse, JSONResponse
from fastapi.staticfiles import StaticFiles
from pydantic import BaseModel, Field

from . import __version__, mapping, model_io
from .aggregate import emergent_tiers
from .pipeline import PipelineError, RunConfig, analyze_tree, load_corpus
from .scanning import SourceFile, classify_kind


class HealthResponse(BaseModel):
    status: str
    version: str


class AnalyzeRequest(BaseModel):
    root: str
    rules_path: str
    include_paths: list[str] = Field(default_factory=list)
    excludes: list[str] = Field(default_factory=list)
    engine_name: str = ""
    commit_ref: str = ""
    include_unmapped: bool = False
    workers: int = 1


class MapRequest(BaseModel):
    paths: list[str]
    rules_text: str


class MapResponse(BaseModel):
    tags: dict[str, str]


class SuggestRequest(BaseModel):
    paths: list[str]
    keyword_table: dict[str, str] | None = None


class SuggestedRule(BaseModel):
    subsystem: str
    pattern: str


class SuggestResponse(BaseModel):
    rules: list[SuggestedRule]


class AggregateRequest(BaseModel):
    manifest_path: str
    k_inner: int = 4
    threshold: int | None = None
    max_edges: int | None = None


class ModelListResponse(BaseModel):
    models: list[str]


_FALLBACK_INDEX = """<!doctype html>
<html><body>
<h1>sydra</h1>
<p>The analysis API is up. Model files: <a href="/api/models">/api/models</a>.
Build the viewer (frontend/) and pass --frontend to serve it here.</p>
</body></html>
"""


def create_app(model_dir: str | None = None, frontend_dir: str | None = None) -> FastAPI:
    app = FastAPI(title="sydra", version=__version__)
    models_root = Path(model_dir) if model_dir else None

    @app.get("/api/health", response_model=HealthResponse)
    def health() -> HealthResponse:
        return HealthResponse(status="ok", version=__version__)

    @app.post("/api/analyze")
    def analyze(request: AnalyzeRequest) -> JSONResponse:
        config = RunConfig(
            root=request.root,
            rules_path=request.rules_path,
            include_paths=tuple(request.include_paths),
            excludes=tuple(request.excludes),
            engine_name=request.engine_name,
            commit_ref=request.commit_ref,
            include_unmapped=request.include_unmapped,
            workers=request.workers,
        )
        try:
            model, _coverage, _cohesion, _diagnostics = analyze_tree(config)
        except PipelineError as err:
            raise HTTPException(status_code=400, detail=str(err)) from err
        return JSONResponse(model_io.model_to_document(model))

    @app.post("/api/map", response_model=MapResponse)
    def map_paths(request: MapRequest) -> MapResponse:
        try:
            rule_set = mapping.parse_rules(request.rules_text)
        except mapping.RuleError as err:
            raise HTTPException(status_code=400, detail=str(err)) from err
        return MapResponse(
            tags={path: mapping.map_path(path, rule_set) for path in request.paths}
        )

    @app.post("/api/suggest", response_model=SuggestResponse)
    def suggest(request: SuggestRequest) -> SuggestResponse:
        files = [
            SourceFile(i, p, classify_kind(p))
            for i, p in enumerate(sorted(request.paths))
        ]
        rules = mapping.suggest_rules(files, request.keyword_table)
        return SuggestResponse(
            rules=[SuggestedRule(subsystem=r.subsystem, pattern=r.pattern) for r in rules]
        )

    @app.post("/api/aggregate")
    def aggregate(request: AggregateRequest) -> JSONResponse:
        try:
            models = load_corpus(request.manifest_path)
            emergent = emergent_tiers(
                models,
                k_inner=request.k_inner,
                threshold=request.threshold,
                max_edges=request.max_edges,
            )
        except (PipelineError, ValueError) as err:
            raise HTTPException(status_code=400, detail=str(err)) from err
        return JSONResponse(model_io.emergent_to_document(emergent))

    @app.get("/api/models", response_model=ModelListResponse)
    def list_models() -> ModelListResponse:
        if models_root is None or not models_root.is_dir():
            return ModelListResponse(models=[])
        names = sorted(
            p.name for p in models_root.iterdir() if p.name.endswith(model_io.MODEL_SUFFIX)
        )
        return ModelListResponse(models=names)

    @app.get("/api/models/{name}")
    def get_model(name: str) -> JSONResponse:
        if models_root is None:
            raise HTTPException(status_code=404, detail="no model directory configured")
        if "/" in name or "\\" in name or not name.endswith(model_io.MODEL_SUFFIX):
            raise HTTPException(status_code=400, detail="invalid model name")
        path = models_root / name
        if not path.is_file():
            raise HTTPException(status_code=404, detail=f"no such model: {name}")
        return JSONResponse(json.loads(path.read_text(encoding="utf-8")))

    if frontend_dir and Path(frontend_dir).is_dir():
        app.mount("/", StaticFiles(directory=frontend_dir, html=True), name="viewer")
    else:

        @app.get("/", response_class=HTMLResponse)
        def index() -> str:
            return _FALLBACK_INDEX

    return app
