"""Review API: list runs, browse differing rows, submit quality scores.

Plain JSON over HTTP, loopback by default. All writes go through
attach_score semantics into the run store's audit trail; the UI holds no
state of its own. Routes are documented in the README.
"""

from __future__ import annotations

import logging
import os
import threading
from pathlib import Path

from fastapi import Depends, FastAPI, HTTPException, Request
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles
from pydantic import BaseModel

from . import evaluation
from .errors import DataError
from .run_store import RunStore
from .taxonomy import shipped_taxonomy, try_parse_code, canonical

logger = logging.getLogger(__name__)

TOKEN_ENV = "MSCBENCH_REVIEW_TOKEN"


class ScoreSubmission(BaseModel):
    score: int
    notes: str = ""
    reviewer: str = "reviewer"


def _arxiv_link(arxiv_id: str) -> str:
    return f"https://arxiv.org/abs/{arxiv_id}"


def _annotate(codes: list[str], taxonomy, flagged: set[str]) -> list[dict]:
    annotated = []
    for code_str in codes:
        code = try_parse_code(code_str)
        known = code is not None and canonical(code) in taxonomy.entries
        annotated.append(
            {
                "code": code_str,
                "top": code.top if code else None,
                "description": taxonomy.describe(canonical(code)) if code else None,
                "status": "known" if known else "unknown_code",
                "hallucination": code_str in flagged or not known,
            }
        )
    return annotated


def _top_set(tops: set[str] | list[str], taxonomy) -> list[dict]:
    return [
        {"code": top, "description": taxonomy.describe(top), "status": "known"
         if top in taxonomy.entries else "unknown_code"}
        for top in sorted(tops)
    ]


def build_app(store: RunStore, token_auth: bool = False, ui_dir: str | None = None) -> FastAPI:
    app = FastAPI(title="mscbench review", docs_url=None, redoc_url=None)
    taxonomy = shipped_taxonomy()
    write_lock = threading.Lock()

    async def check_token(request: Request) -> None:
        if not token_auth:
            return
        expected = os.environ.get(TOKEN_ENV)
        if not expected:
            raise HTTPException(status_code=500, detail=f"{TOKEN_ENV} is not set")
        header = request.headers.get("Authorization", "")
        if header != f"Bearer {expected}":
            raise HTTPException(status_code=401, detail="bad or missing token")

    guarded = [Depends(check_token)]

    @app.exception_handler(DataError)
    async def data_error_handler(_request: Request, exc: DataError):
        return JSONResponse(status_code=400, content={"detail": str(exc)})

    @app.get("/api/runs", dependencies=guarded)
    def list_runs() -> list[dict]:
        out = []
        for run_id in store.list_runs():
            record = store.load_run(run_id)
            rows = list(record.rows.values())
            differing = [r for r in rows if r.category == evaluation.CATEGORY_DIFFERING]
            out.append(
                {
                    "run_id": run_id,
                    "created": record.created,
                    "n_rows": len(rows),
                    "n_differing": len(differing),
                    "n_scored": sum(1 for r in differing if r.quality is not None),
                }
            )
        return out

    def _load_run_or_404(run_id: str):
        try:
            return store.load_run(run_id)
        except DataError:
            raise HTTPException(status_code=404, detail=f"unknown run {run_id}")

    @app.get("/api/runs/{run_id}/discrepancies", dependencies=guarded)
    def list_discrepancies(run_id: str) -> list[dict]:
        record = _load_run_or_404(run_id)
        out = []
        for row in record.ordered_rows():
            if row.category != evaluation.CATEGORY_DIFFERING:
                continue
            item = record.items.get(row.arxiv_id)
            flagged = {code for code, kind in row.validation_flags if kind == "unknown_code"}
            out.append(
                {
                    "arxiv_id": row.arxiv_id,
                    "link": _arxiv_link(row.arxiv_id),
                    "title": item.title if item else "",
                    "abstract": item.abstract_text if item else "",
                    "sampled_under": row.sampled_under,
                    "arxiv_codes": _top_set(row.arxiv_top_set, taxonomy),
                    "llm_primary": _annotate(row.llm_primary, taxonomy, flagged),
                    "llm_secondary": _annotate(row.llm_secondary, taxonomy, flagged),
                    "n_primary_wrong": row.n_primary_wrong,
                    "n_primary_missed": row.n_primary_missed,
                    "n_secondary_extra": row.n_secondary_extra,
                    "confidence": row.confidence,
                    "quality": row.quality,
                    "reviewer": row.reviewer,
                    "notes": row.notes,
                }
            )
        return out

    @app.post("/api/runs/{run_id}/rows/{arxiv_id}/score", dependencies=guarded)
    def submit_score(run_id: str, arxiv_id: str, submission: ScoreSubmission) -> dict:
        with write_lock:
            record = _load_run_or_404(run_id)
            row = record.rows.get(arxiv_id)
            if row is None:
                raise HTTPException(status_code=404, detail=f"unknown row {arxiv_id}")
            previous = (
                {"score": row.quality, "reviewer": row.reviewer, "notes": row.notes}
                if row.quality is not None
                else None
            )
            evaluation.attach_score(row, submission.score, submission.reviewer,
                                    submission.notes)
            store.append_event(
                run_id,
                "score_attached",
                {
                    "arxiv_id": arxiv_id,
                    "score": submission.score,
                    "reviewer": submission.reviewer,
                    "notes": submission.notes,
                    "previous": previous,
                },
            )
        return {"arxiv_id": arxiv_id, "quality": submission.score}

    @app.get("/api/runs/{run_id}/distribution", dependencies=guarded)
    def distribution(run_id: str) -> dict:
        record = _load_run_or_404(run_id)
        rows = record.ordered_rows()
        if not rows:
            return {"distribution": {}, "unscored": 0, "labels": {}}
        report = evaluation.aggregate(rows, record.reported_aggregates or None)
        return {
            "distribution": report.quality_distribution,
            "unscored": report.unscored,
            "labels": {
                evaluation.quality_key(v): evaluation.QUALITY_LABELS[v]
                for v in evaluation.QUALITY_VALUES
            },
        }

    ui_path = Path(ui_dir) if ui_dir else Path(__file__).parent / "ui"
    if ui_path.is_dir():
        app.mount("/", StaticFiles(directory=str(ui_path), html=True), name="ui")
    else:
        @app.get("/")
        def no_ui() -> dict:
            return {
                "detail": "review UI assets not built; API is live under /api",
            }

    return app
