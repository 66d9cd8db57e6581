"""HTTP API backing the interactive explorer.

Jobs are asynchronous: POST /api/jobs returns immediately and the client
polls GET /api/jobs/<id> until the status reaches done. Reports are cached
by (corpus digest, params, doc pair), so identical requests return
byte-identical payloads without recomputation. At most one index build per
corpus runs at a time; detection jobs share a bounded worker pool.
"""

from __future__ import annotations

import hashlib
import json
import threading
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Optional, Union

from fastapi import FastAPI, HTTPException, Query
from fastapi.responses import Response
from pydantic import BaseModel, Field

from .config import Config
from .corpus import CorpusStore, IngestError
from .detect import (
    DEFAULT_CONTEXT_RADIUS,
    DetectionError,
    DetectionReport,
    detect_pair,
    extract_context,
)
from .index import Index, build_index
from .pipeline import TextPipeline, load_stoplist, load_strength_overrides
from .windows import DetectionParams

API_SCHEMA_VERSION = 1


class JobParams(BaseModel):
    nw: int = 3
    nh: int = 2
    smin: int = 4
    splice_gap: Union[int, str, None] = Field(default="auto")

    def to_params(self) -> DetectionParams:
        gap = self.splice_gap
        if gap is None or (isinstance(gap, str) and gap.lower() == "auto"):
            gap = None
        else:
            gap = int(gap)
        return DetectionParams(n_w=self.nw, n_h=self.nh, s_min=self.smin, splice_gap=gap)


class JobRequest(BaseModel):
    corpus: str
    a: str
    b: str
    params: JobParams = Field(default_factory=JobParams)


@dataclass
class JobRecord:
    job_id: str
    corpus_id: str
    doc_a: str
    doc_b: str
    params: DetectionParams
    status: str = "pending"  # pending -> running -> done | failed
    report_id: Optional[str] = None
    error: Optional[str] = None
    zone_count: Optional[int] = None
    block_count: Optional[int] = None
    match_count: Optional[int] = None


@dataclass
class _ReportEntry:
    report: DetectionReport
    payload: bytes
    index: Index


@dataclass
class ExplorerState:
    store: CorpusStore
    config: Config
    executor: ThreadPoolExecutor = field(
        default_factory=lambda: ThreadPoolExecutor(max_workers=2)
    )
    jobs: dict = field(default_factory=dict)
    reports: dict = field(default_factory=dict)  # report_id -> _ReportEntry
    report_cache: dict = field(default_factory=dict)  # cache key -> report_id
    index_cache: dict = field(default_factory=dict)  # (digest, nw, nh) -> Index
    compute_count: int = 0  # detections actually run (cache observability)
    _lock: threading.Lock = field(default_factory=threading.Lock)
    _corpus_locks: dict = field(default_factory=dict)
    _job_seq: int = 0

    def corpus_lock(self, corpus_id: str) -> threading.Lock:
        with self._lock:
            return self._corpus_locks.setdefault(corpus_id, threading.Lock())

    def next_job_id(self) -> str:
        with self._lock:
            self._job_seq += 1
            return f"job-{self._job_seq}"

    def make_pipeline(self) -> TextPipeline:
        stoplist = None
        if self.config.stoplist_path:
            stoplist = load_stoplist(self.config.stoplist_path)
        return TextPipeline(language=self.config.language, stoplist=stoplist)

    def get_index(self, corpus_id: str, params: DetectionParams) -> Index:
        corpus = self.store.load_corpus(corpus_id)
        key = (corpus.manifest_digest, params.n_w, params.n_h)
        with self._lock:
            cached = self.index_cache.get(key)
        if cached is not None:
            return cached
        # serialize builds per corpus; re-check the cache once inside
        with self.corpus_lock(corpus_id):
            with self._lock:
                cached = self.index_cache.get(key)
            if cached is not None:
                return cached
            overrides = None
            if self.config.strength_overrides_path:
                overrides = load_strength_overrides(self.config.strength_overrides_path)
            index = build_index(
                corpus,
                self.make_pipeline(),
                params,
                strength_overrides=overrides,
                weak_df=self.config.weak_df,
                weak_rank=self.config.weak_rank,
                rank_min_freq=self.config.rank_min_freq,
            )
            with self._lock:
                self.index_cache[key] = index
            return index

    def run_job(self, job: JobRecord) -> None:
        job.status = "running"
        try:
            index = self.get_index(job.corpus_id, job.params)
            cache_key = (
                index.corpus_digest,
                job.params.key(),
                job.doc_a,
                job.doc_b,
            )
            with self._lock:
                report_id = self.report_cache.get(cache_key)
            if report_id is None:
                report = detect_pair(index, job.doc_a, job.doc_b, job.params)
                payload = report.to_json().encode("utf-8")
                report_id = hashlib.sha256(
                    json.dumps(
                        [index.corpus_digest, list(job.params.key()), job.doc_a, job.doc_b]
                    ).encode("utf-8")
                ).hexdigest()[:16]
                with self._lock:
                    self.compute_count += 1
                    self.reports[report_id] = _ReportEntry(
                        report=report, payload=payload, index=index
                    )
                    self.report_cache[cache_key] = report_id
            entry = self.reports[report_id]
            job.report_id = report_id
            job.zone_count = len(entry.report.zones)
            job.block_count = len(entry.report.blocks)
            job.match_count = sum(len(b.matches) for b in entry.report.blocks)
            job.status = "done"
        except (IngestError, DetectionError, KeyError, ValueError) as exc:
            job.status = "failed"
            job.error = str(exc)


def _job_payload(job: JobRecord) -> dict:
    payload = {
        "schema_version": API_SCHEMA_VERSION,
        "job_id": job.job_id,
        "corpus": job.corpus_id,
        "a": job.doc_a,
        "b": job.doc_b,
        "params": {
            "nw": job.params.n_w,
            "nh": job.params.n_h,
            "smin": job.params.s_min,
            "splice_gap": job.params.effective_splice_gap,
        },
        "status": job.status,
    }
    if job.report_id is not None:
        payload["report_id"] = job.report_id
        payload["zones"] = job.zone_count
        payload["blocks"] = job.block_count
        payload["matches"] = job.match_count
    if job.error is not None:
        payload["error"] = job.error
    return payload


def create_app(store: CorpusStore, config: Optional[Config] = None) -> FastAPI:
    state = ExplorerState(store=store, config=config or Config())
    app = FastAPI(title="palimpsest explorer API")
    app.state.explorer = state

    @app.get("/api/corpora")
    def list_corpora():
        corpora = []
        for corpus_id in store.list_corpora():
            corpus = store.load_corpus(corpus_id)
            corpora.append(
                {
                    "corpus_id": corpus_id,
                    "manifest_digest": corpus.manifest_digest,
                    "documents": [
                        {
                            "doc_id": d.doc_id,
                            "title": d.title,
                            "author": d.author,
                            "char_count": d.char_count,
                        }
                        for d in corpus.documents
                    ],
                }
            )
        return {"schema_version": API_SCHEMA_VERSION, "corpora": corpora}

    @app.get("/api/corpora/{corpus_id}/docs/{doc_id}")
    def doc_slice(
        corpus_id: str,
        doc_id: str,
        start: int = Query(0, alias="from", ge=0),
        to: Optional[int] = Query(None, ge=0),
    ):
        try:
            doc = store.load_document(corpus_id, doc_id)
        except (IngestError, KeyError) as exc:
            raise HTTPException(status_code=404, detail=str(exc))
        end = doc.char_count if to is None else min(to, doc.char_count)
        start = min(start, end)
        return {
            "schema_version": API_SCHEMA_VERSION,
            "doc_id": doc.doc_id,
            "title": doc.title,
            "char_count": doc.char_count,
            "from": start,
            "to": end,
            "text": doc.text[start:end],
        }

    @app.post("/api/jobs", status_code=202)
    def submit_job(req: JobRequest):
        try:
            params = req.params.to_params()
        except ValueError as exc:
            raise HTTPException(status_code=422, detail=str(exc))
        try:
            corpus = store.load_corpus(req.corpus)
        except IngestError as exc:
            raise HTTPException(status_code=404, detail=str(exc))
        known = set(corpus.doc_ids())
        for ref in (req.a, req.b):
            if ref not in known:
                raise HTTPException(status_code=404, detail=f"unknown document {ref!r}")
        if req.a == req.b:
            raise HTTPException(
                status_code=422,
                detail="cannot compare a document with itself; ingest it twice",
            )
        job = JobRecord(
            job_id=state.next_job_id(),
            corpus_id=req.corpus,
            doc_a=min(req.a, req.b),
            doc_b=max(req.a, req.b),
            params=params,
        )
        state.jobs[job.job_id] = job
        state.executor.submit(state.run_job, job)
        return _job_payload(job)

    @app.get("/api/jobs/{job_id}")
    def job_status(job_id: str):
        job = state.jobs.get(job_id)
        if job is None:
            raise HTTPException(status_code=404, detail=f"unknown job {job_id!r}")
        return _job_payload(job)

    @app.get("/api/reports/{report_id}")
    def report_body(report_id: str):
        entry = state.reports.get(report_id)
        if entry is None:
            raise HTTPException(status_code=404, detail=f"unknown report {report_id!r}")
        return Response(content=entry.payload, media_type="application/json")

    @app.get("/api/reports/{report_id}/zones")
    def report_zones(report_id: str):
        entry = state.reports.get(report_id)
        if entry is None:
            raise HTTPException(status_code=404, detail=f"unknown report {report_id!r}")
        report = entry.report
        return {
            "schema_version": API_SCHEMA_VERSION,
            "report_id": report_id,
            "doc_a": report.doc_a,
            "doc_b": report.doc_b,
            "a_char_count": len(entry.index.docs[report.doc_a].text),
            "b_char_count": len(entry.index.docs[report.doc_b].text),
            "zones": [
                {
                    "zone_id": i,
                    "a_span": list(z.a_span),
                    "b_span": list(z.b_span),
                    "block_ids": [f"{report_id}.{b}" for b in z.block_ids],
                    "density": z.density,
                }
                for i, z in enumerate(report.zones)
            ],
        }

    @app.get("/api/blocks/{block_id}/context")
    def block_context(block_id: str, radius: int = Query(DEFAULT_CONTEXT_RADIUS, ge=0)):
        report_id, _, block_no = block_id.partition(".")
        entry = state.reports.get(report_id)
        if entry is None or not block_no.isdigit():
            raise HTTPException(status_code=404, detail=f"unknown block {block_id!r}")
        number = int(block_no)
        if number >= len(entry.report.blocks):
            raise HTTPException(status_code=404, detail=f"unknown block {block_id!r}")
        block = entry.report.blocks[number]
        ctx = extract_context(block, radius, entry.index, block_id=number)
        return {
            "schema_version": API_SCHEMA_VERSION,
            "block_id": block_id,
            "doc_a": block.doc_a,
            "doc_b": block.doc_b,
            "strong_count": block.strong_count,
            "score": block.score,
            "a_span": list(block.a_span),
            "b_span": list(block.b_span),
            "a_excerpt": ctx.a_excerpt,
            "b_excerpt": ctx.b_excerpt,
            "a_offset": ctx.a_offset,
            "b_offset": ctx.b_offset,
            "a_highlights": [list(h) for h in ctx.a_highlights],
            "b_highlights": [list(h) for h in ctx.b_highlights],
        }

    return app
