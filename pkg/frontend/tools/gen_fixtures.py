"""Freeze real API payloads for the frontend test suite.

Runs the Python backend in-process against the bundled demo corpus and
captures every payload the explorer consumes: the corpora listing, document
texts, and jobs (with zones and per-block contexts) across several parameter
settings. The capture asserts the invariants the UI tests rely on, so a
regression in the backend fails here rather than silently rotting fixtures.

Usage: python3 frontend/tools/gen_fixtures.py
"""

import json
import sys
import tempfile
import time
from pathlib import Path

from fastapi.testclient import TestClient

from palimpsest import CorpusStore
from palimpsest.config import Config
from palimpsest.fixtures import fixture_pair_doc_ids, install_fixture_corpus
from palimpsest.server import create_app

OUT = Path(__file__).parent.parent / "tests" / "fixtures" / "api_fixtures.json"


def wait_done(client, job_id):
    for _ in range(600):
        payload = client.get(f"/api/jobs/{job_id}").json()
        if payload["status"] in ("done", "failed"):
            assert payload["status"] == "done", payload
            return payload
        time.sleep(0.02)
    raise RuntimeError("job did not finish")


def capture_job(client, corpus_id, doc_a, doc_b, params):
    job = client.post(
        "/api/jobs",
        json={"corpus": corpus_id, "a": doc_a, "b": doc_b, "params": params},
    ).json()
    done = wait_done(client, job["job_id"])
    zones = client.get(f"/api/reports/{done['report_id']}/zones").json()
    contexts = {}
    for zone in zones["zones"]:
        for block_id in zone["block_ids"]:
            contexts[block_id] = client.get(
                f"/api/blocks/{block_id}/context", params={"radius": 200}
            ).json()
    return {
        "request": {"a": doc_a, "b": doc_b, "params": params},
        "job": done,
        "zones": zones,
        "contexts": contexts,
    }


def main() -> int:
    store = CorpusStore(tempfile.mkdtemp(prefix="palimpsest-fixtures-"))
    corpus = install_fixture_corpus(store, "demo")
    client = TestClient(create_app(store, Config(corpus_root=store.root)))

    corpora = client.get("/api/corpora").json()

    doc_texts = {}
    for doc in corpus.documents:
        payload = client.get(f"/api/corpora/demo/docs/{doc.doc_id}").json()
        doc_texts[doc.doc_id] = payload

    jobs = []
    verse = fixture_pair_doc_ids(corpus, "corneille-racine")
    stanza = fixture_pair_doc_ids(corpus, "boileau-cid")
    maxim = fixture_pair_doc_ids(corpus, "maxime-courage")
    balzac = fixture_pair_doc_ids(corpus, "balzac-self")

    jobs.append(capture_job(client, "demo", *verse,
                            {"nw": 3, "nh": 2, "smin": 4, "splice_gap": "auto"}))
    jobs.append(capture_job(client, "demo", *balzac,
                            {"nw": 3, "nh": 2, "smin": 4, "splice_gap": "auto"}))

    # raising s_min must never add zones (1, 1, 0 on the stanza pair)
    smin_zone_counts = []
    for smin in (4, 7, 9):
        entry = capture_job(client, "demo", *stanza,
                            {"nw": 3, "nh": 2, "smin": smin, "splice_gap": "auto"})
        smin_zone_counts.append(len(entry["zones"]["zones"]))
        jobs.append(entry)
    assert smin_zone_counts == sorted(smin_zone_counts, reverse=True), smin_zone_counts
    assert smin_zone_counts[0] > smin_zone_counts[-1], smin_zone_counts

    # raising n_h at fixed n_w must not lose matched pairs
    match_counts = []
    for nh in (0, 2):
        entry = capture_job(client, "demo", *maxim,
                            {"nw": 3, "nh": nh, "smin": 0, "splice_gap": "auto"})
        match_counts.append(entry["job"]["matches"])
        jobs.append(entry)
    assert match_counts[0] <= match_counts[1], match_counts

    # a corpora listing with a different digest, for the staleness prompt
    store.ingest("Un document de plus pour changer le manifeste du corpus.".encode(),
                 corpus_id="demo", title="ajout tardif")
    corpora_changed = client.get("/api/corpora").json()
    assert (corpora_changed["corpora"][0]["manifest_digest"]
            != corpora["corpora"][0]["manifest_digest"])

    OUT.parent.mkdir(parents=True, exist_ok=True)
    OUT.write_text(
        json.dumps(
            {
                "corpora": corpora,
                "corporaChanged": corpora_changed,
                "docTexts": doc_texts,
                "jobs": jobs,
                "pairs": {
                    "verse": list(verse),
                    "stanza": list(stanza),
                    "maxim": list(maxim),
                    "balzac": list(balzac),
                },
            },
            ensure_ascii=False,
            indent=1,
            sort_keys=True,
        ),
        encoding="utf-8",
    )
    print(f"wrote {OUT} ({OUT.stat().st_size:,} bytes, {len(jobs)} jobs)")
    return 0


if __name__ == "__main__":
    sys.exit(main())
