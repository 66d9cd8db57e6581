"""Drive the exploration API the way the web client does.

Submit an asynchronous detection job, poll it to completion, fetch the
zone layer for the dot-plot, then drill into one block's highlighted
context. Uses the in-process test client; `palimpsest serve` exposes the
same endpoints over HTTP.
"""

import tempfile
import time

from fastapi.testclient import TestClient

from palimpsest import CorpusStore
from palimpsest.config import Config
from palimpsest.fixtures import fixture_pair_doc_ids, install_fixture_corpus
from palimpsest.server import create_app

store = CorpusStore(tempfile.mkdtemp(prefix="palimpsest-demo-"))
corpus = install_fixture_corpus(store, "demo")
client = TestClient(create_app(store, Config(corpus_root=store.root)))

corpora = client.get("/api/corpora").json()["corpora"]
print(f"corpora: {[c['corpus_id'] for c in corpora]}")

doc_a, doc_b = fixture_pair_doc_ids(corpus, "balzac-self")
job = client.post(
    "/api/jobs",
    json={"corpus": "demo", "a": doc_a, "b": doc_b, "params": {"nw": 3, "nh": 2, "smin": 4}},
).json()
print(f"submitted {job['job_id']} ({job['status']})")

while job["status"] not in ("done", "failed"):
    time.sleep(0.05)
    job = client.get(f"/api/jobs/{job['job_id']}").json()
print(f"finished: {job['status']}, {job['blocks']} blocks in {job['zones']} zone(s)")

zones = client.get(f"/api/reports/{job['report_id']}/zones").json()
for zone in zones["zones"]:
    print(f"  zone {zone['zone_id']}: a{zone['a_span']} × b{zone['b_span']} "
          f"density={zone['density']:.4f} blocks={len(zone['block_ids'])}")

block_id = zones["zones"][0]["block_ids"][0]
ctx = client.get(f"/api/blocks/{block_id}/context", params={"radius": 80}).json()
print(f"\ncontext for block {block_id} (strong={ctx['strong_count']}):")
for side in ("a", "b"):
    excerpt = ctx[f"{side}_excerpt"]
    out, pos = [], 0
    for s, e in ctx[f"{side}_highlights"]:
        out.append(excerpt[pos:s])
        out.append(f"[{excerpt[s:e]}]")
        pos = e
    out.append(excerpt[pos:])
    print(f"  {side.upper()}: …{''.join(out)}…".replace("\n", " "))
