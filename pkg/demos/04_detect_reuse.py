"""End-to-end detection over the demo corpus.

Shared fingerprints become elementary matches, adjacent matches splice into
blocks, weak-only blocks are filtered away, surviving blocks merge into
dot-plot zones, and each block can be rendered in context with its matched
tokens highlighted.
"""

import tempfile

from palimpsest import (
    CorpusStore,
    DetectionParams,
    TextPipeline,
    build_index,
    detect_pair,
    extract_context,
)
from palimpsest.fixtures import FIXTURE_PAIRS, fixture_pair_doc_ids, install_fixture_corpus

store = CorpusStore(tempfile.mkdtemp(prefix="palimpsest-demo-"))
corpus = install_fixture_corpus(store, "demo")
params = DetectionParams(n_w=3, n_h=2, s_min=4)
index = build_index(corpus, TextPipeline("fr"), params)
print("index:", index.stats(), "\n")


def show(excerpt, highlights):
    out, pos = [], 0
    for s, e in highlights:
        out.append(excerpt[pos:s])
        out.append(f"[{excerpt[s:e]}]")
        pos = e
    out.append(excerpt[pos:])
    return "".join(out).replace("\n", " ")


for pair in FIXTURE_PAIRS:
    doc_a, doc_b = fixture_pair_doc_ids(corpus, pair.pair_id)
    report = detect_pair(index, doc_a, doc_b, params)
    print(f"== {pair.label}")
    print(f"   {len(report.blocks)} block(s), {len(report.zones)} zone(s)")
    for i, block in enumerate(report.blocks[:2]):
        print(f"   block {i}: a{block.a_span} b{block.b_span} "
              f"strong={block.strong_count} score={block.score} "
              f"matches={len(block.matches)}")
    if report.blocks:
        ctx = extract_context(report.blocks[0], 60, index)
        print(f"   A: …{show(ctx.a_excerpt, ctx.a_highlights)}…")
        print(f"   B: …{show(ctx.b_excerpt, ctx.b_highlights)}…")
    print()
