"""Build the bundled demo corpus and look at what ingestion stores.

Every document gets a content-derived identity, normalized text, and an
entry in the corpus manifest; re-ingesting the same bytes is a no-op.
"""

import json
import tempfile
from pathlib import Path

from palimpsest import CorpusStore, normalize_text
from palimpsest.fixtures import install_fixture_corpus

root = Path(tempfile.mkdtemp(prefix="palimpsest-demo-"))
store = CorpusStore(root)
corpus = install_fixture_corpus(store, "demo")

print(f"corpus root: {root}")
print(f"{len(corpus.documents)} documents, manifest digest {corpus.manifest_digest[:16]}…\n")
for doc in corpus.documents:
    print(f"  {doc.doc_id:44} {doc.char_count:5d} chars  {doc.author}")

manifest = json.loads((root / "demo" / "manifest.json").read_text(encoding="utf-8"))
print("\nmanifest entry for the first document:")
print(json.dumps(manifest["documents"][0], ensure_ascii=False, indent=2))

print("\nnormalization: CRLF unified, NFC composition, controls dropped, case kept:")
raw = b"Le Cid\r\nacte I, sce\xcc\x80ne 4\x00"
print(f"  raw bytes: {raw!r}")
print(f"  normalized: {normalize_text(raw)!r}")

again = store.ingest(
    corpus.documents[0].text.encode("utf-8"),
    corpus_id="demo",
    title=corpus.documents[0].title,
)
print(f"\nre-ingesting an identical document returns the same id: {again.doc_id}")
