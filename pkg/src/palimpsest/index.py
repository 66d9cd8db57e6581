"""Corpus-wide inverted fingerprint index.

Maps each window fingerprint to postings (document, anchor, members). The
index is immutable once built and safe for concurrent lookups. It carries
everything detection needs downstream: per-document normalized text,
content stems and token spans, plus the corpus-wide weak-stem set, so a
persisted index is self-contained.
"""

from __future__ import annotations

import hashlib
import struct
from dataclasses import dataclass, field
from pathlib import Path
from typing import Mapping, Optional, Sequence, Union

from .corpus import Corpus, manifest_digest_for, text_digest
from .pipeline import Strength, TextPipeline, VocabularyStats, classify_strength
from .windows import DetectionParams, member_offset_patterns

_MAGIC = b"PLMPIDX\n"
_FORMAT_VERSION = 1

# Posting: (doc position in sorted doc_ids, anchor, member offsets beyond anchor)
Posting = tuple[int, int, tuple[int, ...]]


class IndexingError(ValueError):
    """Raised on index build, merge or load problems."""


@dataclass
class DocEntry:
    doc_id: str
    title: str
    text: str
    digest: str
    content_stems: list[str]
    content_spans: list[tuple[int, int]]


@dataclass
class Index:
    params: DetectionParams
    corpus_digest: str
    docs: dict[str, DocEntry]
    table: dict[int, list[Posting]]
    weak_stems: frozenset[str]
    pruned: bool = False
    doc_ids: tuple[str, ...] = field(init=False)

    def __post_init__(self):
        self.doc_ids = tuple(sorted(self.docs))

    def doc_pos(self, doc_id: str) -> int:
        try:
            return self.doc_ids.index(doc_id)
        except ValueError:
            raise IndexingError(f"document {doc_id!r} is not in the index") from None

    def posting_stems(self, posting: Posting) -> tuple[str, ...]:
        doc_pos, anchor, offsets = posting
        stems = self.docs[self.doc_ids[doc_pos]].content_stems
        return (stems[anchor], *(stems[anchor + o] for o in offsets))

    def posting_members(self, posting: Posting) -> tuple[int, ...]:
        _, anchor, offsets = posting
        return (anchor, *(anchor + o for o in offsets))

    def is_strong(self, stem: str) -> bool:
        return stem not in self.weak_stems

    def stats(self) -> dict:
        return {
            "documents": len(self.docs),
            "fingerprints": len(self.table),
            "postings": sum(len(p) for p in self.table.values()),
            "weak_stems": len(self.weak_stems),
        }


def lookup(
    index: Index, fp: int, stems: Optional[Sequence[str]] = None
) -> list[Posting]:
    """Postings for a fingerprint, sorted by (doc, anchor).

    When the querying stem sequence is given, postings whose stems differ
    are discarded: hash collisions never surface as matches.
    """
    postings = index.table.get(fp, [])
    if stems is None:
        return list(postings)
    want = tuple(stems)
    return [p for p in postings if index.posting_stems(p) == want]


def build_index(
    corpus: Corpus,
    pipeline: TextPipeline,
    params: DetectionParams,
    prune_singletons: bool = False,
    strength_overrides: Optional[Mapping[str, Strength]] = None,
    weak_df: float = 0.5,
    weak_rank: int = 200,
    rank_min_freq: int = 10,
) -> Index:
    """Run the pipeline over every document and build the inverted map.

    prune_singletons drops fingerprints confined to a single document; leave
    it off when self-reuse within an author's corpus matters (the default).
    """
    n_w, n_h = params.n_w, params.n_h
    reach = params.window_reach
    full_patterns = member_offset_patterns(n_w, n_h, reach)

    docs: dict[str, DocEntry] = {}
    stats = VocabularyStats()
    for doc in corpus.documents:
        processed = pipeline.process(doc.text)
        stems = processed.content_stems
        stats.add_document(stems)
        docs[doc.doc_id] = DocEntry(
            doc_id=doc.doc_id,
            title=doc.title,
            text=doc.text,
            digest=doc.digest,
            content_stems=stems,
            content_spans=processed.content_spans,
        )

    strength = classify_strength(
        stats,
        overrides=strength_overrides,
        weak_df=weak_df,
        weak_rank=weak_rank,
        rank_min_freq=rank_min_freq,
    )
    weak = frozenset(s for s, v in strength.items() if v is Strength.WEAK)

    doc_ids = sorted(docs)
    table: dict[int, list[Posting]] = {}
    blake2b = hashlib.blake2b
    for doc_pos, doc_id in enumerate(doc_ids):
        stems = docs[doc_id].content_stems
        encoded = [s.encode("utf-8") for s in stems]
        length = len(stems)
        if length < n_w:
            continue
        for anchor in range(length):
            available = length - 1 - anchor
            patterns = (
                full_patterns
                if available >= reach
                else member_offset_patterns(n_w, n_h, available)
            )
            head = encoded[anchor]
            for offsets in patterns:
                payload = b"\x1f".join(
                    (head, *(encoded[anchor + o] for o in offsets))
                )
                fp = int.from_bytes(blake2b(payload, digest_size=8).digest(), "big")
                bucket = table.get(fp)
                if bucket is None:
                    table[fp] = [(doc_pos, anchor, offsets)]
                else:
                    bucket.append((doc_pos, anchor, offsets))

    if prune_singletons:
        table = {
            fp: postings
            for fp, postings in table.items()
            if len({p[0] for p in postings}) > 1
        }

    for postings in table.values():
        postings.sort()

    return Index(
        params=params,
        corpus_digest=corpus.manifest_digest,
        docs=docs,
        table=table,
        weak_stems=weak,
        pruned=prune_singletons,
    )


def merge(a: Index, b: Index) -> Index:
    """Merge two partial indexes built with identical parameters."""
    if (a.params.n_w, a.params.n_h) != (b.params.n_w, b.params.n_h):
        raise IndexingError(
            "parameter mismatch when merging partial indexes: "
            f"({a.params.n_w},{a.params.n_h}) vs ({b.params.n_w},{b.params.n_h})"
        )
    if a.pruned != b.pruned:
        raise IndexingError("cannot merge a pruned index with an unpruned one")
    overlap = set(a.docs) & set(b.docs)
    if overlap:
        raise IndexingError(f"documents present in both partial indexes: {sorted(overlap)}")

    docs = {**a.docs, **b.docs}
    doc_ids = sorted(docs)
    remap_a = {i: doc_ids.index(d) for i, d in enumerate(a.doc_ids)}
    remap_b = {i: doc_ids.index(d) for i, d in enumerate(b.doc_ids)}
    table: dict[int, list[Posting]] = {}
    for src, remap in ((a, remap_a), (b, remap_b)):
        for fp, postings in src.table.items():
            bucket = table.setdefault(fp, [])
            bucket.extend((remap[p[0]], p[1], p[2]) for p in postings)
    for postings in table.values():
        postings.sort()
    return Index(
        params=a.params,
        corpus_digest=manifest_digest_for((d, e.digest) for d, e in docs.items()),
        docs=docs,
        table=table,
        weak_stems=a.weak_stems | b.weak_stems,
        pruned=a.pruned,
    )


# ---------------------------------------------------------------------------
# Persistence: versioned binary format, round-trip stable.
# ---------------------------------------------------------------------------

def _pack_str(s: str) -> bytes:
    raw = s.encode("utf-8")
    return struct.pack("<I", len(raw)) + raw


def _unpack_str(buf: memoryview, pos: int) -> tuple[str, int]:
    (n,) = struct.unpack_from("<I", buf, pos)
    pos += 4
    return bytes(buf[pos : pos + n]).decode("utf-8"), pos + n


def save_index(index: Index, path: Union[str, Path]) -> None:
    parts = [
        _MAGIC,
        struct.pack(
            "<HHHB",
            _FORMAT_VERSION,
            index.params.n_w,
            index.params.n_h,
            1 if index.pruned else 0,
        ),
        struct.pack("<hi", index.params.s_min,
                    -1 if index.params.splice_gap is None else index.params.splice_gap),
        _pack_str(index.corpus_digest),
        struct.pack("<I", len(index.docs)),
    ]
    for doc_id in index.doc_ids:
        entry = index.docs[doc_id]
        parts.append(_pack_str(entry.doc_id))
        parts.append(_pack_str(entry.title))
        parts.append(_pack_str(entry.digest))
        parts.append(_pack_str(entry.text))
        parts.append(_pack_str("\x1f".join(entry.content_stems)))
        parts.append(struct.pack("<I", len(entry.content_spans)))
        parts.append(
            b"".join(struct.pack("<II", s, e) for s, e in entry.content_spans)
        )
    parts.append(_pack_str("\x1f".join(sorted(index.weak_stems))))
    parts.append(struct.pack("<I", len(index.table)))
    for fp in sorted(index.table):
        postings = index.table[fp]
        parts.append(struct.pack("<QI", fp, len(postings)))
        for doc_pos, anchor, offsets in postings:
            parts.append(struct.pack("<IIB", doc_pos, anchor, len(offsets)))
            parts.append(bytes(offsets))
    Path(path).write_bytes(b"".join(parts))


def load_index(
    path: Union[str, Path], expected_corpus_digest: Optional[str] = None
) -> Index:
    buf = memoryview(Path(path).read_bytes())
    if bytes(buf[: len(_MAGIC)]) != _MAGIC:
        raise IndexingError(f"{path} is not an index file")
    pos = len(_MAGIC)
    version, n_w, n_h, pruned = struct.unpack_from("<HHHB", buf, pos)
    pos += 7
    if version != _FORMAT_VERSION:
        raise IndexingError(f"unsupported index format version {version}")
    s_min, splice_gap = struct.unpack_from("<hi", buf, pos)
    pos += 6
    params = DetectionParams(
        n_w=n_w, n_h=n_h, s_min=s_min,
        splice_gap=None if splice_gap < 0 else splice_gap,
    )
    corpus_digest, pos = _unpack_str(buf, pos)
    if expected_corpus_digest is not None and corpus_digest != expected_corpus_digest:
        raise IndexingError(
            "stale index: it was built for a different corpus state "
            f"({corpus_digest[:12]} != {expected_corpus_digest[:12]})"
        )
    (n_docs,) = struct.unpack_from("<I", buf, pos)
    pos += 4
    docs: dict[str, DocEntry] = {}
    for _ in range(n_docs):
        doc_id, pos = _unpack_str(buf, pos)
        title, pos = _unpack_str(buf, pos)
        digest, pos = _unpack_str(buf, pos)
        text, pos = _unpack_str(buf, pos)
        joined, pos = _unpack_str(buf, pos)
        stems = joined.split("\x1f") if joined else []
        (n_spans,) = struct.unpack_from("<I", buf, pos)
        pos += 4
        spans = []
        for _ in range(n_spans):
            s, e = struct.unpack_from("<II", buf, pos)
            pos += 8
            spans.append((s, e))
        if text_digest(text) != digest:
            raise IndexingError(f"corrupt index: text digest mismatch for {doc_id}")
        docs[doc_id] = DocEntry(
            doc_id=doc_id, title=title, text=text, digest=digest,
            content_stems=stems, content_spans=spans,
        )
    joined, pos = _unpack_str(buf, pos)
    weak = frozenset(joined.split("\x1f")) if joined else frozenset()
    (n_fps,) = struct.unpack_from("<I", buf, pos)
    pos += 4
    table: dict[int, list[Posting]] = {}
    for _ in range(n_fps):
        fp, n_postings = struct.unpack_from("<QI", buf, pos)
        pos += 12
        postings: list[Posting] = []
        for _ in range(n_postings):
            doc_pos, anchor, k = struct.unpack_from("<IIB", buf, pos)
            pos += 9
            offsets = tuple(buf[pos : pos + k])
            pos += k
            postings.append((doc_pos, anchor, offsets))
        table[fp] = postings
    return Index(
        params=params,
        corpus_digest=corpus_digest,
        docs=docs,
        table=table,
        weak_stems=weak,
        pruned=bool(pruned),
    )
