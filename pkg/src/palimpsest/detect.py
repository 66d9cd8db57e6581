"""Reuse detection: elementary matches, spliced blocks, zones and contexts.

Elementary matches join windows with identical stem sequences across two
documents. Adjacent matches are spliced end to end into blocks, blocks are
filtered by how many distinct strong stems they cover, and surviving blocks
aggregate into the dot-plot similarity zones a reader explores.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from .index import Index, IndexingError
from .windows import DetectionParams, enumerate_windows, fingerprint

REPORT_SCHEMA_VERSION = 1

DEFAULT_ZONE_RADIUS = 200
DEFAULT_CONTEXT_RADIUS = 200


class DetectionError(ValueError):
    pass


@dataclass(frozen=True)
class ElementaryMatch:
    """One pair of windows sharing a verified fingerprint; doc_a < doc_b."""

    doc_a: str
    doc_b: str
    a_members: tuple[int, ...]
    b_members: tuple[int, ...]
    stems: tuple[str, ...]
    a_span: tuple[int, int]
    b_span: tuple[int, int]

    @property
    def a_anchor(self) -> int:
        return self.a_members[0]

    @property
    def b_anchor(self) -> int:
        return self.b_members[0]


@dataclass
class ReuseBlock:
    """A spliced run of elementary matches between two documents."""

    doc_a: str
    doc_b: str
    matches: list[ElementaryMatch]
    a_span: tuple[int, int] = (0, 0)
    b_span: tuple[int, int] = (0, 0)
    covered_stems: frozenset[str] = frozenset()
    strong_count: int = 0
    score: int = 0

    def finalize(self, weak_stems: frozenset[str]) -> "ReuseBlock":
        self.a_span = (
            min(m.a_span[0] for m in self.matches),
            max(m.a_span[1] for m in self.matches),
        )
        self.b_span = (
            min(m.b_span[0] for m in self.matches),
            max(m.b_span[1] for m in self.matches),
        )
        stems = frozenset(s for m in self.matches for s in m.stems)
        self.covered_stems = stems
        self.score = len(stems)
        self.strong_count = sum(1 for s in stems if s not in weak_stems)
        return self


@dataclass(frozen=True)
class SimilarityZone:
    """Merged rectangle of blocks in the two-document offset plane."""

    doc_a: str
    doc_b: str
    a_span: tuple[int, int]
    b_span: tuple[int, int]
    block_ids: tuple[int, ...]
    density: float


@dataclass(frozen=True)
class ContextPair:
    """Excerpts around a block with highlight spans relative to each excerpt."""

    block_id: int
    a_excerpt: str
    b_excerpt: str
    a_offset: int  # document offset where a_excerpt starts
    b_offset: int
    a_highlights: tuple[tuple[int, int], ...]
    b_highlights: tuple[tuple[int, int], ...]


def find_matches(
    index: Index,
    doc_a: str,
    doc_b: str,
    params: Optional[DetectionParams] = None,
) -> list[ElementaryMatch]:
    """All verified window matches between two distinct documents.

    Results are deduplicated on (a_members, b_members) and sorted by anchors.
    Comparing a document with itself is refused: ingest the text twice (two
    works, two doc_ids) to study self-reuse.
    """
    params = params or index.params
    if (params.n_w, params.n_h) != (index.params.n_w, index.params.n_h):
        raise IndexingError(
            f"index was built with (n_w={index.params.n_w}, n_h={index.params.n_h}), "
            f"query wants (n_w={params.n_w}, n_h={params.n_h}); rebuild the index"
        )
    if doc_a == doc_b:
        raise DetectionError(
            "cannot compare a document with itself under one doc_id; "
            "ingest the two works as separate documents"
        )
    if doc_a > doc_b:
        doc_a, doc_b = doc_b, doc_a
    pos_b = index.doc_pos(doc_b)
    entry_a = index.docs[doc_a]
    entry_b = index.docs[doc_b]
    spans_a = entry_a.content_spans
    spans_b = entry_b.content_spans

    matches: list[ElementaryMatch] = []
    seen: set[tuple[tuple[int, ...], tuple[int, ...]]] = set()
    for window in enumerate_windows(
        entry_a.content_stems, params.n_w, params.n_h, doc_id=doc_a
    ):
        postings = index.table.get(fingerprint(window))
        if not postings:
            continue
        for posting in postings:
            if posting[0] != pos_b:
                continue
            if index.posting_stems(posting) != window.stems:
                continue  # hash collision
            b_members = index.posting_members(posting)
            key = (window.members, b_members)
            if key in seen:
                continue
            seen.add(key)
            matches.append(
                ElementaryMatch(
                    doc_a=doc_a,
                    doc_b=doc_b,
                    a_members=window.members,
                    b_members=b_members,
                    stems=window.stems,
                    a_span=(spans_a[window.members[0]][0], spans_a[window.members[-1]][1]),
                    b_span=(spans_b[b_members[0]][0], spans_b[b_members[-1]][1]),
                )
            )
    matches.sort(key=lambda m: (m.a_anchor, m.b_anchor, m.a_members, m.b_members))
    return matches


def splice(
    matches: Sequence[ElementaryMatch],
    splice_gap: int,
    weak_stems: frozenset[str] = frozenset(),
) -> list[ReuseBlock]:
    """Chain matches that sit end to end in both documents into blocks.

    Greedy scan over matches sorted by (a_anchor, b_anchor): a match joins
    the open block whose tail is nearest in the b-direction among those
    within splice_gap on both axes with order preserved; otherwise it opens
    a new block. Every match lands in exactly one block; single-match blocks
    are kept (filtering decides their survival).
    """
    ordered = sorted(
        matches, key=lambda m: (m.a_anchor, m.b_anchor, m.a_members, m.b_members)
    )
    blocks: list[ReuseBlock] = []
    open_blocks: list[list] = []  # [last_a, last_b, ReuseBlock]
    for m in ordered:
        a, b = m.a_anchor, m.b_anchor
        open_blocks = [ob for ob in open_blocks if a - ob[0] <= splice_gap]
        best = None
        for ob in open_blocks:
            if 0 <= b - ob[1] <= splice_gap:
                if best is None or (ob[1], ob[0]) > (best[1], best[0]):
                    best = ob
        if best is None:
            block = ReuseBlock(doc_a=m.doc_a, doc_b=m.doc_b, matches=[m])
            blocks.append(block)
            open_blocks.append([a, b, block])
        else:
            best[2].matches.append(m)
            best[0], best[1] = a, b
    for block in blocks:
        block.finalize(weak_stems)
    return blocks


def filter_blocks(blocks: Iterable[ReuseBlock], s_min: int) -> list[ReuseBlock]:
    """Keep blocks covering at least s_min distinct strong stems."""
    return [b for b in blocks if b.strong_count >= s_min]


def _intervals_touch(x: tuple[int, int], y: tuple[int, int], radius: int) -> bool:
    return not (x[0] > y[1] + radius or y[0] > x[1] + radius)


def aggregate_zones(
    blocks: Sequence[ReuseBlock], merge_radius: int = DEFAULT_ZONE_RADIUS
) -> list[SimilarityZone]:
    """Merge block rectangles that overlap or touch within merge_radius on
    both axes into pairwise-disjoint zones."""
    if not blocks:
        return []
    doc_a, doc_b = blocks[0].doc_a, blocks[0].doc_b
    zones = [
        [list(b.a_span), list(b.b_span), [i]] for i, b in enumerate(blocks)
    ]
    merged = True
    while merged:
        merged = False
        out: list[list] = []
        for zone in zones:
            target = None
            for existing in out:
                if _intervals_touch(
                    tuple(zone[0]), tuple(existing[0]), merge_radius
                ) and _intervals_touch(tuple(zone[1]), tuple(existing[1]), merge_radius):
                    target = existing
                    break
            if target is None:
                out.append(zone)
            else:
                target[0][0] = min(target[0][0], zone[0][0])
                target[0][1] = max(target[0][1], zone[0][1])
                target[1][0] = min(target[1][0], zone[1][0])
                target[1][1] = max(target[1][1], zone[1][1])
                target[2].extend(zone[2])
                merged = True
        zones = out
    result = []
    for a_span, b_span, ids in zones:
        a_len = a_span[1] - a_span[0]
        b_len = b_span[1] - b_span[0]
        covered = max(1.0, (a_len + b_len) / 2)
        result.append(
            SimilarityZone(
                doc_a=doc_a,
                doc_b=doc_b,
                a_span=(a_span[0], a_span[1]),
                b_span=(b_span[0], b_span[1]),
                block_ids=tuple(sorted(ids)),
                density=len(ids) / covered,
            )
        )
    result.sort(key=lambda z: (z.a_span, z.b_span))
    return result


def extract_context(
    block: ReuseBlock,
    radius: int,
    index: Index,
    block_id: int = 0,
) -> ContextPair:
    """Verbatim excerpts around a block's hulls with matched-token highlights."""
    text_a = index.docs[block.doc_a].text
    text_b = index.docs[block.doc_b].text
    spans_a = index.docs[block.doc_a].content_spans
    spans_b = index.docs[block.doc_b].content_spans

    a_start = max(0, block.a_span[0] - radius)
    a_end = min(len(text_a), block.a_span[1] + radius)
    b_start = max(0, block.b_span[0] - radius)
    b_end = min(len(text_b), block.b_span[1] + radius)

    a_marks = sorted({spans_a[i] for m in block.matches for i in m.a_members})
    b_marks = sorted({spans_b[i] for m in block.matches for i in m.b_members})
    return ContextPair(
        block_id=block_id,
        a_excerpt=text_a[a_start:a_end],
        b_excerpt=text_b[b_start:b_end],
        a_offset=a_start,
        b_offset=b_start,
        a_highlights=tuple((s - a_start, e - a_start) for s, e in a_marks),
        b_highlights=tuple((s - b_start, e - b_start) for s, e in b_marks),
    )


@dataclass
class DetectionReport:
    """Everything one document-pair detection produced."""

    doc_a: str
    doc_b: str
    params: DetectionParams
    corpus_digest: str
    blocks: list[ReuseBlock] = field(default_factory=list)
    zones: list[SimilarityZone] = field(default_factory=list)

    def to_json(self, indent: Optional[int] = None) -> str:
        payload = {
            "schema_version": REPORT_SCHEMA_VERSION,
            "doc_a": self.doc_a,
            "doc_b": self.doc_b,
            "corpus_digest": self.corpus_digest,
            "params": {
                "n_w": self.params.n_w,
                "n_h": self.params.n_h,
                "s_min": self.params.s_min,
                "splice_gap": self.params.effective_splice_gap,
            },
            "blocks": [
                {
                    "block_id": i,
                    "a_span": list(b.a_span),
                    "b_span": list(b.b_span),
                    "strong_count": b.strong_count,
                    "score": b.score,
                    "matches": [
                        {
                            "a_members": list(m.a_members),
                            "b_members": list(m.b_members),
                            "stems": list(m.stems),
                            "a_span": list(m.a_span),
                            "b_span": list(m.b_span),
                        }
                        for m in b.matches
                    ],
                }
                for i, b in enumerate(self.blocks)
            ],
            "zones": [
                {
                    "zone_id": i,
                    "a_span": list(z.a_span),
                    "b_span": list(z.b_span),
                    "block_ids": list(z.block_ids),
                    "density": z.density,
                }
                for i, z in enumerate(self.zones)
            ],
        }
        return json.dumps(payload, ensure_ascii=False, indent=indent, sort_keys=True)


def detect_pair(
    index: Index,
    doc_a: str,
    doc_b: str,
    params: Optional[DetectionParams] = None,
    zone_radius: int = DEFAULT_ZONE_RADIUS,
) -> DetectionReport:
    """Full detection for one document pair: match, splice, filter, zone."""
    params = params or index.params
    if doc_a > doc_b:
        doc_a, doc_b = doc_b, doc_a
    matches = find_matches(index, doc_a, doc_b, params)
    blocks = splice(matches, params.effective_splice_gap, index.weak_stems)
    kept = filter_blocks(blocks, params.s_min)
    zones = aggregate_zones(kept, zone_radius)
    return DetectionReport(
        doc_a=doc_a,
        doc_b=doc_b,
        params=params,
        corpus_digest=index.corpus_digest,
        blocks=kept,
        zones=zones,
    )


def detect_against_corpus(
    index: Index,
    doc_a: str,
    params: Optional[DetectionParams] = None,
) -> list[DetectionReport]:
    """Detection reports for doc_a against every other indexed document."""
    return [
        detect_pair(index, doc_a, other, params)
        for other in index.doc_ids
        if other != doc_a
    ]
