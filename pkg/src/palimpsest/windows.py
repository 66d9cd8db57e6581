"""Gapped window enumeration and fingerprinting.

An elementary sequence anchors at a content word and combines it with
n_w - 1 of the following n_w - 1 + n_h content words, so up to n_h positions
may be skipped ("holes"). With n_w = 3 and n_h = 2 an anchor M1 over
M1..M5 yields exactly M1M2M3, M1M2M4, M1M2M5, M1M3M4, M1M3M5, M1M4M5.

Fingerprints hash the ordered stem sequence only; hole positions do not
enter the hash, so differently spaced windows with the same stems collide
on purpose. Windows may straddle sentence or paragraph boundaries.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Iterator, Optional, Sequence

_HASH_SEPARATOR = b"\x1f"


@dataclass(frozen=True)
class DetectionParams:
    """Tunable knobs of the detector.

    splice_gap None means "auto": n_w + n_h content tokens, one window of
    drift beyond end-to-end adjacency.
    """

    n_w: int = 3
    n_h: int = 2
    s_min: int = 4
    splice_gap: Optional[int] = None

    def __post_init__(self):
        if self.n_w < 1:
            raise ValueError("window size must be >= 1")
        if self.n_h < 0:
            raise ValueError("hole count must be >= 0")
        if self.s_min < 0:
            raise ValueError("strong-word threshold must be >= 0")
        if self.splice_gap is not None and self.splice_gap < 0:
            raise ValueError("splice gap must be >= 0")

    @property
    def effective_splice_gap(self) -> int:
        return self.n_w + self.n_h if self.splice_gap is None else self.splice_gap

    @property
    def window_reach(self) -> int:
        """Distance from anchor to the farthest possible member."""
        return self.n_w - 1 + self.n_h

    @property
    def combinations_per_anchor(self) -> int:
        return comb(self.window_reach, self.n_w - 1)

    def key(self) -> tuple:
        return (self.n_w, self.n_h, self.s_min, self.effective_splice_gap)


@dataclass(frozen=True)
class GappedWindow:
    doc_id: str
    anchor: int  # content index of the first member
    members: tuple[int, ...]  # strictly increasing, members[0] == anchor
    stems: tuple[str, ...]


def member_offset_patterns(n_w: int, n_h: int, available: int) -> list[tuple[int, ...]]:
    """All choices of n_w - 1 offsets from 1..min(reach, available)."""
    reach = min(n_w - 1 + n_h, available)
    return list(combinations(range(1, reach + 1), n_w - 1))


def enumerate_windows(
    stems: Sequence[str], n_w: int, n_h: int, doc_id: str = ""
) -> Iterator[GappedWindow]:
    """Yield every gapped window of a document's content stems.

    Interior anchors (with at least n_w - 1 + n_h following positions) emit
    exactly C(n_w - 1 + n_h, n_w - 1) windows; anchors near the end emit
    fewer or none. A document shorter than n_w yields nothing.
    """
    length = len(stems)
    if length < n_w or n_w < 1:
        return
    full = member_offset_patterns(n_w, n_h, n_w - 1 + n_h)
    for anchor in range(length):
        available = length - 1 - anchor
        if available >= n_w - 1 + n_h:
            patterns = full
        else:
            patterns = member_offset_patterns(n_w, n_h, available)
        for offsets in patterns:
            members = (anchor, *(anchor + o for o in offsets))
            yield GappedWindow(
                doc_id=doc_id,
                anchor=anchor,
                members=members,
                stems=tuple(stems[m] for m in members),
            )


def total_window_count(length: int, n_w: int, n_h: int) -> int:
    """Closed-form count of windows enumerate_windows yields."""
    if length < n_w or n_w < 1:
        return 0
    reach = n_w - 1 + n_h
    total = 0
    if length - 1 >= reach:
        total += (length - reach) * comb(reach, n_w - 1)
        tail = range(reach - 1, -1, -1)
    else:
        tail = range(length - 1, -1, -1)
    for available in tail:
        total += comb(available, n_w - 1)
    return total


def fingerprint_stems(stems: Sequence[str]) -> int:
    """Stable 64-bit hash of an ordered stem sequence.

    Identical stem sequences hash identically across runs and platforms.
    Hash collisions are possible, so lookups verify stems.
    """
    payload = _HASH_SEPARATOR.join(s.encode("utf-8") for s in stems)
    return int.from_bytes(
        hashlib.blake2b(payload, digest_size=8).digest(), "big"
    )


def fingerprint(window: GappedWindow) -> int:
    return fingerprint_stems(window.stems)
