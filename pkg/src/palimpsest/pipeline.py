"""Tokenization, stop-word flagging, stemming and strength classification.

Turns a document into a stream of positioned content tokens. Stop words are
flagged rather than deleted so display code keeps the original positions;
every window operation downstream runs on the content (non-stop) stream.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from enum import Enum
from importlib import resources
from pathlib import Path
from typing import Iterable, Mapping, Optional, Sequence, Union

from .stemming import stemmer_for


class Strength(Enum):
    STRONG = "STRONG"
    WEAK = "WEAK"


@dataclass
class Token:
    surface: str
    span: tuple[int, int]  # code-point offsets into the document text
    is_stop: bool = False
    stem: str = ""
    strength: Optional[Strength] = None


@dataclass(frozen=True)
class ContentToken:
    content_index: int  # dense 0-based position among non-stop tokens
    token: Token


# Letter runs may contain internal hyphens ("emporte-pièce" is one token).
# French elisions split at the apostrophe: "l'amour" -> "l'" + "amour",
# the apostrophe staying with the elided article.
_FR_TOKEN_RE = re.compile(r"[^\W\d_]+(?:-[^\W\d_]+)*(?:['’](?=[^\W\d_]))?")
# English keeps apostrophes inside the word ("don't" is one token).
_EN_TOKEN_RE = re.compile(r"[^\W\d_]+(?:['’-][^\W\d_]+)*")


def tokenize(text: str, language: str = "fr") -> list[Token]:
    """Split text into surface tokens with exact character spans.

    Punctuation, digits and whitespace are never tokens but their offsets
    are preserved: slicing the text at each span reproduces the surface.
    """
    pattern = _EN_TOKEN_RE if language.lower().startswith("en") else _FR_TOKEN_RE
    return [
        Token(surface=m.group(0), span=(m.start(), m.end()))
        for m in pattern.finditer(text)
    ]


def load_stoplist(path: Union[str, Path]) -> frozenset[str]:
    """One lowercase surface form per line; blank lines and # comments skipped."""
    words = set()
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if line and not line.startswith("#"):
                words.add(line.lower())
    return frozenset(words)


def shipped_stoplist(language: str) -> frozenset[str]:
    lang = "en" if language.lower().startswith("en") else "fr"
    data = resources.files("palimpsest.data").joinpath(f"stopwords_{lang}.txt")
    words = set()
    for line in data.read_text(encoding="utf-8").splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            words.add(line.lower())
    return frozenset(words)


def flag_stopwords(tokens: Sequence[Token], stoplist: frozenset[str]) -> Sequence[Token]:
    """Set is_stop on each token; no token is removed."""
    for token in tokens:
        token.is_stop = token.surface.lower() in stoplist
    return tokens


@dataclass
class VocabularyStats:
    """Per-stem document frequency and total frequency over a reference corpus."""

    doc_count: int = 0
    doc_freq: dict[str, int] = field(default_factory=dict)
    total_freq: dict[str, int] = field(default_factory=dict)

    def add_document(self, content_stems: Iterable[str]) -> None:
        self.doc_count += 1
        seen = set()
        for s in content_stems:
            self.total_freq[s] = self.total_freq.get(s, 0) + 1
            seen.add(s)
        for s in seen:
            self.doc_freq[s] = self.doc_freq.get(s, 0) + 1

    @classmethod
    def merged(cls, parts: Iterable["VocabularyStats"]) -> "VocabularyStats":
        out = cls()
        for part in parts:
            out.doc_count += part.doc_count
            for s, n in part.doc_freq.items():
                out.doc_freq[s] = out.doc_freq.get(s, 0) + n
            for s, n in part.total_freq.items():
                out.total_freq[s] = out.total_freq.get(s, 0) + n
        return out


def classify_strength(
    stats: VocabularyStats,
    overrides: Optional[Mapping[str, Strength]] = None,
    weak_df: float = 0.5,
    weak_rank: int = 200,
    rank_min_freq: int = 10,
    df_floor_docs: int = 4,
) -> dict[str, Strength]:
    """Classify every known stem as STRONG or WEAK.

    A stem is WEAK when its document-frequency ratio exceeds weak_df, or when
    it sits among the weak_rank most frequent content stems. Two guards keep
    the rules meaningful on small corpora: only stems seen at least
    rank_min_freq times compete in the frequency ranking, and the df ratio is
    taken against max(doc_count, df_floor_docs). In a two-document corpus,
    presence in both documents is the reuse signal itself, not evidence that
    a word is uninformative. Overrides win unconditionally and may name stems
    the corpus has never produced.
    """
    ranked = sorted(
        (s for s, n in stats.total_freq.items() if n >= rank_min_freq),
        key=lambda s: (-stats.total_freq[s], s),
    )
    top = set(ranked[:weak_rank])
    denominator = max(stats.doc_count, df_floor_docs)
    result: dict[str, Strength] = {}
    for s in stats.total_freq:
        ratio = stats.doc_freq.get(s, 0) / denominator if denominator else 0.0
        weak = ratio > weak_df or s in top
        result[s] = Strength.WEAK if weak else Strength.STRONG
    if overrides:
        result.update(overrides)
    return result


def load_strength_overrides(path: Union[str, Path]) -> dict[str, Strength]:
    """Tab-separated override file: `stem<TAB>STRONG|WEAK` per line."""
    overrides: dict[str, Strength] = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            try:
                stem, value = line.split("\t")
                overrides[stem] = Strength[value.strip().upper()]
            except (ValueError, KeyError) as exc:
                raise ValueError(f"{path}:{lineno}: expected 'stem<TAB>STRONG|WEAK'") from exc
    return overrides


@dataclass
class DocTokens:
    """Pipeline output for one document."""

    tokens: list[Token]
    content_indices: list[int]  # indices into tokens, in order

    @property
    def content_stems(self) -> list[str]:
        return [self.tokens[i].stem for i in self.content_indices]

    @property
    def content_spans(self) -> list[tuple[int, int]]:
        return [self.tokens[i].span for i in self.content_indices]

    def content_tokens(self) -> list[ContentToken]:
        return [
            ContentToken(content_index=ci, token=self.tokens[ti])
            for ci, ti in enumerate(self.content_indices)
        ]


class TextPipeline:
    """Deterministic text preparation: tokenize, flag stops, stem.

    Pure given (language, stoplist); documents may be processed in parallel.
    A per-surface stem cache keeps indexing throughput linear in distinct
    vocabulary rather than token count.
    """

    def __init__(self, language: str = "fr", stoplist: Optional[frozenset[str]] = None):
        self.language = language
        self.stoplist = shipped_stoplist(language) if stoplist is None else stoplist
        self._stem_one = stemmer_for(language)  # raises for unsupported tags
        self._cache: dict[str, str] = {}

    def stem(self, surface: str) -> str:
        folded = surface.lower()
        cached = self._cache.get(folded)
        if cached is None:
            cached = self._stem_one(folded.rstrip("'’") or folded)
            self._cache[folded] = cached
        return cached

    def process(self, text: str) -> DocTokens:
        tokens = tokenize(text, self.language)
        flag_stopwords(tokens, self.stoplist)
        content_indices = []
        for i, token in enumerate(tokens):
            token.stem = self.stem(token.surface)
            if not token.is_stop:
                content_indices.append(i)
        return DocTokens(tokens=tokens, content_indices=content_indices)

    def apply_strength(self, doc: DocTokens, strength: Mapping[str, Strength]) -> None:
        """Annotate non-stop tokens; strength stays undefined for stop tokens."""
        for i in doc.content_indices:
            token = doc.tokens[i]
            token.strength = strength.get(token.stem, Strength.STRONG)
