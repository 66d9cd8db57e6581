"""palimpsest: detection and exploration of approximate textual reuses.

The engine indexes gapped, stemmed word-window fingerprints over a corpus,
joins shared fingerprints into elementary matches, splices them into reuse
blocks, filters the blocks by informative-word content, and aggregates them
into dot-plot zones. An evaluation harness scores detector configurations
against gold annotations with precision, recall and F(beta = 0.5).
"""

from .corpus import (
    Corpus,
    CorpusStore,
    Document,
    IngestError,
    make_document,
    normalize_text,
)
from .detect import (
    ContextPair,
    DetectionError,
    DetectionReport,
    ElementaryMatch,
    ReuseBlock,
    SimilarityZone,
    aggregate_zones,
    detect_against_corpus,
    detect_pair,
    extract_context,
    filter_blocks,
    find_matches,
    splice,
)
from .evaluate import (
    GoldSpan,
    Metrics,
    SweepResult,
    f_beta,
    load_gold,
    match_gold,
    parameter_sweep,
    render_sweep_tables,
    save_gold,
)
from .index import Index, IndexingError, build_index, load_index, lookup, merge, save_index
from .pipeline import (
    ContentToken,
    Strength,
    TextPipeline,
    Token,
    VocabularyStats,
    classify_strength,
    flag_stopwords,
    load_stoplist,
    load_strength_overrides,
    shipped_stoplist,
    tokenize,
)
from .stemming import UnsupportedLanguageError, stem, stem_english, stem_french
from .windows import (
    DetectionParams,
    GappedWindow,
    enumerate_windows,
    fingerprint,
    fingerprint_stems,
    total_window_count,
)

__version__ = "0.1.0"

__all__ = [
    "ContentToken",
    "ContextPair",
    "Corpus",
    "CorpusStore",
    "DetectionError",
    "DetectionParams",
    "DetectionReport",
    "Document",
    "ElementaryMatch",
    "GappedWindow",
    "GoldSpan",
    "Index",
    "IndexingError",
    "IngestError",
    "Metrics",
    "ReuseBlock",
    "SimilarityZone",
    "Strength",
    "SweepResult",
    "TextPipeline",
    "Token",
    "UnsupportedLanguageError",
    "VocabularyStats",
    "aggregate_zones",
    "build_index",
    "classify_strength",
    "detect_against_corpus",
    "detect_pair",
    "enumerate_windows",
    "extract_context",
    "f_beta",
    "filter_blocks",
    "find_matches",
    "fingerprint",
    "fingerprint_stems",
    "flag_stopwords",
    "load_gold",
    "load_index",
    "load_stoplist",
    "load_strength_overrides",
    "lookup",
    "make_document",
    "match_gold",
    "merge",
    "normalize_text",
    "parameter_sweep",
    "render_sweep_tables",
    "save_gold",
    "save_index",
    "shipped_stoplist",
    "splice",
    "stem",
    "stem_english",
    "stem_french",
    "tokenize",
    "total_window_count",
]
