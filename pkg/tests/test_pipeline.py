"""Tokenization, stop flagging and strength classification."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from palimpsest.pipeline import (
    Strength,
    TextPipeline,
    VocabularyStats,
    classify_strength,
    flag_stopwords,
    load_stoplist,
    load_strength_overrides,
    shipped_stoplist,
    tokenize,
)


def surfaces(tokens):
    return [t.surface for t in tokens]


def test_tokenize_simple_verse():
    tokens = tokenize("Ses rides sur son front")
    assert surfaces(tokens) == ["Ses", "rides", "sur", "son", "front"]
    assert [t.span for t in tokens] == [(0, 3), (4, 9), (10, 13), (14, 17), (18, 23)]


def test_tokenize_empty():
    assert tokenize("") == []


def test_tokenize_elision_splits_at_apostrophe():
    tokens = tokenize("l'amour de la justice")
    assert surfaces(tokens) == ["l'", "amour", "de", "la", "justice"]


def test_tokenize_typographic_apostrophe():
    assert surfaces(tokenize("l’amour")) == ["l’", "amour"]


def test_tokenize_hyphenated_compound_is_one_token():
    assert surfaces(tokenize("frappées à l'emporte-pièce")) == [
        "frappées", "à", "l'", "emporte-pièce",
    ]


def test_tokenize_digits_and_punctuation_skipped():
    tokens = tokenize("En 1832, Balzac écrit...")
    assert surfaces(tokens) == ["En", "Balzac", "écrit"]


def test_tokenize_english_keeps_contractions():
    assert surfaces(tokenize("don't fish the pond", language="en")) == [
        "don't", "fish", "the", "pond",
    ]


def test_span_reconstruction_on_sample():
    text = "« D'une main mignonne, frappée de fossettes ! » 12 fois."
    tokens = tokenize(text)
    rebuilt = []
    pos = 0
    for t in tokens:
        rebuilt.append(text[pos : t.span[0]])
        rebuilt.append(text[t.span[0] : t.span[1]])
        assert text[t.span[0] : t.span[1]] == t.surface
        pos = t.span[1]
    rebuilt.append(text[pos:])
    assert "".join(rebuilt) == text


@settings(max_examples=200, deadline=None)
@given(st.text(max_size=120))
def test_span_reconstruction_property(text):
    tokens = tokenize(text)
    pos = 0
    for t in tokens:
        assert t.span[0] >= pos, "spans must not overlap"
        assert t.span[1] > t.span[0], "spans are non-empty"
        assert text[t.span[0] : t.span[1]] == t.surface
        pos = t.span[1]


def test_flag_stopwords_french_verse():
    tokens = tokenize("Ses rides sur son front")
    flag_stopwords(tokens, shipped_stoplist("fr"))
    flags = {t.surface: t.is_stop for t in tokens}
    assert flags == {
        "Ses": True, "rides": False, "sur": True, "son": True, "front": False,
    }


def test_flag_stopwords_empty_stoplist():
    tokens = tokenize("Ses rides sur son front")
    flag_stopwords(tokens, frozenset())
    assert not any(t.is_stop for t in tokens)


def test_all_tokens_stopped_yields_empty_content_stream():
    pipeline = TextPipeline("fr", stoplist=frozenset({"ses", "rides", "sur", "son", "front"}))
    doc = pipeline.process("Ses rides sur son front")
    assert doc.content_indices == []
    assert doc.content_stems == []


def test_content_indexing_dense_and_ordered(french_pipeline, fixture_corpus):
    doc = french_pipeline.process(fixture_corpus.documents[0].text)
    content = doc.content_tokens()
    assert [c.content_index for c in content] == list(range(len(content)))
    non_stop = [t for t in doc.tokens if not t.is_stop]
    assert [c.token for c in content] == non_stop


def test_pipeline_determinism(french_pipeline):
    text = "L'amour de la justice n'est que la crainte de souffrir l'injustice."
    a = french_pipeline.process(text)
    b = french_pipeline.process(text)
    assert [(t.surface, t.span, t.is_stop, t.stem) for t in a.tokens] == [
        (t.surface, t.span, t.is_stop, t.stem) for t in b.tokens
    ]


def test_stems_nonempty_and_lowercase(french_pipeline, fixture_corpus):
    for doc in fixture_corpus.documents[:4]:
        processed = french_pipeline.process(doc.text)
        for t in processed.tokens:
            assert t.stem
            assert t.stem == t.stem.lower()


def stats_from(docs):
    stats = VocabularyStats()
    for stems in docs:
        stats.add_document(stems)
    return stats


def test_classify_maximal_frequency_weak():
    # one stem in both documents, ranked #1 with a rank floor it clears
    stats = stats_from([["roi"] * 12 + ["a", "b"], ["roi"] * 12 + ["c", "d"]])
    assert classify_strength(stats)["roi"] is Strength.WEAK


def test_classify_hapax_strong():
    stats = stats_from([["roi", "unique"], ["roi"]])
    assert classify_strength(stats)["unique"] is Strength.STRONG


def test_classify_df_ratio_rule():
    stats = stats_from(
        [["commun", "w"], ["commun", "x"], ["commun", "y"], ["commun", "z"], ["rare"]]
    )
    strength = classify_strength(stats, weak_df=0.5)
    assert strength["commun"] is Strength.WEAK  # present in 4 of 5 documents
    assert strength["rare"] is Strength.STRONG


def test_classify_df_floor_keeps_two_document_comparisons_alive():
    # in a 2-document corpus, co-occurrence is the reuse signal
    stats = stats_from([["ride", "front", "grav"], ["ride", "front", "grav"]])
    strength = classify_strength(stats)
    assert all(v is Strength.STRONG for v in strength.values())


def test_manual_override_wins():
    stats = stats_from([["brocatelle"] * 20, ["brocatelle"] * 20])
    assert classify_strength(stats)["brocatelle"] is Strength.WEAK
    forced = classify_strength(stats, overrides={"brocatelle": Strength.STRONG})
    assert forced["brocatelle"] is Strength.STRONG


def test_override_for_unknown_stem_accepted():
    stats = stats_from([["un"], ["deux"]])
    strength = classify_strength(stats, overrides={"fantome": Strength.WEAK})
    assert strength["fantome"] is Strength.WEAK


def test_rank_floor_protects_desk_scale_corpora():
    # every stem rare: frequency ranking must not mark them weak
    stats = stats_from([["aa", "bb", "cc"], ["dd", "ee", "aa"]])
    strength = classify_strength(stats)
    assert all(v is Strength.STRONG for v in strength.values())


def test_vocabulary_stats_parallel_reduction_is_exact():
    docs = [["aa", "bb"], ["bb", "cc"], ["cc", "dd", "dd"]]
    whole = stats_from(docs)
    merged = VocabularyStats.merged(stats_from([d]) for d in docs)
    assert merged.doc_count == whole.doc_count
    assert merged.doc_freq == whole.doc_freq
    assert merged.total_freq == whole.total_freq


def test_stoplist_and_override_files(tmp_path):
    sl = tmp_path / "stops.txt"
    sl.write_text("# comment\nle\nla\n\nET\n", encoding="utf-8")
    assert load_stoplist(sl) == {"le", "la", "et"}
    ov = tmp_path / "force.tsv"
    ov.write_text("brocatelle\tSTRONG\nchose\tweak\n", encoding="utf-8")
    overrides = load_strength_overrides(ov)
    assert overrides == {"brocatelle": Strength.STRONG, "chose": Strength.WEAK}
    bad = tmp_path / "bad.tsv"
    bad.write_text("sans tabulation\n", encoding="utf-8")
    with pytest.raises(ValueError, match="bad.tsv:1"):
        load_strength_overrides(bad)


def test_unsupported_language_fails_at_construction():
    with pytest.raises(Exception, match="no stemmer"):
        TextPipeline("de")
