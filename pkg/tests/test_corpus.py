"""Ingestion, normalization and corpus-store round trips."""

import json
import unicodedata

import pytest

from palimpsest.corpus import (
    CorpusStore,
    IngestError,
    derive_doc_id,
    make_document,
    normalize_text,
    text_digest,
)


def test_line_endings_unified():
    assert normalize_text(b"Le Cid\r\n") == "Le Cid\n"
    assert normalize_text("a\rb\r\nc") == "a\nb\nc"


def test_idempotent_on_normalized_text():
    text = normalize_text("Déjà vu\navec tabulation\there")
    assert normalize_text(text) == text


def test_composes_decomposed_accents():
    decomposed = "été"  # e + combining acute, twice
    expected = unicodedata.normalize("NFC", decomposed)
    assert normalize_text(decomposed) == expected == "été"


def test_control_characters_removed_but_tabs_kept():
    assert normalize_text("a\x00b\x0cc\td\n") == "abc\td\n"


def test_case_and_punctuation_preserved():
    raw = "« Ô Rage ! » dit-il."
    assert normalize_text(raw) == raw


def test_undecodable_bytes_name_the_offset():
    with pytest.raises(IngestError, match="offset 3"):
        normalize_text(b"abc\xff\xfe", encoding="utf-8")


def test_legacy_encoding_hint():
    assert normalize_text("café".encode("latin-1"), encoding="latin-1") == "café"


def test_char_count_in_code_points():
    doc = make_document("héros\n", title="t")
    assert doc.char_count == len("héros\n") == 6


def test_doc_id_content_derived():
    digest = text_digest("same text")
    assert derive_doc_id(digest, "A Title") == derive_doc_id(digest, "A Title")
    assert derive_doc_id(digest, "A Title") != derive_doc_id(digest, "Other")


def test_reingest_identical_content_returns_same_doc(tmp_path):
    store = CorpusStore(tmp_path)
    d1 = store.ingest(b"Un texte simple.", corpus_id="c", title="t")
    d2 = store.ingest(b"Un texte simple.", corpus_id="c", title="t")
    assert d1.doc_id == d2.doc_id
    assert len(store.load_corpus("c").documents) == 1


def test_same_text_different_titles_distinct_ids(tmp_path):
    store = CorpusStore(tmp_path)
    d1 = store.ingest(b"Texte partage.", corpus_id="c", title="un")
    d2 = store.ingest(b"Texte partage.", corpus_id="c", title="deux")
    assert d1.digest == d2.digest
    assert d1.doc_id != d2.doc_id


def test_duplicate_title_different_content_warns_keeps_both(tmp_path, caplog):
    store = CorpusStore(tmp_path)
    store.ingest(b"premier contenu", corpus_id="c", title="t")
    with caplog.at_level("WARNING"):
        store.ingest(b"second contenu", corpus_id="c", title="t")
    assert any("keeping both" in r.message for r in caplog.records)
    assert len(store.load_corpus("c").documents) == 2


def test_empty_document_rejected(tmp_path):
    store = CorpusStore(tmp_path)
    with pytest.raises(IngestError, match="empty document"):
        store.ingest(b"   \n", corpus_id="c", title="vide")


def test_round_trip_byte_identical(tmp_path):
    store = CorpusStore(tmp_path)
    text = "Ligne une.\n\tLigne deux, avec accents : éàü.\n"
    doc = store.ingest(text.encode("utf-8"), corpus_id="c", title="rt")
    loaded = store.load_corpus("c").get(doc.doc_id)
    assert loaded.text == doc.text == text


def test_documents_sorted_and_manifest_digest_tracks_membership(tmp_path):
    store = CorpusStore(tmp_path)
    store.ingest(b"bbb contenu", corpus_id="c", title="zeta")
    first = store.load_corpus("c")
    store.ingest(b"aaa contenu", corpus_id="c", title="alpha")
    second = store.load_corpus("c")
    ids = second.doc_ids()
    assert ids == sorted(ids)
    assert first.manifest_digest != second.manifest_digest


def test_manifest_layout_on_disk(tmp_path):
    store = CorpusStore(tmp_path)
    doc = store.ingest(b"contenu disque", corpus_id="mon-corpus", title="t")
    assert (tmp_path / "mon-corpus" / "docs" / f"{doc.doc_id}.txt").is_file()
    manifest = json.loads(
        (tmp_path / "mon-corpus" / "manifest.json").read_text(encoding="utf-8")
    )
    entry = manifest["documents"][0]
    assert {"doc_id", "title", "author", "digest", "char_count"} <= set(entry)
