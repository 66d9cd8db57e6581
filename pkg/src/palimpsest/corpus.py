"""Document ingestion and corpus storage.

A corpus is a directory of normalized UTF-8 text files plus a JSON manifest:

    <root>/<corpus_id>/docs/<doc_id>.txt
    <root>/<corpus_id>/manifest.json

Document identities are content-derived (digest of the normalized text plus
the title), so re-ingesting identical content is a no-op and every offset
quoted downstream indexes into the exact text stored here. All offsets are
scalar code-point indices, never byte indices.
"""

from __future__ import annotations

import hashlib
import json
import logging
import re
import threading
import unicodedata
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Optional, Union

logger = logging.getLogger(__name__)

MANIFEST_SCHEMA_VERSION = 1

# Unicode Cc controls minus "\n" (x0A) and "\t" (x09); "\r" is gone by the
# time this runs because line endings are unified first.
_CONTROL_RE = re.compile("[\x00-\x08\x0b\x0c\x0e-\x1f\x7f-\x9f]")
_SLUG_RE = re.compile(r"[^a-z0-9]+")


class IngestError(ValueError):
    """Raised when a document cannot be ingested."""


def normalize_text(raw: Union[bytes, str], encoding: Optional[str] = None) -> str:
    """Decode and normalize raw document content.

    Output is NFC-composed, uses "\\n" line endings only, and contains no
    control characters other than "\\n" and "\\t". Case and punctuation are
    preserved so context display stays faithful to the source. Idempotent.
    """
    if isinstance(raw, bytes):
        raw = raw.removeprefix(b"\xef\xbb\xbf")
        try:
            text = raw.decode(encoding or "utf-8")
        except (UnicodeDecodeError, LookupError) as exc:
            if isinstance(exc, UnicodeDecodeError):
                raise IngestError(
                    f"undecodable byte at offset {exc.start} ({exc.reason})"
                ) from exc
            raise IngestError(f"unknown encoding {encoding!r}") from exc
    else:
        text = raw
    text = text.replace("\r\n", "\n").replace("\r", "\n")
    text = _CONTROL_RE.sub("", text)
    text = text.replace("﻿", "")
    return unicodedata.normalize("NFC", text)


def text_digest(text: str) -> str:
    return hashlib.sha256(text.encode("utf-8")).hexdigest()


def derive_doc_id(digest: str, title: str) -> str:
    """Stable document identity from (content digest, title)."""
    slug = _SLUG_RE.sub("-", title.lower()).strip("-")[:32] or "doc"
    tail = hashlib.sha256(f"{digest}\x00{title}".encode("utf-8")).hexdigest()[:10]
    return f"{slug}-{tail}"


def manifest_digest_for(pairs: Iterable[tuple[str, str]]) -> str:
    """Digest over sorted (doc_id, text_digest) pairs; changes iff membership
    or any member text changes."""
    lines = sorted(f"{doc_id} {digest}" for doc_id, digest in pairs)
    return hashlib.sha256("\n".join(lines).encode("utf-8")).hexdigest()


@dataclass(frozen=True)
class Document:
    doc_id: str
    title: str
    author: str
    text: str
    source_path: str
    char_count: int

    @property
    def digest(self) -> str:
        return text_digest(self.text)


@dataclass(frozen=True)
class Corpus:
    corpus_id: str
    documents: tuple[Document, ...]  # sorted by doc_id
    manifest_digest: str

    def get(self, doc_id: str) -> Document:
        for doc in self.documents:
            if doc.doc_id == doc_id:
                return doc
        raise KeyError(doc_id)

    def doc_ids(self) -> list[str]:
        return [d.doc_id for d in self.documents]


def make_document(
    raw: Union[bytes, str],
    title: str,
    author: str = "",
    source_path: str = "",
    encoding: Optional[str] = None,
) -> Document:
    """Normalize content and mint the content-addressed Document."""
    text = normalize_text(raw, encoding)
    if not text.strip():
        raise IngestError("empty document")
    digest = text_digest(text)
    return Document(
        doc_id=derive_doc_id(digest, title),
        title=title,
        author=author,
        text=text,
        source_path=source_path,
        char_count=len(text),
    )


class CorpusStore:
    """Directory-backed corpus persistence with single-writer manifests.

    Distinct documents may be ingested concurrently; manifest updates are
    serialized on an in-process lock and written atomically (temp + rename).
    Loaded corpora are immutable.
    """

    def __init__(self, root: Union[str, Path]):
        self.root = Path(root)
        self._lock = threading.Lock()

    def corpus_dir(self, corpus_id: str) -> Path:
        return self.root / corpus_id

    def doc_path(self, corpus_id: str, doc_id: str) -> Path:
        return self.corpus_dir(corpus_id) / "docs" / f"{doc_id}.txt"

    def manifest_path(self, corpus_id: str) -> Path:
        return self.corpus_dir(corpus_id) / "manifest.json"

    def list_corpora(self) -> list[str]:
        if not self.root.is_dir():
            return []
        return sorted(
            p.name for p in self.root.iterdir() if (p / "manifest.json").is_file()
        )

    def ingest(
        self,
        source: Union[str, Path, bytes],
        corpus_id: str,
        title: Optional[str] = None,
        author: str = "",
        encoding: Optional[str] = None,
    ) -> Document:
        """Ingest one document (path or raw bytes) into a corpus.

        Re-ingesting identical content under the same title returns the
        existing document. A duplicate title with different content is kept
        under a distinct doc_id with a warning.
        """
        if isinstance(source, bytes):
            raw: Union[bytes, str] = source
            source_path = ""
            if title is None:
                raise IngestError("a title is required when ingesting raw bytes")
        else:
            path = Path(source)
            try:
                raw = path.read_bytes()
            except OSError as exc:
                raise IngestError(f"cannot read {path}: {exc}") from exc
            source_path = str(path)
            if title is None:
                title = path.stem
        doc = make_document(raw, title, author, source_path, encoding)

        with self._lock:
            entries = self._read_manifest_entries(corpus_id)
            by_id = {e["doc_id"]: e for e in entries}
            if doc.doc_id in by_id:
                logger.debug("document %s already ingested", doc.doc_id)
                return doc
            for entry in entries:
                if entry["title"] == doc.title:
                    logger.warning(
                        "title %r already present with different content; "
                        "keeping both (%s, %s)",
                        doc.title,
                        entry["doc_id"],
                        doc.doc_id,
                    )
            doc_file = self.doc_path(corpus_id, doc.doc_id)
            doc_file.parent.mkdir(parents=True, exist_ok=True)
            with open(doc_file, "w", encoding="utf-8", newline="") as fh:
                fh.write(doc.text)
            entries.append(
                {
                    "doc_id": doc.doc_id,
                    "title": doc.title,
                    "author": doc.author,
                    "digest": doc.digest,
                    "char_count": doc.char_count,
                    "source_path": doc.source_path,
                }
            )
            self._write_manifest(corpus_id, entries)
        return doc

    def load_corpus(self, corpus_id: str) -> Corpus:
        manifest = self._read_manifest(corpus_id)
        documents = []
        for entry in sorted(manifest["documents"], key=lambda e: e["doc_id"]):
            doc_file = self.doc_path(corpus_id, entry["doc_id"])
            with open(doc_file, "r", encoding="utf-8", newline="") as fh:
                text = fh.read()
            doc = Document(
                doc_id=entry["doc_id"],
                title=entry["title"],
                author=entry.get("author", ""),
                text=text,
                source_path=entry.get("source_path", ""),
                char_count=entry["char_count"],
            )
            if doc.digest != entry["digest"]:
                raise IngestError(
                    f"stored text for {doc.doc_id} does not match its manifest digest"
                )
            documents.append(doc)
        return Corpus(
            corpus_id=corpus_id,
            documents=tuple(documents),
            manifest_digest=manifest["manifest_digest"],
        )

    def load_document(self, corpus_id: str, doc_id: str) -> Document:
        manifest = self._read_manifest(corpus_id)
        for entry in manifest["documents"]:
            if entry["doc_id"] == doc_id:
                with open(
                    self.doc_path(corpus_id, doc_id), "r", encoding="utf-8", newline=""
                ) as fh:
                    text = fh.read()
                doc = Document(
                    doc_id=doc_id,
                    title=entry["title"],
                    author=entry.get("author", ""),
                    text=text,
                    source_path=entry.get("source_path", ""),
                    char_count=entry["char_count"],
                )
                if doc.digest != entry["digest"]:
                    raise IngestError(
                        f"stored text for {doc_id} does not match its manifest digest"
                    )
                return doc
        raise KeyError(doc_id)

    # -- manifest plumbing -------------------------------------------------

    def _read_manifest(self, corpus_id: str) -> dict:
        path = self.manifest_path(corpus_id)
        if not path.is_file():
            raise IngestError(f"no corpus {corpus_id!r} under {self.root}")
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)

    def _read_manifest_entries(self, corpus_id: str) -> list[dict]:
        path = self.manifest_path(corpus_id)
        if not path.is_file():
            return []
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)["documents"]

    def _write_manifest(self, corpus_id: str, entries: list[dict]) -> None:
        entries = sorted(entries, key=lambda e: e["doc_id"])
        manifest = {
            "schema_version": MANIFEST_SCHEMA_VERSION,
            "corpus_id": corpus_id,
            "documents": entries,
            "manifest_digest": manifest_digest_for(
                (e["doc_id"], e["digest"]) for e in entries
            ),
        }
        path = self.manifest_path(corpus_id)
        path.parent.mkdir(parents=True, exist_ok=True)
        tmp = path.with_suffix(".json.tmp")
        with open(tmp, "w", encoding="utf-8") as fh:
            json.dump(manifest, fh, ensure_ascii=False, indent=1)
        tmp.replace(path)
