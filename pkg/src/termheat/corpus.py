"""Corpus parsing and term normalization.

Documents carry a free-text title/abstract plus a set of controlled-vocabulary
indexing terms. Everything downstream (index, recommendations, heat maps)
counts documents by their normalized indexing terms, so normalization lives
here and is applied exactly once, at parse time.
"""

from __future__ import annotations

import json
import re
import unicodedata
from dataclasses import dataclass, field
from typing import IO, Iterable

__all__ = [
    "Document",
    "DocumentSet",
    "Rejection",
    "ParseResult",
    "normalize_term",
    "tokenize",
    "parse_corpus",
    "serialize_corpus",
]

# Tokens are maximal alphanumeric runs; hyphens survive only between
# alphanumerics ("right-wing" is one token, "- dash" contributes nothing).
_TOKEN_RE = re.compile(r"[^\W_]+(?:-[^\W_]+)*", re.UNICODE)
_WS_RE = re.compile(r"\s+")


def _normalize_pass(raw: str) -> str:
    s = unicodedata.normalize("NFC", raw).casefold()
    return _WS_RE.sub(" ", s).strip()


def normalize_term(raw: str) -> str:
    """Normalize a raw term: NFC, case-fold, trim, collapse whitespace runs.

    Iterates to a fixed point so the result is idempotent even for exotic
    code points where case-folding disturbs the NFC form.

    Raises:
        ValueError: if the result is empty ("empty term").
    """
    s = _normalize_pass(raw)
    while True:
        again = _normalize_pass(s)
        if again == s:
            break
        s = again
    if not s:
        raise ValueError("empty term")
    return s


def tokenize(text: str) -> list[str]:
    """Split free text into normalized tokens, preserving order.

    Splits on any maximal run of non-alphanumeric characters, keeping hyphens
    that sit inside a token. Empty input yields an empty list.
    """
    tokens = []
    for m in _TOKEN_RE.finditer(unicodedata.normalize("NFC", text).casefold()):
        tok = m.group(0)
        if tok:
            tokens.append(tok)
    return tokens


@dataclass(frozen=True)
class Document:
    """One corpus record: id, text fields, normalized indexing terms.

    `terms` holds normalized terms (deduplicated); `labels` maps normalized
    term -> display label and is used for presentation only, never counting.
    """

    id: str
    title: str
    terms: frozenset[str]
    abstract: str | None = None
    labels: dict[str, str] = field(default_factory=dict)

    def text_tokens(self) -> list[str]:
        """Token sequence of title followed by abstract."""
        tokens = tokenize(self.title)
        if self.abstract:
            tokens.extend(tokenize(self.abstract))
        return tokens


@dataclass(frozen=True)
class DocumentSet:
    """Ordered, validated documents plus the vocabulary they span."""

    documents: tuple[Document, ...]
    vocabulary: frozenset[str]

    def __len__(self) -> int:
        return len(self.documents)


@dataclass(frozen=True)
class Rejection:
    line: int
    reason: str


@dataclass(frozen=True)
class ParseResult:
    document_set: DocumentSet
    rejections: tuple[Rejection, ...]


def _build_document(record: dict) -> Document:
    doc_id = record.get("id")
    if not isinstance(doc_id, str) or not doc_id:
        raise ValueError("missing or empty id")
    title = record.get("title")
    if not isinstance(title, str):
        raise ValueError("missing title")
    raw_terms = record.get("terms")
    if not isinstance(raw_terms, list):
        raise ValueError("missing terms list")
    terms = set()
    for raw in raw_terms:
        if not isinstance(raw, str):
            raise ValueError("non-string term")
        try:
            terms.add(normalize_term(raw))
        except ValueError:
            continue  # terms that normalize to nothing are dropped
    if not terms:
        raise ValueError("no indexing terms after normalization")
    abstract = record.get("abstract")
    if abstract is not None and not isinstance(abstract, str):
        raise ValueError("abstract must be a string")
    labels = {}
    raw_labels = record.get("labels") or {}
    if not isinstance(raw_labels, dict):
        raise ValueError("labels must be a mapping")
    for raw_term, label in raw_labels.items():
        try:
            key = normalize_term(raw_term)
        except ValueError:
            continue
        if key in terms and isinstance(label, str):
            labels[key] = label
    return Document(id=doc_id, title=title, terms=frozenset(terms), abstract=abstract, labels=labels)


def parse_corpus(lines: Iterable[str] | IO[str]) -> ParseResult:
    """Parse a JSONL corpus stream into a DocumentSet.

    Malformed lines, duplicate ids, and documents with an empty normalized
    term set are rejected individually; parsing always continues. The
    rejection report carries the 1-based line number and a reason.
    """
    documents: list[Document] = []
    seen_ids: set[str] = set()
    rejections: list[Rejection] = []
    for lineno, line in enumerate(lines, start=1):
        stripped = line.strip()
        if not stripped:
            continue
        try:
            record = json.loads(stripped)
        except json.JSONDecodeError:
            rejections.append(Rejection(lineno, "malformed line"))
            continue
        if not isinstance(record, dict):
            rejections.append(Rejection(lineno, "malformed line"))
            continue
        try:
            doc = _build_document(record)
        except ValueError as exc:
            rejections.append(Rejection(lineno, str(exc)))
            continue
        if doc.id in seen_ids:
            rejections.append(Rejection(lineno, "duplicate id"))
            continue
        seen_ids.add(doc.id)
        documents.append(doc)
    vocabulary = frozenset(t for d in documents for t in d.terms)
    return ParseResult(DocumentSet(tuple(documents), vocabulary), tuple(rejections))


def serialize_corpus(docs: DocumentSet) -> str:
    """Serialize a DocumentSet back to JSONL (round-trips through parse_corpus)."""
    out = []
    for d in docs.documents:
        record: dict = {"id": d.id, "title": d.title}
        if d.abstract is not None:
            record["abstract"] = d.abstract
        record["terms"] = sorted(d.terms)
        if d.labels:
            record["labels"] = dict(sorted(d.labels.items()))
        out.append(json.dumps(record, ensure_ascii=False, sort_keys=False))
    return "\n".join(out) + ("\n" if out else "")
