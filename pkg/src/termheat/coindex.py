"""Inverted co-occurrence index and conjunction counting.

The index is immutable once built and is the single counting engine: every
number on a heat map is the size of a posting-list intersection computed here.
Document ordinals (dense ints, position in the DocumentSet) are the internal
id space; external string ids appear only at API boundaries.
"""

from __future__ import annotations

import gzip
import json
import os
from dataclasses import dataclass, field
from typing import Sequence

from .corpus import Document, DocumentSet, normalize_term, tokenize

SNAPSHOT_VERSION = 1

__all__ = [
    "CoIndex",
    "QueryMatch",
    "build_index",
    "match_query",
    "conjunction",
    "save_snapshot",
    "load_snapshot",
]


@dataclass(frozen=True)
class QueryMatch:
    query_tokens: tuple[str, ...]
    matched_docs: list[int]


@dataclass(frozen=True)
class CoIndex:
    """Immutable inverted index over a DocumentSet.

    term_postings: normalized indexing term -> sorted ordinal list
    text_postings: title/abstract token -> sorted ordinal list
    doc_tokens:    per-ordinal token sequence, used for phrase verification
    term_labels:   normalized term -> display label (first one seen wins)
    """

    doc_count: int
    doc_table: tuple[Document, ...]
    term_postings: dict[str, list[int]]
    text_postings: dict[str, list[int]]
    doc_tokens: tuple[tuple[str, ...], ...]
    term_labels: dict[str, str] = field(default_factory=dict)

    @property
    def vocabulary(self) -> list[str]:
        return sorted(self.term_postings)


def build_index(docs: DocumentSet) -> CoIndex:
    """Build the inverted index; postings come out sorted by construction."""
    term_postings: dict[str, list[int]] = {}
    text_postings: dict[str, list[int]] = {}
    doc_tokens: list[tuple[str, ...]] = []
    term_labels: dict[str, str] = {}
    for ordinal, doc in enumerate(docs.documents):
        for term in doc.terms:
            term_postings.setdefault(term, []).append(ordinal)
        tokens = tuple(doc.text_tokens())
        doc_tokens.append(tokens)
        for token in set(tokens):
            text_postings.setdefault(token, []).append(ordinal)
        for term, label in doc.labels.items():
            term_labels.setdefault(term, label)
    for posting in term_postings.values():
        posting.sort()
    for posting in text_postings.values():
        posting.sort()
    return CoIndex(
        doc_count=len(docs.documents),
        doc_table=docs.documents,
        term_postings=term_postings,
        text_postings=text_postings,
        doc_tokens=tuple(doc_tokens),
        term_labels=term_labels,
    )


def _intersect(a: list[int], b: list[int]) -> list[int]:
    """Merge-intersect two sorted ordinal lists."""
    out: list[int] = []
    i = j = 0
    la, lb = len(a), len(b)
    while i < la and j < lb:
        x, y = a[i], b[j]
        if x == y:
            out.append(x)
            i += 1
            j += 1
        elif x < y:
            i += 1
        else:
            j += 1
    return out


def _contains_phrase(tokens: Sequence[str], phrase: Sequence[str]) -> bool:
    n, m = len(tokens), len(phrase)
    if m == 0 or m > n:
        return False
    first = phrase[0]
    for i in range(n - m + 1):
        if tokens[i] == first and list(tokens[i : i + m]) == list(phrase):
            return True
    return False


def match_query(index: CoIndex, q: str) -> QueryMatch:
    """Resolve a raw search text to its document set.

    A document matches if its title+abstract token sequence contains the
    tokenized query as a consecutive phrase, or if its indexing terms include
    the whole query normalized as a single term.

    Raises:
        ValueError: "empty query" when q normalizes to nothing.
    """
    try:
        normalized = normalize_term(q)
    except ValueError:
        raise ValueError("empty query") from None
    tokens = tuple(tokenize(q))

    matched: set[int] = set()
    if tokens:
        candidates: list[int] | None = None
        for tok in tokens:
            posting = index.text_postings.get(tok)
            if posting is None:
                candidates = []
                break
            candidates = posting if candidates is None else _intersect(candidates, posting)
        for ordinal in candidates or []:
            if _contains_phrase(index.doc_tokens[ordinal], tokens):
                matched.add(ordinal)
    matched.update(index.term_postings.get(normalized, []))
    return QueryMatch(query_tokens=tokens, matched_docs=sorted(matched))


def conjunction(index: CoIndex, base: list[int], terms: Sequence[str]) -> list[int]:
    """Intersect base with each term's posting list; [] for unknown terms.

    Intersections proceed from the shortest posting outward; the empty term
    list is the identity.
    """
    if not terms:
        return list(base)
    postings = []
    for term in terms:
        posting = index.term_postings.get(term)
        if posting is None:
            return []
        postings.append(posting)
    postings.sort(key=len)
    result = base
    for posting in postings:
        result = _intersect(result, posting)
        if not result:
            break
    return list(result)


def save_snapshot(index: CoIndex, destination: str | os.PathLike) -> None:
    """Write a versioned JSON snapshot; gzip-compressed for .gz paths."""
    docs = []
    for d in index.doc_table:
        record: dict = {"id": d.id, "title": d.title, "terms": sorted(d.terms)}
        if d.abstract is not None:
            record["abstract"] = d.abstract
        if d.labels:
            record["labels"] = dict(sorted(d.labels.items()))
        docs.append(record)
    payload = {
        "version": SNAPSHOT_VERSION,
        "doc_count": index.doc_count,
        "vocab": index.vocabulary,
        "term_postings": index.term_postings,
        "text_postings": index.text_postings,
        "docs": docs,
    }
    data = json.dumps(payload, ensure_ascii=False).encode("utf-8")
    if str(destination).endswith(".gz"):
        with gzip.open(destination, "wb") as fh:
            fh.write(data)
    else:
        with open(destination, "wb") as fh:
            fh.write(data)


def load_snapshot(source: str | os.PathLike) -> CoIndex:
    """Load a snapshot written by save_snapshot (gzip detected by magic bytes).

    Raises:
        ValueError: "unsupported snapshot version" / "corrupt snapshot".
    """
    with open(source, "rb") as fh:
        head = fh.read(2)
        fh.seek(0)
        raw = fh.read()
    if head == b"\x1f\x8b":
        try:
            raw = gzip.decompress(raw)
        except (OSError, EOFError):
            raise ValueError("corrupt snapshot") from None
    try:
        payload = json.loads(raw.decode("utf-8"))
    except (UnicodeDecodeError, json.JSONDecodeError):
        raise ValueError("corrupt snapshot") from None
    if not isinstance(payload, dict) or "version" not in payload:
        raise ValueError("corrupt snapshot")
    if payload["version"] != SNAPSHOT_VERSION:
        raise ValueError("unsupported snapshot version")
    try:
        documents = tuple(
            Document(
                id=rec["id"],
                title=rec["title"],
                terms=frozenset(rec["terms"]),
                abstract=rec.get("abstract"),
                labels=rec.get("labels", {}),
            )
            for rec in payload["docs"]
        )
        doc_count = payload["doc_count"]
        term_postings = {t: list(p) for t, p in payload["term_postings"].items()}
        text_postings = {t: list(p) for t, p in payload["text_postings"].items()}
    except (KeyError, TypeError):
        raise ValueError("corrupt snapshot") from None
    if doc_count != len(documents):
        raise ValueError("corrupt snapshot")
    doc_tokens = tuple(tuple(d.text_tokens()) for d in documents)
    term_labels: dict[str, str] = {}
    for d in documents:
        for term, label in d.labels.items():
            term_labels.setdefault(term, label)
    return CoIndex(
        doc_count=doc_count,
        doc_table=documents,
        term_postings=term_postings,
        text_postings=text_postings,
        doc_tokens=doc_tokens,
        term_labels=term_labels,
    )
