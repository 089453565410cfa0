"""Stateless session operations: document drilldown and map re-scoping.

The server keeps no session state; the accumulated scope travels with every
call, so any click path can be replayed from its arguments alone.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .coindex import CoIndex, conjunction, match_query
from .heatmap import HeatMap, build_heatmap

__all__ = ["Scope", "DocumentPage", "drilldown_documents", "adapt", "change_query"]


@dataclass(frozen=True)
class Scope:
    """Ordered, duplicate-free conjunction of user-selected terms."""

    terms: tuple[str, ...] = ()

    def extended(self, clicked: Sequence[str]) -> "Scope":
        terms = list(self.terms)
        for t in clicked:
            if t not in terms:
                terms.append(t)
        return Scope(tuple(terms))


@dataclass(frozen=True)
class DocumentPage:
    total: int
    page: int
    page_size: int
    items: tuple[dict, ...]  # {"id", "title", "terms": [{"term", "label"?}]}


def _document_item(index: CoIndex, ordinal: int) -> dict:
    doc = index.doc_table[ordinal]
    terms = []
    for term in sorted(doc.terms):
        entry: dict = {"term": term}
        label = doc.labels.get(term) or index.term_labels.get(term)
        if label is not None:
            entry["label"] = label
        terms.append(entry)
    return {"id": doc.id, "title": doc.title, "terms": terms}


def drilldown_documents(
    index: CoIndex,
    q: str,
    scope: Scope,
    selection: Sequence[str],
    page: int = 1,
    page_size: int = 20,
) -> DocumentPage:
    """Page through the documents behind a term or cell click.

    The document set is the query's matches narrowed by scope plus the
    clicked selection ([], [column] or [column, row]). A page past the end
    returns empty items with the correct total.
    """
    if page < 1:
        raise ValueError("page must be >= 1")
    if page_size < 1:
        raise ValueError("page_size must be >= 1")
    match = match_query(index, q)
    ordinals = conjunction(index, match.matched_docs, list(scope.terms) + list(selection))
    start = (page - 1) * page_size
    items = tuple(_document_item(index, o) for o in ordinals[start : start + page_size])
    return DocumentPage(total=len(ordinals), page=page, page_size=page_size, items=items)


def adapt(
    index: CoIndex,
    q: str,
    scope: Scope,
    clicked: Sequence[str],
    k: int = 10,
    m: int = 3,
) -> tuple[Scope, HeatMap]:
    """Fold clicked terms into the scope and rebuild the map within it.

    Clicked terms must exist in the index; re-clicking a term already in
    scope is a no-op.
    """
    for term in clicked:
        if term not in index.term_postings:
            raise ValueError("unknown term")
    new_scope = scope.extended(clicked)
    return new_scope, build_heatmap(index, q, k=k, m=m, scope=new_scope.terms)


def change_query(index: CoIndex, new_q: str, k: int = 10, m: int = 3) -> tuple[Scope, HeatMap]:
    """Reset the scope and build a fresh map for a new search term."""
    scope = Scope()
    return scope, build_heatmap(index, new_q, k=k, m=m, scope=scope.terms)
