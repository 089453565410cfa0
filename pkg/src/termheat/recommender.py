"""First-order term recommendation: the columns of the heat map.

Recommends the indexing terms that most frequently co-occur with the search
term's document set, in descending document-frequency order with ties broken
lexicographically.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .coindex import CoIndex, conjunction, match_query
from .corpus import normalize_term

__all__ = ["TermCount", "Recommendation", "first_order_terms", "recommendation_to_dict"]


@dataclass(frozen=True)
class TermCount:
    term: str
    count: int
    label: str | None = None


@dataclass(frozen=True)
class Recommendation:
    query: str
    query_doc_count: int
    first_order: tuple[TermCount, ...]


def top_terms(counted: list[tuple[str, int]], k: int) -> list[tuple[str, int]]:
    """Top-k by count descending, ties by term ascending."""
    counted.sort(key=lambda tc: (-tc[1], tc[0]))
    return counted[:k]


def first_order_terms(
    index: CoIndex,
    q: str,
    k: int = 10,
    scope: Sequence[str] = (),
    include_self: bool = False,
) -> Recommendation:
    """Rank indexing terms by co-occurrence with the (scoped) query set.

    Candidates are terms outside the scope with at least one co-occurring
    document; the query's own normalized form is excluded unless
    include_self is set. A query matching nothing yields an empty
    recommendation, not an error.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    match = match_query(index, q)
    base = conjunction(index, match.matched_docs, list(scope))
    scope_set = set(scope)
    self_term = normalize_term(q)
    counted = []
    base_set = set(base)
    for term, posting in index.term_postings.items():
        if term in scope_set:
            continue
        if term == self_term and not include_self:
            continue
        count = sum(1 for d in posting if d in base_set)
        if count >= 1:
            counted.append((term, count))
    ranked = top_terms(counted, k)
    first_order = tuple(
        TermCount(term=t, count=c, label=index.term_labels.get(t)) for t, c in ranked
    )
    return Recommendation(query=q, query_doc_count=len(base), first_order=first_order)


def recommendation_to_dict(rec: Recommendation, k: int, scope: Sequence[str]) -> dict:
    """Wire form shared by the CLI and the HTTP API."""
    first_order = []
    for tc in rec.first_order:
        entry: dict = {"term": tc.term, "count": tc.count}
        if tc.label is not None:
            entry["label"] = tc.label
        first_order.append(entry)
    return {
        "query": rec.query,
        "k": k,
        "scope": list(scope),
        "query_doc_count": rec.query_doc_count,
        "first_order": first_order,
    }
