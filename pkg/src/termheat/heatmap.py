"""Heat map assembly: second-order terms, disjoint rows, cell counts,
min-max normalization, and the red-to-blue color scale.

Columns are the first-order recommendations; each column contributes its
top-m second-order terms, which are reduced left-to-right into one disjoint
row list. Cell values are raw document frequencies of the triple
(query, column, row), normalized against the matrix min/max.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Sequence

from .coindex import CoIndex, conjunction, match_query
from .corpus import normalize_term
from .recommender import TermCount, first_order_terms, top_terms

__all__ = [
    "CellValue",
    "HeatMap",
    "second_order_terms",
    "assemble_rows",
    "cell_counts",
    "normalize_matrix",
    "color_of",
    "build_heatmap",
    "heatmap_to_dict",
    "heatmap_to_json",
    "heatmap_to_csv",
]

# Color stops for the heat scale: blue -> green -> yellow -> red.
_STOPS = (
    (0.0, (0, 0, 255)),
    (1 / 3, (0, 255, 0)),
    (2 / 3, (255, 255, 0)),
    (1.0, (255, 0, 0)),
)


@dataclass(frozen=True)
class CellValue:
    count: int
    normalized: float
    color: str
    band: str  # hot | warm | cold


@dataclass(frozen=True)
class HeatMap:
    query: str
    scope: tuple[str, ...]
    k: int
    m: int
    query_doc_count: int
    columns: tuple[TermCount, ...]
    rows: tuple[TermCount, ...]
    cells: tuple[tuple[CellValue | None, ...], ...]


def second_order_terms(
    index: CoIndex,
    qdocs: list[int],
    first_order_term: str,
    m: int,
    excluded: set[str] = frozenset(),
) -> list[TermCount]:
    """Top-m terms co-occurring with both the query set and one column term.

    Attached counts are the triple counts with this column. Fewer than m
    viable candidates yields a shorter list.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    column_docs = conjunction(index, qdocs, [first_order_term])
    column_set = set(column_docs)
    counted = []
    for term, posting in index.term_postings.items():
        if term == first_order_term or term in excluded:
            continue
        count = sum(1 for d in posting if d in column_set)
        if count >= 1:
            counted.append((term, count))
    return [
        TermCount(term=t, count=c, label=index.term_labels.get(t))
        for t, c in top_terms(counted, m)
    ]


def assemble_rows(
    per_column_lists: Sequence[Sequence[TermCount]],
    qdocs: list[int],
    index: CoIndex,
) -> list[TermCount]:
    """Reduce per-column second-order lists to one disjoint row list.

    Scans columns left to right, each list top to bottom, keeping the first
    occurrence of each term. Row counts are recomputed as the term's pair
    count with the query set (the row-heading number).
    """
    rows: list[TermCount] = []
    seen: set[str] = set()
    for column_list in per_column_lists:
        for tc in column_list:
            if tc.term in seen:
                continue
            seen.add(tc.term)
            pair_count = len(conjunction(index, qdocs, [tc.term]))
            rows.append(TermCount(term=tc.term, count=pair_count, label=tc.label))
    return rows


def cell_counts(
    index: CoIndex,
    qdocs: list[int],
    columns: Sequence[str],
    rows: Sequence[str],
) -> list[list[int | None]]:
    """Matrix of triple counts, indexed [row][column].

    A cell whose row term equals its column term is not applicable (None).
    """
    matrix: list[list[int | None]] = []
    for row_term in rows:
        row: list[int | None] = []
        for col_term in columns:
            if row_term == col_term:
                row.append(None)
            else:
                row.append(len(conjunction(index, qdocs, [col_term, row_term])))
        matrix.append(row)
    return matrix


def normalize_matrix(counts: Sequence[Sequence[int | None]]) -> list[list[float | None]]:
    """Min-max normalize present cells; all-equal matrices collapse to 0.5."""
    present = [c for row in counts for c in row if c is not None]
    result: list[list[float | None]] = []
    if not present:
        return [[None for _ in row] for row in counts]
    lo, hi = min(present), max(present)
    span = hi - lo
    for row in counts:
        out_row: list[float | None] = []
        for c in row:
            if c is None:
                out_row.append(None)
            elif span == 0:
                out_row.append(0.5)
            else:
                out_row.append((c - lo) / span)
        result.append(out_row)
    return result


def _round_half_up(x: float) -> int:
    # channels are non-negative, so half-away-from-zero is half-up
    return int(x + 0.5)


def color_of(v: float) -> tuple[str, str]:
    """Map a normalized value in [0,1] to (hex color, band).

    Piecewise-linear over blue/green/yellow/red stops; bands split at 1/3
    (cold below) and 2/3 (hot at or above).
    """
    if not 0.0 <= v <= 1.0:
        raise ValueError("normalized value out of range")
    for (v0, c0), (v1, c1) in zip(_STOPS, _STOPS[1:]):
        if v <= v1:
            t = (v - v0) / (v1 - v0)
            rgb = tuple(_round_half_up(a + t * (b - a)) for a, b in zip(c0, c1))
            break
    if v < 1 / 3:
        band = "cold"
    elif v < 2 / 3:
        band = "warm"
    else:
        band = "hot"
    return "#{:02X}{:02X}{:02X}".format(*rgb), band


def build_heatmap(
    index: CoIndex,
    q: str,
    k: int = 10,
    m: int = 3,
    scope: Sequence[str] = (),
) -> HeatMap:
    """Assemble the full heat map for a query within an optional scope.

    Zero matched documents yields an empty but renderable map; an empty
    query raises ValueError("empty query").
    """
    recommendation = first_order_terms(index, q, k=k, scope=scope)
    match = match_query(index, q)
    qdocs = conjunction(index, match.matched_docs, list(scope))
    columns = recommendation.first_order
    excluded = set(scope) | {normalize_term(q)}
    per_column = [
        second_order_terms(index, qdocs, col.term, m, excluded=excluded) for col in columns
    ]
    rows = assemble_rows(per_column, qdocs, index)
    counts = cell_counts(index, qdocs, [c.term for c in columns], [r.term for r in rows])
    normalized = normalize_matrix(counts)
    cells: list[tuple[CellValue | None, ...]] = []
    for count_row, norm_row in zip(counts, normalized):
        out_row: list[CellValue | None] = []
        for count, norm in zip(count_row, norm_row):
            if count is None or norm is None:
                out_row.append(None)
            else:
                color, band = color_of(norm)
                out_row.append(CellValue(count=count, normalized=norm, color=color, band=band))
        cells.append(tuple(out_row))
    return HeatMap(
        query=q,
        scope=tuple(scope),
        k=k,
        m=m,
        query_doc_count=recommendation.query_doc_count,
        columns=columns,
        rows=tuple(rows),
        cells=tuple(cells),
    )


def _term_count_to_dict(tc: TermCount) -> dict:
    d: dict = {"term": tc.term, "count": tc.count}
    if tc.label is not None:
        d["label"] = tc.label
    return d


def heatmap_to_dict(hm: HeatMap) -> dict:
    return {
        "query": hm.query,
        "scope": list(hm.scope),
        "k": hm.k,
        "m": hm.m,
        "query_doc_count": hm.query_doc_count,
        "columns": [_term_count_to_dict(c) for c in hm.columns],
        "rows": [_term_count_to_dict(r) for r in hm.rows],
        "cells": [
            [
                None
                if cell is None
                else {
                    "count": cell.count,
                    "normalized": cell.normalized,
                    "color": cell.color,
                    "band": cell.band,
                }
                for cell in row
            ]
            for row in hm.cells
        ],
    }


def heatmap_to_json(hm: HeatMap) -> str:
    """Canonical JSON rendition; CLI and HTTP both emit exactly this."""
    return json.dumps(heatmap_to_dict(hm), ensure_ascii=False, separators=(",", ":"))


def heatmap_to_csv(hm: HeatMap) -> str:
    """CSV rendition: column-term header, one line per row term, counts as
    cells, not-applicable cells as empty fields."""
    import csv
    import io

    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow([""] + [c.term for c in hm.columns])
    for row_tc, cell_row in zip(hm.rows, hm.cells):
        writer.writerow(
            [row_tc.term] + ["" if cell is None else cell.count for cell in cell_row]
        )
    return buf.getvalue()
