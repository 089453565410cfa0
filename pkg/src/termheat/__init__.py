"""termheat: interactive co-word heat maps over a controlled indexing vocabulary.

Maps a free search term to strongly co-occurring indexing terms, arranges
first- and second-order terms as a color-coded co-occurrence matrix, and
supports drilling into cells and re-scoping the map during a search session.
"""

from .coindex import CoIndex, build_index, conjunction, load_snapshot, match_query, save_snapshot
from .corpus import Document, DocumentSet, normalize_term, parse_corpus, serialize_corpus, tokenize
from .heatmap import (
    CellValue,
    HeatMap,
    build_heatmap,
    color_of,
    heatmap_to_csv,
    heatmap_to_dict,
    heatmap_to_json,
    normalize_matrix,
)
from .recommender import Recommendation, TermCount, first_order_terms
from .session import DocumentPage, Scope, adapt, change_query, drilldown_documents

__version__ = "0.1.0"

__all__ = [
    "CoIndex",
    "Document",
    "DocumentSet",
    "Recommendation",
    "TermCount",
    "HeatMap",
    "CellValue",
    "Scope",
    "DocumentPage",
    "build_index",
    "build_heatmap",
    "match_query",
    "conjunction",
    "normalize_term",
    "tokenize",
    "parse_corpus",
    "serialize_corpus",
    "save_snapshot",
    "load_snapshot",
    "first_order_terms",
    "color_of",
    "normalize_matrix",
    "heatmap_to_dict",
    "heatmap_to_json",
    "heatmap_to_csv",
    "drilldown_documents",
    "adapt",
    "change_query",
]
