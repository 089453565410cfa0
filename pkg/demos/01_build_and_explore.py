"""Walkthrough: build a corpus, index it, and read a co-word heat map.

Generates a small synthetic social-science corpus, builds the inverted
index, asks for term recommendations, and prints the heat map as a
band-annotated text grid.

Run: python3 demos/01_build_and_explore.py
"""

import json
import random

from termheat import build_index, build_heatmap, first_order_terms, parse_corpus

# --- 1. A synthetic corpus ---------------------------------------------------
# Each document: free-text title plus controlled indexing terms. Term choice
# is skewed so some combinations are clearly "hotter" than others.

VOCAB = [
    "adolescent", "violence propensity", "war", "right-wing radicalism",
    "developing country", "asia", "africa", "xenophobia", "child", "family",
]
TITLES = ["violence", "conflict", "study", "survey", "youth", "media"]

rng = random.Random(2024)
lines = []
for i in range(400):
    n_terms = rng.randint(2, 5)
    # bias: first vocab entries co-occur more often
    terms = sorted({VOCAB[min(rng.randint(0, 9), rng.randint(0, 9))] for _ in range(n_terms)})
    title = " ".join(rng.choices(TITLES, k=3))
    lines.append(json.dumps({"id": f"doc{i:03d}", "title": title, "terms": terms}))

result = parse_corpus(lines)
print(f"parsed {len(result.document_set)} documents, "
      f"{len(result.document_set.vocabulary)} vocabulary terms, "
      f"{len(result.rejections)} rejected")

index = build_index(result.document_set)

# --- 2. First-order recommendations ------------------------------------------
rec = first_order_terms(index, "violence", k=6)
print(f"\n'violence' matches {rec.query_doc_count} documents; top co-occurring terms:")
for tc in rec.first_order:
    print(f"  {tc.term:<24} {tc.count}")

# --- 3. The heat map ----------------------------------------------------------
hm = build_heatmap(index, "violence", k=5, m=3)
BAND_MARK = {"hot": "*", "warm": "~", "cold": "."}

col_width = 14
print("\nheat map (count + band: * hot, ~ warm, . cold, blank = n/a):\n")
header = " " * 26 + "".join(f"{c.term[:col_width - 2]:>{col_width}}" for c in hm.columns)
print(header)
for row_tc, cell_row in zip(hm.rows, hm.cells):
    label = f"{row_tc.term[:22]:<22} {row_tc.count:>3}"
    cells = ""
    for cell in cell_row:
        if cell is None:
            cells += " " * col_width
        else:
            cells += f"{cell.count:>{col_width - 2}} {BAND_MARK[cell.band]} "
    print(label + cells)

present = [c for row in hm.cells for c in row if c is not None]
hottest = max(present, key=lambda c: c.count)
print(f"\nhottest cell count: {hottest.count} (color {hottest.color})")
