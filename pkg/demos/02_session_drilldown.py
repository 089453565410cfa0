"""Walkthrough: an interactive session replayed programmatically.

Simulates the click loop: start from a query, drill into a cell to list
the underlying documents, then focus the map on that cell (scope
narrowing) and watch the counts shrink.

Run: python3 demos/02_session_drilldown.py
"""

import json
import random

from termheat import build_index, build_heatmap, parse_corpus
from termheat.session import Scope, adapt, drilldown_documents

rng = random.Random(7)
VOCAB = ["gewalt", "jugendlicher", "krieg", "rechtsradikalismus", "familie", "schule"]
lines = []
for i in range(200):
    terms = sorted(rng.sample(VOCAB, rng.randint(1, 4)))
    lines.append(json.dumps({
        "id": f"d{i:03d}",
        "title": rng.choice(["violence and youth", "violence report", "peace studies"]),
        "terms": terms,
        "labels": {"gewalt": "Violence", "jugendlicher": "Adolescent"},
    }))

index = build_index(parse_corpus(lines).document_set)

scope = Scope()
hm = build_heatmap(index, "violence", k=4, m=2, scope=scope.terms)
print(f"base map: {hm.query_doc_count} docs, columns "
      f"{[c.term for c in hm.columns]}, rows {[r.term for r in hm.rows]}")

# click into the top-left applicable cell: browse its documents
col = hm.columns[0].term
row = next(r.term for r, cell_row in zip(hm.rows, hm.cells) if cell_row[0] is not None)
page = drilldown_documents(index, "violence", scope, [col, row], page=1, page_size=5)
print(f"\ncell ({row} x {col}): {page.total} documents, first page:")
for item in page.items:
    print(f"  {item['id']}: {item['title']}")

# focus the map on that cell: both terms join the scope
scope, hm = adapt(index, "violence", scope, [col, row], k=4, m=2)
print(f"\nafter focus, scope = {list(scope.terms)}")
print(f"narrowed map: {hm.query_doc_count} docs, columns {[c.term for c in hm.columns]}")
assert col not in [c.term for c in hm.columns]  # scope terms never reappear

# changing the search term resets the session
from termheat.session import change_query

scope, hm = change_query(index, "peace studies", k=4, m=2)
print(f"\nnew query 'peace studies': scope reset to {list(scope.terms)}, "
      f"{hm.query_doc_count} docs")
