"""Walkthrough: snapshots and the HTTP gateway.

Saves an index snapshot, reloads it, and exercises the JSON API in-process
(the same app `termheat serve` runs under uvicorn).

Run: python3 demos/03_snapshot_and_http.py
"""

import json
import tempfile
from pathlib import Path

from fastapi.testclient import TestClient

from termheat import build_index, load_snapshot, parse_corpus, save_snapshot
from termheat.server import ServiceConfig, create_app

CORPUS = [
    {"id": "d1", "title": "violence report", "terms": ["A", "B", "C"]},
    {"id": "d2", "title": "violence study", "terms": ["A", "B"]},
    {"id": "d3", "title": "violence essay", "terms": ["A", "C"]},
    {"id": "d4", "title": "peace note", "terms": ["B", "C"]},
    {"id": "d5", "title": "violence memo", "terms": ["A"]},
]

index = build_index(parse_corpus(json.dumps(r) for r in CORPUS).document_set)

with tempfile.TemporaryDirectory() as tmp:
    snap = Path(tmp) / "corpus.idx.json.gz"  # .gz -> compressed snapshot
    save_snapshot(index, snap)
    print(f"snapshot: {snap.stat().st_size} bytes (gzip)")
    index = load_snapshot(snap)

client = TestClient(create_app(index, ServiceConfig(default_k=2, default_m=2)))

print("\nGET /api/stats")
print(" ", client.get("/api/stats").json())

print("\nGET /api/recommend?q=violence&k=3")
print(" ", client.get("/api/recommend", params={"q": "violence", "k": 3}).json())

print("\nGET /api/heatmap?q=violence")
hm = client.get("/api/heatmap", params={"q": "violence"}).json()
print(f"  columns: {[c['term'] for c in hm['columns']]}")
print(f"  rows:    {[r['term'] for r in hm['rows']]}")
print(f"  cells:   {hm['cells']}")

print("\nGET /api/documents?q=violence&terms=a,b")
print(" ", client.get("/api/documents", params={"q": "violence", "terms": "a,b"}).json())

print("\nGET /api/heatmap (no q) ->", client.get("/api/heatmap").status_code,
      client.get("/api/heatmap").json())
