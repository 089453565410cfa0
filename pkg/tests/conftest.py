"""Shared fixtures: the TINY5 corpus and a seeded random-corpus generator."""

from __future__ import annotations

import json
import random

import pytest

from termheat.coindex import build_index
from termheat.corpus import parse_corpus

TINY5_RECORDS = [
    {"id": "d1", "title": "violence report", "terms": ["A", "B", "C"]},
    {"id": "d2", "title": "violence study", "terms": ["A", "B"]},
    {"id": "d3", "title": "violence essay", "terms": ["A", "C"]},
    {"id": "d4", "title": "peace note", "terms": ["B", "C"]},
    {"id": "d5", "title": "violence memo", "terms": ["A"]},
]


def tiny5_jsonl() -> str:
    return "\n".join(json.dumps(r) for r in TINY5_RECORDS) + "\n"


@pytest.fixture(scope="session")
def tiny5_docs():
    result = parse_corpus(tiny5_jsonl().splitlines())
    assert not result.rejections
    return result.document_set


@pytest.fixture(scope="session")
def tiny5_index(tiny5_docs):
    return build_index(tiny5_docs)


_TITLE_WORDS = [
    "violence", "conflict", "peace", "youth", "media", "survey",
    "study", "report", "policy", "urban", "rural", "school",
]


def random_corpus_jsonl(
    seed: int,
    n_docs: int | None = None,
    vocab_size: int | None = None,
    max_terms: int = 6,
) -> str:
    """Seeded synthetic corpus: 100-500 docs, 20-40 terms, 1-6 terms/doc."""
    rng = random.Random(seed)
    n_docs = n_docs if n_docs is not None else rng.randint(100, 500)
    vocab_size = vocab_size if vocab_size is not None else rng.randint(20, 40)
    vocab = [f"t{i:02d}" for i in range(vocab_size)]
    lines = []
    for i in range(n_docs):
        terms = rng.sample(vocab, rng.randint(1, max_terms))
        title = " ".join(rng.choices(_TITLE_WORDS, k=rng.randint(2, 5)))
        record = {"id": f"doc{i:04d}", "title": title, "terms": terms}
        if rng.random() < 0.3:
            record["abstract"] = " ".join(rng.choices(_TITLE_WORDS, k=rng.randint(4, 10)))
        lines.append(json.dumps(record))
    return "\n".join(lines) + "\n"


def random_queries(seed: int, vocabulary: list[str], n: int) -> list[str]:
    """Mixed query stream: indexing terms, title words, and short phrases."""
    rng = random.Random(seed)
    queries = []
    for _ in range(n):
        roll = rng.random()
        if roll < 0.4 and vocabulary:
            queries.append(rng.choice(vocabulary))
        elif roll < 0.8:
            queries.append(rng.choice(_TITLE_WORDS))
        else:
            queries.append(" ".join(rng.choices(_TITLE_WORDS, k=2)))
    return queries
