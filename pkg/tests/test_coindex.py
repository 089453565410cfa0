"""Inverted index, query matching, conjunction, and snapshot tests."""

import gzip
import itertools
import json
import random

import pytest

from termheat.coindex import build_index, conjunction, load_snapshot, match_query, save_snapshot
from termheat.corpus import DocumentSet, parse_corpus

from conftest import random_corpus_jsonl, random_queries
from oracle import ref_conjunction, ref_matched


class TestBuildIndex:
    def test_empty(self):
        index = build_index(DocumentSet((), frozenset()))
        assert index.doc_count == 0
        assert index.term_postings == {}
        assert index.text_postings == {}

    def test_tiny5_postings(self, tiny5_index):
        assert tiny5_index.term_postings == {
            "a": [0, 1, 2, 4],
            "b": [0, 1, 3],
            "c": [0, 2, 3],
        }
        assert tiny5_index.text_postings["violence"] == [0, 1, 2, 4]

    def test_duplicate_raw_terms_counted_once(self):
        docs = parse_corpus(
            [json.dumps({"id": "only", "title": "t", "terms": ["x", "X "]})]
        ).document_set
        index = build_index(docs)
        assert index.term_postings == {"x": [0]}

    def test_postings_strictly_ascending(self, tiny5_index):
        for posting in itertools.chain(
            tiny5_index.term_postings.values(), tiny5_index.text_postings.values()
        ):
            assert all(a < b for a, b in zip(posting, posting[1:]))

    def test_each_doc_term_pair_once(self, tiny5_index, tiny5_docs):
        total = sum(len(p) for p in tiny5_index.term_postings.values())
        assert total == sum(len(d.terms) for d in tiny5_docs.documents)


class TestMatchQuery:
    def test_text_match(self, tiny5_index):
        assert match_query(tiny5_index, "Violence").matched_docs == [0, 1, 2, 4]

    def test_phrase_match(self, tiny5_index):
        assert match_query(tiny5_index, "peace note").matched_docs == [3]

    def test_non_consecutive_phrase_misses(self, tiny5_index):
        assert match_query(tiny5_index, "violence memo report").matched_docs == []

    def test_unseen(self, tiny5_index):
        assert match_query(tiny5_index, "unseen").matched_docs == []

    def test_indexing_term_match(self, tiny5_index):
        # "a" never appears in any title, only as an indexing term
        assert match_query(tiny5_index, "A").matched_docs == [0, 1, 2, 4]

    def test_empty_query(self, tiny5_index):
        with pytest.raises(ValueError, match="empty query"):
            match_query(tiny5_index, "   ")


class TestConjunction:
    def test_single_term(self, tiny5_index):
        assert conjunction(tiny5_index, [0, 1, 2, 4], ["a"]) == [0, 1, 2, 4]

    def test_two_terms(self, tiny5_index):
        assert conjunction(tiny5_index, [0, 1, 2, 4], ["a", "b"]) == [0, 1]

    def test_empty_terms_is_identity(self, tiny5_index):
        base = [0, 2, 3]
        assert conjunction(tiny5_index, base, []) == base

    def test_unknown_term_empties(self, tiny5_index):
        assert conjunction(tiny5_index, [0, 1, 2, 3, 4], ["nope"]) == []

    def test_symmetry(self, tiny5_index):
        base = [0, 1, 2, 3, 4]
        for perm in itertools.permutations(["a", "b", "c"]):
            assert conjunction(tiny5_index, base, list(perm)) == [0]

    def test_oracle_equivalence_random(self):
        rng = random.Random(777)
        total_checked = 0
        for corpus_seed in range(8):
            docs = parse_corpus(
                random_corpus_jsonl(1000 + corpus_seed, n_docs=rng.randint(50, 200)).splitlines()
            ).document_set
            index = build_index(docs)
            vocab = sorted(docs.vocabulary)
            for q in random_queries(corpus_seed, vocab, 25):
                matched = match_query(index, q).matched_docs
                assert matched == ref_matched(docs.documents, q)
                terms = rng.sample(vocab, rng.randint(0, 3))
                got = conjunction(index, matched, terms)
                assert got == ref_conjunction(docs.documents, matched, terms)
                assert all(a < b for a, b in zip(got, got[1:]))
                # monotone under an extra term
                extra = rng.choice(vocab)
                assert len(conjunction(index, matched, terms + [extra])) <= len(got)
                total_checked += 1
        assert total_checked >= 200


class TestSnapshot:
    def test_round_trip(self, tiny5_index, tmp_path):
        path = tmp_path / "tiny5.json"
        save_snapshot(tiny5_index, path)
        loaded = load_snapshot(path)
        assert loaded.term_postings == tiny5_index.term_postings
        assert loaded.text_postings == tiny5_index.text_postings
        assert loaded.doc_count == tiny5_index.doc_count
        assert match_query(loaded, "violence").matched_docs == [0, 1, 2, 4]

    def test_gzip_round_trip(self, tiny5_index, tmp_path):
        path = tmp_path / "tiny5.json.gz"
        save_snapshot(tiny5_index, path)
        assert path.read_bytes()[:2] == b"\x1f\x8b"
        loaded = load_snapshot(path)
        assert loaded.term_postings == tiny5_index.term_postings

    def test_empty_round_trip(self, tmp_path):
        index = build_index(DocumentSet((), frozenset()))
        path = tmp_path / "empty.json"
        save_snapshot(index, path)
        loaded = load_snapshot(path)
        assert loaded.doc_count == 0
        assert loaded.term_postings == {}

    def test_version_mismatch(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text(json.dumps({"version": "999"}))
        with pytest.raises(ValueError, match="unsupported snapshot version"):
            load_snapshot(path)

    def test_truncated_file(self, tiny5_index, tmp_path):
        path = tmp_path / "trunc.json"
        save_snapshot(tiny5_index, path)
        path.write_bytes(path.read_bytes()[: path.stat().st_size // 2])
        with pytest.raises(ValueError, match="corrupt snapshot"):
            load_snapshot(path)

    def test_truncated_gzip(self, tiny5_index, tmp_path):
        path = tmp_path / "trunc.json.gz"
        save_snapshot(tiny5_index, path)
        path.write_bytes(path.read_bytes()[: max(3, path.stat().st_size // 2)])
        with pytest.raises(ValueError, match="corrupt snapshot"):
            load_snapshot(path)
