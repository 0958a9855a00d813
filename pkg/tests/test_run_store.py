from __future__ import annotations

from pathlib import Path

import pytest

from mscbench.classifier import CONFIDENCE_REFUSAL
from mscbench.errors import DataError
from mscbench.run_store import (
    RunStore,
    default_fixture_path,
    fixture_digest,
    load_fixture,
)

DATA_DIR = Path(__file__).parent / "data"


class TestRunEvents:
    def test_write_then_read_back(self, tmp_path):
        store = RunStore(tmp_path)
        run_id = store.create_run({"stage": "test"})
        store.append_event(
            run_id,
            "item_sampled",
            {
                "item": {
                    "arxiv_id": "2404.00001",
                    "title": "T",
                    "abstract_text": "A",
                    "abstract_source": "metadata",
                    "ground_truth": ["11F27"],
                    "sampled_under": ["11"],
                    "submitted": "2024-04-01T00:00:00Z",
                }
            },
        )
        record = store.load_run(run_id)
        assert record.run_id == run_id
        assert "2404.00001" in record.items

    def test_append_to_unknown_run(self, tmp_path):
        store = RunStore(tmp_path)
        with pytest.raises(DataError, match="unknown run"):
            store.append_event("nope", "x", {})

    def test_events_read_in_append_order(self, tmp_path):
        store = RunStore(tmp_path)
        run_id = store.create_run({})
        row = {
            "arxiv_id": "2403.05604",
            "category": "differing",
            "arxiv_top_set": ["06"],
            "llm_primary_top_set": ["05"],
            "n_primary_wrong": 1,
        }
        store.append_event(run_id, "row_evaluated", {"row": row})
        store.append_event(
            run_id,
            "score_attached",
            {"arxiv_id": "2403.05604", "score": 0, "reviewer": "a", "notes": "",
             "previous": None},
        )
        store.append_event(
            run_id,
            "score_attached",
            {"arxiv_id": "2403.05604", "score": 2, "reviewer": "b", "notes": "",
             "previous": {"score": 0, "reviewer": "a", "notes": ""}},
        )
        record = store.load_run(run_id)
        assert record.rows["2403.05604"].quality == 2
        assert [e["score"] for e in record.audit] == [0, 2]

    def test_run_ids_unique(self, tmp_path):
        store = RunStore(tmp_path)
        ids = {store.create_run({}) for _ in range(5)}
        assert len(ids) == 5

    def test_lock_exclusion(self, tmp_path):
        store = RunStore(tmp_path)
        store.acquire_lock()
        with pytest.raises(DataError, match="locked"):
            store.acquire_lock()
        store.release_lock()
        store.acquire_lock()
        store.release_lock()


class TestTranscriptCache:
    KEY = ("2404.00001", "abcd1234", "chat-default")

    def test_put_then_lookup_identical(self, tmp_path):
        store = RunStore(tmp_path)
        pairs = [("prompt one", "reply one"), ("prompt two", "reply two")]
        store.cache_put(self.KEY, pairs)
        entry = store.cache_lookup(self.KEY)
        assert entry.key == self.KEY
        assert entry.pairs == pairs

    def test_lookup_absent(self, tmp_path):
        assert RunStore(tmp_path).cache_lookup(self.KEY) is None

    def test_second_put_rejected(self, tmp_path):
        store = RunStore(tmp_path)
        store.cache_put(self.KEY, [("p", "r")])
        with pytest.raises(DataError, match="already exists"):
            store.cache_put(self.KEY, [("p", "different")])


class TestFixture:
    def test_row_count(self, fixture_set):
        assert len(fixture_set.rows) == 56
        assert sum(1 for r in fixture_set.rows if r.table == "matching") == 34
        assert sum(1 for r in fixture_set.rows if r.table == "differing") == 22

    def test_spot_row_2311_15913(self, fixture_set):
        row = next(r for r in fixture_set.rows if r.arxiv_id == "2311.15913")
        assert row.ground_truth_tops == {"34", "35", "49", "70", "74"}
        assert row.reference["n_primary_missed"] == 4

    def test_spot_row_1801_04970_quality(self, fixture_set):
        row = next(r for r in fixture_set.rows if r.arxiv_id == "1801.04970")
        assert row.reference["quality"] == -2

    def test_refusal_row_encoded_as_none(self, fixture_set):
        row = next(r for r in fixture_set.rows if r.arxiv_id == "2112.12010")
        assert row.outcome.primary == [] and row.outcome.secondary == []
        assert row.outcome.confidence == CONFIDENCE_REFUSAL

    def test_printed_values_kept_verbatim(self, fixture_set):
        row = next(r for r in fixture_set.rows if r.arxiv_id == "2403.19691")
        assert "15a42" in row.llm_primary_raw
        row12 = next(r for r in fixture_set.rows if r.arxiv_id == "9807008")
        assert "58A5" in row12.arxiv_msc_raw

    def test_hallucinations_flagged(self, fixture_set):
        row22 = next(r for r in fixture_set.rows if r.arxiv_id == "2303.01437")
        assert ("35Q72", "unknown_code") in row22.outcome.validation_flags
        row74 = next(r for r in fixture_set.rows if r.arxiv_id == "2311.17485")
        assert ("65F90", "unknown_code") in row74.outcome.validation_flags

    def test_reported_aggregates_loaded(self, fixture_set):
        assert fixture_set.reported_aggregates["n_matching"] == 34
        assert fixture_set.reported_aggregates["n_matching_with_missed"] == 17
        assert fixture_set.reported_aggregates["n_differing_with_fresh_extra"] == 13

    def test_malformed_line_reports_number(self, tmp_path, taxonomy):
        bad = tmp_path / "bad.tsv"
        bad.write_text("matching\t00\tid\t(00)\t00A05\n", encoding="utf-8")
        with pytest.raises(DataError, match="line 1"):
            load_fixture(bad, taxonomy)

    def test_missing_file(self, tmp_path, taxonomy):
        with pytest.raises(DataError, match="not found"):
            load_fixture(tmp_path / "absent.tsv", taxonomy)

    def test_digest_pinned(self):
        path = default_fixture_path()
        pinned = (path.parent / "study_tables.sha256").read_text().strip()
        assert fixture_digest(path) == pinned

    def test_printed_anomalies_preserved(self, fixture_set):
        # These printed cells disagree with any recomputation from the
        # code columns; the fixture must carry them as printed.
        row16 = next(r for r in fixture_set.rows if r.arxiv_id == "2401.02545")
        assert row16.reference["n_arxiv"] == 2
        assert row16.ground_truth_tops == {"16"}
        row76 = next(r for r in fixture_set.rows if r.arxiv_id == "2403.18088")
        assert row76.reference["n_arxiv"] == 1
        assert row76.ground_truth_tops == {"65", "76", "35"}

    def test_distinct_top_level_primary_counts(self, fixture_set):
        row60 = next(r for r in fixture_set.rows if r.arxiv_id == "2403.15220")
        assert [str(c) for c in row60.outcome.primary] == ["62", "62F", "62F10"]
        assert row60.outcome.primary_tops == {"62"}
        row11 = next(r for r in fixture_set.rows if r.arxiv_id == "2403.05453")
        assert row11.outcome.primary_tops == {"14", "11"}
