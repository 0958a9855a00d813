from __future__ import annotations

from pathlib import Path

import pytest

from mscbench import evaluation
from mscbench.run_store import default_fixture_path, load_fixture
from mscbench.taxonomy import shipped_taxonomy

DATA_DIR = Path(__file__).parent / "data"


@pytest.fixture(scope="session")
def taxonomy():
    return shipped_taxonomy()


@pytest.fixture(scope="session")
def fixture_set(taxonomy):
    return load_fixture(default_fixture_path(), taxonomy)


def build_fixture_rows(fixture_set):
    return [
        evaluation.compare(
            frow.ground_truth_tops,
            frow.outcome,
            arxiv_id=frow.arxiv_id,
            sampled_under=frow.section,
            reference=frow.reference,
        )
        for frow in fixture_set.rows
    ]


@pytest.fixture()
def fixture_rows(fixture_set):
    return build_fixture_rows(fixture_set)


@pytest.fixture()
def fixture_report(fixture_set, fixture_rows):
    return evaluation.aggregate(fixture_rows, fixture_set.reported_aggregates)


@pytest.fixture(scope="session")
def refusal_reply() -> str:
    return (DATA_DIR / "refusal_reply.txt").read_text(encoding="utf-8")
