"""Durable, replayable storage: run event logs, transcript cache, fixture.

A run is one newline-delimited JSON file of events headed by a schema
event; state is reconstructed by replaying it. Transcripts live in a
content-addressed cache with create-exclusive writes so entries are
immutable once written.
"""

from __future__ import annotations

import hashlib
import json
import logging
import os
import re
import secrets
import time
from dataclasses import dataclass, field
from pathlib import Path

from .classifier import (
    CONFIDENCE_DEFINITIVE,
    CONFIDENCE_REFUSAL,
    ClassificationOutcome,
)
from .corpus import PaperItem, parse_ground_truth, top_level_set
from .errors import DataError
from .evaluation import ComparisonRow, attach_score
from .taxonomy import Taxonomy, ValidationStatus, canonical, parse_code, validate

logger = logging.getLogger(__name__)

SCHEMA_VERSION = 1

CacheKey = tuple[str, str, str]


def _now() -> str:
    return time.strftime("%Y-%m-%dT%H:%M:%SZ", time.gmtime())


@dataclass
class TranscriptCacheEntry:
    key: CacheKey
    pairs: list[tuple[str, str]]
    created_at: str


@dataclass
class RunRecord:
    run_id: str
    created: str
    config: dict
    items: dict[str, PaperItem] = field(default_factory=dict)
    outcomes: dict[str, ClassificationOutcome] = field(default_factory=dict)
    rows: dict[str, ComparisonRow] = field(default_factory=dict)
    sample_meta: dict = field(default_factory=dict)
    reported_aggregates: dict[str, int] = field(default_factory=dict)
    audit: list[dict] = field(default_factory=list)

    def ordered_rows(self) -> list[ComparisonRow]:
        return [self.rows[k] for k in sorted(self.rows)]


class RunStore:
    """Single-writer store rooted at a directory; see the repo README."""

    def __init__(self, root: str | Path):
        self.root = Path(root)
        self.runs_dir = self.root / "runs"
        self.cache_dir = self.root / "cache"
        self.reports_dir = self.root / "reports"
        for directory in (self.runs_dir, self.cache_dir, self.reports_dir):
            directory.mkdir(parents=True, exist_ok=True)

    # -- run event log ------------------------------------------------

    def _run_path(self, run_id: str) -> Path:
        if not re.match(r"^[A-Za-z0-9._-]+$", run_id):
            raise DataError(f"bad run id: {run_id!r}")
        return self.runs_dir / f"{run_id}.jsonl"

    def create_run(self, config: dict) -> str:
        while True:
            run_id = (
                time.strftime("%Y%m%dT%H%M%SZ", time.gmtime())
                + "-"
                + secrets.token_hex(3)
            )
            path = self._run_path(run_id)
            header = {
                "type": "header",
                "schema": SCHEMA_VERSION,
                "run_id": run_id,
                "created": _now(),
                "config": config,
            }
            try:
                with path.open("x", encoding="utf-8") as fp:
                    fp.write(json.dumps(header, sort_keys=True) + "\n")
                return run_id
            except FileExistsError:
                continue

    def append_event(self, run_id: str, event_type: str, payload: dict) -> None:
        path = self._run_path(run_id)
        if not path.exists():
            raise DataError(f"unknown run: {run_id}")
        event = {"type": event_type, "at": _now(), **payload}
        with path.open("a", encoding="utf-8") as fp:
            fp.write(json.dumps(event, sort_keys=True) + "\n")
            fp.flush()
            os.fsync(fp.fileno())

    def list_runs(self) -> list[str]:
        return sorted(p.stem for p in self.runs_dir.glob("*.jsonl"))

    def latest_run_id(self) -> str | None:
        runs = self.list_runs()
        return runs[-1] if runs else None

    def load_run(self, run_id: str) -> RunRecord:
        path = self._run_path(run_id)
        if not path.exists():
            raise DataError(f"unknown run: {run_id}")
        record: RunRecord | None = None
        for lineno, line in enumerate(path.read_text(encoding="utf-8").splitlines(), 1):
            if not line.strip():
                continue
            try:
                event = json.loads(line)
            except json.JSONDecodeError as exc:
                raise DataError(f"{path.name} line {lineno}: bad event: {exc}")
            kind = event.get("type")
            if kind == "header":
                record = RunRecord(
                    run_id=event["run_id"],
                    created=event.get("created", ""),
                    config=event.get("config", {}),
                )
                continue
            if record is None:
                raise DataError(f"{path.name}: first event must be the header")
            if kind == "item_sampled":
                item = PaperItem.from_dict(event["item"])
                record.items[item.arxiv_id] = item
            elif kind == "sample_meta":
                record.sample_meta = {k: v for k, v in event.items() if k not in ("type", "at")}
            elif kind == "outcome_recorded":
                record.outcomes[event["arxiv_id"]] = ClassificationOutcome.from_dict(
                    event["outcome"]
                )
            elif kind == "row_evaluated":
                row = ComparisonRow.from_dict(event["row"])
                record.rows[row.arxiv_id] = row
            elif kind == "evaluation_meta":
                record.reported_aggregates = event.get("reported_aggregates", {})
            elif kind == "score_attached":
                row = record.rows.get(event["arxiv_id"])
                if row is not None:
                    attach_score(
                        row,
                        event["score"],
                        event.get("reviewer", ""),
                        event.get("notes", ""),
                    )
                record.audit.append(
                    {k: v for k, v in event.items() if k != "type"}
                )
            # report_emitted and unknown event kinds are informational
        if record is None:
            raise DataError(f"{path.name}: empty run file")
        return record

    def write_sample_document(self, run_id: str, sample_set) -> Path:
        """Persist the SampleSet as a standalone JSON artifact."""
        samples_dir = self.root / "samples"
        samples_dir.mkdir(parents=True, exist_ok=True)
        path = samples_dir / f"{run_id}.json"
        path.write_text(
            json.dumps(sample_set.to_dict(), indent=2, sort_keys=True,
                       ensure_ascii=False) + "\n",
            encoding="utf-8",
        )
        return path

    # -- transcript cache ----------------------------------------------

    def _cache_path(self, key: CacheKey) -> Path:
        digest = hashlib.sha256("\x00".join(key).encode("utf-8")).hexdigest()
        return self.cache_dir / f"{digest}.json"

    def cache_lookup(self, key: CacheKey) -> TranscriptCacheEntry | None:
        path = self._cache_path(key)
        if not path.exists():
            return None
        payload = json.loads(path.read_text(encoding="utf-8"))
        return TranscriptCacheEntry(
            key=tuple(payload["key"]),
            pairs=[tuple(p) for p in payload["pairs"]],
            created_at=payload.get("created_at", ""),
        )

    def cache_put(self, key: CacheKey, pairs: list[tuple[str, str]]) -> None:
        path = self._cache_path(key)
        payload = {
            "key": list(key),
            "pairs": [list(p) for p in pairs],
            "created_at": _now(),
        }
        try:
            with path.open("x", encoding="utf-8") as fp:
                json.dump(payload, fp, sort_keys=True, ensure_ascii=False)
        except FileExistsError:
            raise DataError(f"transcript cache entry already exists for key {key}")

    # -- store lock -----------------------------------------------------

    def acquire_lock(self) -> Path:
        lock = self.root / ".lock"
        try:
            with lock.open("x") as fp:
                fp.write(str(os.getpid()))
        except FileExistsError:
            raise DataError(
                f"store {self.root} is locked by another command "
                f"(remove {lock} if that process is gone)"
            )
        return lock

    def release_lock(self) -> None:
        lock = self.root / ".lock"
        if lock.exists():
            lock.unlink()


# -- study fixture -------------------------------------------------------


@dataclass
class FixtureRow:
    table: str
    section: str
    arxiv_id: str
    arxiv_msc_raw: str
    llm_primary_raw: str
    llm_secondary_raw: str
    ground_truth_tops: set[str]
    outcome: ClassificationOutcome
    reference: dict


@dataclass
class FixtureSet:
    rows: list[FixtureRow]
    reported_aggregates: dict[str, int]
    path: Path


def _parse_reference_int(cell: str) -> int:
    cell = cell.strip()
    if cell in ("", "-"):
        return 0
    try:
        return int(cell)
    except ValueError:
        raise ValueError(f"bad reference count {cell!r}")


def _parse_reference_quality(cell: str) -> int | None:
    cell = cell.strip()
    if not cell:
        return None
    if cell == "=":
        return 0
    try:
        value = int(cell)
    except ValueError:
        raise ValueError(f"bad quality value {cell!r}")
    if value not in (-2, -1, 0, 1, 2):
        raise ValueError(f"quality {value} outside the five-point scale")
    return value


def _parse_llm_cell(cell: str) -> list:
    codes = []
    for token in re.split(r"[;,\s]+", cell.strip()):
        if not token or token.lower() == "none":
            continue
        codes.append(parse_code(token))
    return codes


def load_fixture(path: str | Path, taxonomy: Taxonomy) -> FixtureSet:
    """Load the recorded study tables, verbatim printed values included."""
    path = Path(path)
    if not path.exists():
        raise DataError(f"fixture file not found: {path}")
    rows: list[FixtureRow] = []
    reported: dict[str, int] = {}
    for lineno, line in enumerate(path.read_text(encoding="utf-8").splitlines(), 1):
        if line.startswith("#meta\t"):
            parts = line.split("\t")
            if len(parts) != 3:
                raise DataError(f"{path.name} line {lineno}: bad meta line")
            reported[parts[1]] = int(parts[2])
            continue
        if not line.strip() or line.startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != 12:
            raise DataError(
                f"{path.name} line {lineno}: expected 12 columns, got {len(parts)}"
            )
        (
            table,
            section,
            arxiv_id,
            arxiv_msc,
            llm_primary,
            llm_secondary,
            n_arxiv,
            n_llm_primary,
            n_primary_wrong,
            quality,
            n_primary_missed,
            n_secondary_extra,
        ) = parts
        if table not in ("matching", "differing"):
            raise DataError(f"{path.name} line {lineno}: bad table {table!r}")
        try:
            ground_truth = parse_ground_truth(arxiv_msc)
            tops = top_level_set(ground_truth)
            primary = _parse_llm_cell(llm_primary)
            secondary = _parse_llm_cell(llm_secondary)
            reference = {
                "table": table,
                "n_arxiv": _parse_reference_int(n_arxiv),
                "n_llm_primary": _parse_reference_int(n_llm_primary),
                "n_primary_wrong": _parse_reference_int(n_primary_wrong)
                if table == "differing"
                else None,
                "quality": _parse_reference_quality(quality),
                "n_primary_missed": _parse_reference_int(n_primary_missed),
                "n_secondary_extra": _parse_reference_int(n_secondary_extra),
            }
        except (ValueError, DataError) as exc:
            raise DataError(f"{path.name} line {lineno}: {exc}")
        flags = []
        for code in [*primary, *secondary]:
            if validate(code, taxonomy) is ValidationStatus.UNKNOWN_CODE:
                flag = (canonical(code), "unknown_code")
                if flag not in flags:
                    flags.append(flag)
        outcome = ClassificationOutcome(
            primary=primary,
            secondary=secondary,
            confidence=CONFIDENCE_REFUSAL
            if not primary and not secondary
            else CONFIDENCE_DEFINITIVE,
            validation_flags=flags,
        )
        if outcome.confidence == CONFIDENCE_REFUSAL:
            outcome.refusal_text = "(no classification given)"
        rows.append(
            FixtureRow(
                table=table,
                section=section,
                arxiv_id=arxiv_id,
                arxiv_msc_raw=arxiv_msc,
                llm_primary_raw=llm_primary,
                llm_secondary_raw=llm_secondary,
                ground_truth_tops=tops,
                outcome=outcome,
                reference=reference,
            )
        )
    if not rows:
        raise DataError(f"{path.name}: no fixture rows")
    return FixtureSet(rows=rows, reported_aggregates=reported, path=path)


def default_fixture_path() -> Path:
    from importlib import resources

    return Path(str(resources.files("mscbench") / "data" / "study_tables.tsv"))


def fixture_digest(path: str | Path) -> str:
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()
