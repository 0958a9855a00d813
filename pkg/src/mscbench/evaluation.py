"""Compare LLM suggestions against arXiv ground truth at the top level.

All comparison happens on the distinct two-digit classes. A row is
matching when every LLM-suggested primary top-level class is among the
arXiv-provided ones (vacuously for refusals), differing otherwise.
Printed reference columns, when supplied, are tallied separately and
every divergence from recomputed values lands in the discrepancy log.
"""

from __future__ import annotations

import csv
import io
import logging
from dataclasses import dataclass, field

from .classifier import ClassificationOutcome
from .errors import DataError

logger = logging.getLogger(__name__)

CATEGORY_MATCHING = "matching"
CATEGORY_DIFFERING = "differing"

QUALITY_VALUES = (-2, -1, 0, 1, 2)
QUALITY_LABELS = {
    2: "LLM better than arXiv class",
    1: "LLM slightly better than arXiv class",
    0: "arguable either way",
    -1: "LLM slightly off",
    -2: "LLM way off",
}


def quality_key(value: int) -> str:
    """Render a score the way the study prints it: = for 0, signed otherwise."""
    if value == 0:
        return "="
    return f"{value:+d}"


@dataclass
class ComparisonRow:
    """Per-item metric columns mirroring the study tables."""

    arxiv_id: str
    sampled_under: str
    arxiv_top_set: set[str]
    llm_primary: list[str]
    llm_secondary: list[str]
    llm_primary_top_set: set[str]
    llm_secondary_top_set: set[str]
    category: str
    n_arxiv_top: int
    n_llm_primary_top: int
    n_primary_wrong: int
    n_primary_missed: int
    n_secondary_extra: int
    confidence: str
    validation_flags: list[tuple[str, str]] = field(default_factory=list)
    quality: int | None = None
    reviewer: str = ""
    notes: str = ""
    reference: dict | None = None

    def to_dict(self) -> dict:
        return {
            "arxiv_id": self.arxiv_id,
            "sampled_under": self.sampled_under,
            "arxiv_top_set": sorted(self.arxiv_top_set),
            "llm_primary": list(self.llm_primary),
            "llm_secondary": list(self.llm_secondary),
            "llm_primary_top_set": sorted(self.llm_primary_top_set),
            "llm_secondary_top_set": sorted(self.llm_secondary_top_set),
            "category": self.category,
            "n_arxiv_top": self.n_arxiv_top,
            "n_llm_primary_top": self.n_llm_primary_top,
            "n_primary_wrong": self.n_primary_wrong,
            "n_primary_missed": self.n_primary_missed,
            "n_secondary_extra": self.n_secondary_extra,
            "confidence": self.confidence,
            "validation_flags": [list(f) for f in self.validation_flags],
            "quality": self.quality,
            "reviewer": self.reviewer,
            "notes": self.notes,
            "reference": self.reference,
        }

    @classmethod
    def from_dict(cls, payload: dict) -> "ComparisonRow":
        return cls(
            arxiv_id=payload["arxiv_id"],
            sampled_under=payload.get("sampled_under", ""),
            arxiv_top_set=set(payload.get("arxiv_top_set", [])),
            llm_primary=list(payload.get("llm_primary", [])),
            llm_secondary=list(payload.get("llm_secondary", [])),
            llm_primary_top_set=set(payload.get("llm_primary_top_set", [])),
            llm_secondary_top_set=set(payload.get("llm_secondary_top_set", [])),
            category=payload.get("category", CATEGORY_MATCHING),
            n_arxiv_top=payload.get("n_arxiv_top", 0),
            n_llm_primary_top=payload.get("n_llm_primary_top", 0),
            n_primary_wrong=payload.get("n_primary_wrong", 0),
            n_primary_missed=payload.get("n_primary_missed", 0),
            n_secondary_extra=payload.get("n_secondary_extra", 0),
            confidence=payload.get("confidence", "definitive"),
            validation_flags=[tuple(f) for f in payload.get("validation_flags", [])],
            quality=payload.get("quality"),
            reviewer=payload.get("reviewer", ""),
            notes=payload.get("notes", ""),
            reference=payload.get("reference"),
        )


def compare(
    ground_truth_tops: set[str],
    outcome: ClassificationOutcome,
    arxiv_id: str = "",
    sampled_under: str = "",
    reference: dict | None = None,
) -> ComparisonRow:
    """Compute one row's metric columns from the top-level set formulas.

    Codes flagged as unknown still contribute their top-level class;
    whether to discount hallucinations is the reviewer's call, not the
    comparator's.
    """
    if not ground_truth_tops:
        raise DataError(f"item {arxiv_id or '?'}: empty ground-truth set")
    primary_tops = outcome.primary_tops
    secondary_tops = outcome.secondary_tops
    suggested = primary_tops | secondary_tops
    n_wrong = len(primary_tops - ground_truth_tops)
    return ComparisonRow(
        arxiv_id=arxiv_id,
        sampled_under=sampled_under,
        arxiv_top_set=set(ground_truth_tops),
        llm_primary=[str(c) for c in outcome.primary],
        llm_secondary=[str(c) for c in outcome.secondary],
        llm_primary_top_set=primary_tops,
        llm_secondary_top_set=secondary_tops,
        category=CATEGORY_MATCHING if n_wrong == 0 else CATEGORY_DIFFERING,
        n_arxiv_top=len(ground_truth_tops),
        n_llm_primary_top=len(primary_tops),
        n_primary_wrong=n_wrong,
        n_primary_missed=len(ground_truth_tops - suggested),
        n_secondary_extra=len(secondary_tops - (ground_truth_tops | primary_tops)),
        confidence=outcome.confidence,
        validation_flags=list(outcome.validation_flags),
        reference=reference,
    )


def attach_score(
    row: ComparisonRow, score: int, reviewer: str, notes: str = ""
) -> ComparisonRow:
    """Attach a human quality score to a differing row."""
    if row.category != CATEGORY_DIFFERING:
        raise DataError(
            f"row {row.arxiv_id} is {row.category}; only differing rows are scored"
        )
    if score not in QUALITY_VALUES:
        raise DataError(f"quality score must be one of {QUALITY_VALUES}, got {score!r}")
    row.quality = score
    row.reviewer = reviewer
    row.notes = notes
    return row


@dataclass
class RunReport:
    rows: list[ComparisonRow]
    aggregates: dict[str, int]
    reference_aggregates: dict[str, int] | None
    reported_aggregates: dict[str, int] | None
    quality_distribution: dict[str, int]
    unscored: int
    discrepancy_log: list[dict]
    run_id: str = ""
    created: str = ""


_REFERENCE_FIELDS = (
    ("n_arxiv", "n_arxiv_top"),
    ("n_llm_primary", "n_llm_primary_top"),
    ("n_primary_wrong", "n_primary_wrong"),
    ("n_primary_missed", "n_primary_missed"),
    ("n_secondary_extra", "n_secondary_extra"),
)


def _tally(rows: list[ComparisonRow], category: str, metric) -> int:
    return sum(1 for r in rows if r.category == category and metric(r) > 0)


def aggregate(
    rows: list[ComparisonRow],
    reported_aggregates: dict[str, int] | None = None,
) -> RunReport:
    """Count categories and the missed/extra incidence on each side.

    When rows carry printed reference columns, the same tallies are also
    computed from those columns, and every per-row or aggregate
    divergence is logged, never silently reconciled.
    """
    if not rows:
        raise DataError("aggregate needs at least one row")
    aggregates = {
        "n_matching": sum(1 for r in rows if r.category == CATEGORY_MATCHING),
        "n_differing": sum(1 for r in rows if r.category == CATEGORY_DIFFERING),
        "n_matching_with_missed": _tally(
            rows, CATEGORY_MATCHING, lambda r: r.n_primary_missed
        ),
        "n_matching_with_extra": _tally(
            rows, CATEGORY_MATCHING, lambda r: r.n_secondary_extra
        ),
        "n_differing_with_missed": _tally(
            rows, CATEGORY_DIFFERING, lambda r: r.n_primary_missed
        ),
        "n_differing_with_fresh_extra": _tally(
            rows, CATEGORY_DIFFERING, lambda r: r.n_secondary_extra
        ),
    }

    discrepancy_log: list[dict] = []
    referenced = [r for r in rows if r.reference is not None]
    reference_aggregates: dict[str, int] | None = None
    if referenced:
        for row in referenced:
            ref = row.reference
            if ref.get("table") and ref["table"] != row.category:
                discrepancy_log.append(
                    {
                        "arxiv_id": row.arxiv_id,
                        "field": "category",
                        "printed": ref["table"],
                        "recomputed": row.category,
                    }
                )
            for ref_key, row_attr in _REFERENCE_FIELDS:
                printed = ref.get(ref_key)
                if printed is None:
                    continue
                recomputed = getattr(row, row_attr)
                if printed != recomputed:
                    discrepancy_log.append(
                        {
                            "arxiv_id": row.arxiv_id,
                            "field": ref_key,
                            "printed": printed,
                            "recomputed": recomputed,
                        }
                    )
        def ref_tally(table: str, key: str) -> int:
            return sum(
                1
                for r in referenced
                if r.reference.get("table") == table and (r.reference.get(key) or 0) > 0
            )

        reference_aggregates = {
            "n_matching": sum(
                1 for r in referenced if r.reference.get("table") == CATEGORY_MATCHING
            ),
            "n_differing": sum(
                1 for r in referenced if r.reference.get("table") == CATEGORY_DIFFERING
            ),
            "n_matching_with_missed": ref_tally(CATEGORY_MATCHING, "n_primary_missed"),
            "n_matching_with_extra": ref_tally(CATEGORY_MATCHING, "n_secondary_extra"),
            "n_differing_with_missed": ref_tally(CATEGORY_DIFFERING, "n_primary_missed"),
            "n_differing_with_fresh_extra": ref_tally(
                CATEGORY_DIFFERING, "n_secondary_extra"
            ),
        }
        for key, recomputed in aggregates.items():
            printed = reference_aggregates.get(key)
            if printed is not None and printed != recomputed:
                discrepancy_log.append(
                    {
                        "arxiv_id": "",
                        "field": f"aggregate:{key}",
                        "printed": printed,
                        "recomputed": recomputed,
                    }
                )

    if reported_aggregates:
        for key, reported in reported_aggregates.items():
            recomputed = aggregates.get(key)
            if recomputed is not None and recomputed != reported:
                discrepancy_log.append(
                    {
                        "arxiv_id": "",
                        "field": f"reported:{key}",
                        "printed": reported,
                        "recomputed": recomputed,
                    }
                )

    quality_distribution = {quality_key(v): 0 for v in QUALITY_VALUES}
    unscored = 0
    for row in rows:
        if row.category != CATEGORY_DIFFERING:
            continue
        if row.quality is None:
            unscored += 1
        else:
            quality_distribution[quality_key(row.quality)] += 1

    return RunReport(
        rows=list(rows),
        aggregates=aggregates,
        reference_aggregates=reference_aggregates,
        reported_aggregates=dict(reported_aggregates) if reported_aggregates else None,
        quality_distribution=quality_distribution,
        unscored=unscored,
        discrepancy_log=discrepancy_log,
    )


def _md_cell(value) -> str:
    if isinstance(value, set):
        return " ".join(sorted(value))
    if isinstance(value, list):
        return ", ".join(value)
    if value is None or value == "":
        return "-"
    return str(value)


def _markdown(report: RunReport) -> str:
    lines = [
        f"# MSC classification run report | run {report.run_id or '-'} | {report.created or '-'}",
        "",
    ]
    matching = [r for r in report.rows if r.category == CATEGORY_MATCHING]
    differing = [r for r in report.rows if r.category == CATEGORY_DIFFERING]

    lines.append(f"## Matching classifications ({len(matching)} rows)")
    lines.append("")
    lines.append(
        "| section | arXiv id | arXiv MSC | LLM primary | LLM secondary "
        "| # arXiv MSC | # LLM primary MSC | # primary missed | # secondary extra |"
    )
    lines.append("|---|---|---|---|---|---|---|---|---|")
    for r in sorted(matching, key=lambda r: (r.sampled_under, r.arxiv_id)):
        lines.append(
            "| "
            + " | ".join(
                _md_cell(v)
                for v in (
                    r.sampled_under,
                    r.arxiv_id,
                    r.arxiv_top_set,
                    r.llm_primary,
                    r.llm_secondary,
                    r.n_arxiv_top,
                    r.n_llm_primary_top,
                    r.n_primary_missed or "-",
                    r.n_secondary_extra or "-",
                )
            )
            + " |"
        )
    lines.append("")
    lines.append(f"## Differing classifications ({len(differing)} rows)")
    lines.append("")
    lines.append(
        "| section | arXiv id | arXiv MSC | LLM primary | LLM secondary "
        "| # arXiv MSC | # LLM primary MSC | # LLM primary wrong | quality "
        "| # primary missed | # secondary extra |"
    )
    lines.append("|---|---|---|---|---|---|---|---|---|---|---|")
    for r in sorted(differing, key=lambda r: (r.sampled_under, r.arxiv_id)):
        lines.append(
            "| "
            + " | ".join(
                _md_cell(v)
                for v in (
                    r.sampled_under,
                    r.arxiv_id,
                    r.arxiv_top_set,
                    r.llm_primary,
                    r.llm_secondary,
                    r.n_arxiv_top,
                    r.n_llm_primary_top,
                    r.n_primary_wrong,
                    quality_key(r.quality) if r.quality is not None else "unscored",
                    r.n_primary_missed or "-",
                    r.n_secondary_extra or "-",
                )
            )
            + " |"
        )

    lines.append("")
    lines.append("## Aggregates")
    lines.append("")
    for key, value in report.aggregates.items():
        extra = []
        if report.reference_aggregates and key in report.reference_aggregates:
            extra.append(f"printed-column tally {report.reference_aggregates[key]}")
        if report.reported_aggregates and key in report.reported_aggregates:
            extra.append(f"study-reported {report.reported_aggregates[key]}")
        suffix = f" ({'; '.join(extra)})" if extra else ""
        lines.append(f"- {key}: {value}{suffix}")

    lines.append("")
    lines.append("## Quality score distribution")
    lines.append("")
    for value in sorted(QUALITY_VALUES, reverse=True):
        key = quality_key(value)
        lines.append(
            f"- {key} ({QUALITY_LABELS[value]}): {report.quality_distribution[key]}"
        )
    lines.append(f"- unscored: {report.unscored}")

    lines.append("")
    lines.append("## Discrepancy log")
    lines.append("")
    if not report.discrepancy_log:
        lines.append("- none")
    for entry in report.discrepancy_log:
        where = entry["arxiv_id"] or "(aggregate)"
        lines.append(
            f"- {where}: {entry['field']} printed {entry['printed']}, "
            f"recomputed {entry['recomputed']}"
        )
    lines.append("")
    return "\n".join(lines)


CSV_COLUMNS = [
    "arxiv_id",
    "sampled_under",
    "category",
    "arxiv_top_set",
    "llm_primary",
    "llm_secondary",
    "n_arxiv_top",
    "n_llm_primary_top",
    "n_primary_wrong",
    "n_primary_missed",
    "n_secondary_extra",
    "confidence",
    "quality",
    "reviewer",
    "notes",
]


def _csv(report: RunReport) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for r in sorted(report.rows, key=lambda r: (r.sampled_under, r.arxiv_id)):
        writer.writerow(
            [
                r.arxiv_id,
                r.sampled_under,
                r.category,
                " ".join(sorted(r.arxiv_top_set)),
                " ".join(r.llm_primary),
                " ".join(r.llm_secondary),
                r.n_arxiv_top,
                r.n_llm_primary_top,
                r.n_primary_wrong,
                r.n_primary_missed,
                r.n_secondary_extra,
                r.confidence,
                "" if r.quality is None else r.quality,
                r.reviewer,
                r.notes,
            ]
        )
    return buffer.getvalue()


def emit_report(report: RunReport, fmt: str = "markdown") -> str:
    """Render the report document in markdown or CSV."""
    if fmt == "markdown":
        return _markdown(report)
    if fmt == "csv":
        return _csv(report)
    raise DataError(f"unknown report format: {fmt!r} (markdown or csv)")
