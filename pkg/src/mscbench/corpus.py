"""Sample construction: one most-recent arXiv item per top-level MSC class.

Text normalization mirrors what was done to cut-and-pasted abstracts:
ligature control characters expanded, hyphenation at line breaks joined,
whitespace collapsed.
"""

from __future__ import annotations

import logging
import re
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from datetime import datetime, timezone

from .errors import DataError
from .taxonomy import MscCode, canonical, top_level, try_parse_code

logger = logging.getLogger(__name__)

LIGATURES = {
    "ﬀ": "ff",
    "ﬁ": "fi",
    "ﬂ": "fl",
    "ﬃ": "ffi",
    "ﬄ": "ffl",
}

_HYPHEN_BREAK = re.compile(r"(\w)-[ \t]*\n\s*(\w)")
_WS = re.compile(r"\s+")

ABSTRACT_SOURCES = ("user_supplied", "metadata", "summary_section", "introduction")

_QUALIFIER = re.compile(r"\b(primary|secondary|prim|sec)\b", re.IGNORECASE)


def normalize_text(raw: str) -> str:
    """Expand ligatures, join line-break hyphenation, collapse whitespace."""
    text = raw
    for ligature, expansion in LIGATURES.items():
        text = text.replace(ligature, expansion)
    text = _HYPHEN_BREAK.sub(r"\1\2", text)
    text = _WS.sub(" ", text)
    return text.strip()


def parse_ground_truth(raw_field: str) -> list[MscCode]:
    """Parse an arXiv-supplied MSC field into codes, salvaging what it can.

    Splits on semicolons, commas, and whitespace; strips parentheses and
    the Primary/Secondary qualifier words. Tokens that fail the grammar
    but start with two digits are salvaged to their top-level class with
    a warning; anything else is logged and dropped.
    """
    cleaned = _QUALIFIER.sub(" ", raw_field)
    codes: list[MscCode] = []
    for token in re.split(r"[;,\s]+", cleaned):
        token = token.strip("()")
        if not token:
            continue
        code = try_parse_code(token)
        if code is not None:
            codes.append(code)
            continue
        if re.match(r"^\d{2}", token):
            salvaged = MscCode(top=token[:2])
            logger.warning(
                "ground-truth token %r salvaged to top-level %s", token, salvaged.top
            )
            codes.append(salvaged)
        else:
            logger.warning("ground-truth token %r dropped (unparseable)", token)
    return codes


def top_level_set(codes: list[MscCode]) -> set[str]:
    return {top_level(c).top for c in codes}


@dataclass
class PaperItem:
    """One sampled arXiv preprint."""

    arxiv_id: str
    title: str
    abstract_text: str
    abstract_source: str
    ground_truth: list[MscCode]
    sampled_under: list[str]
    submitted: str
    withdrawn: bool = False

    @property
    def ground_truth_tops(self) -> set[str]:
        return top_level_set(self.ground_truth)

    def to_dict(self) -> dict:
        return {
            "arxiv_id": self.arxiv_id,
            "title": self.title,
            "abstract_text": self.abstract_text,
            "abstract_source": self.abstract_source,
            "ground_truth": [canonical(c) for c in self.ground_truth],
            "sampled_under": list(self.sampled_under),
            "submitted": self.submitted,
            "withdrawn": self.withdrawn,
        }

    @classmethod
    def from_dict(cls, payload: dict) -> "PaperItem":
        ground_truth = []
        for raw in payload.get("ground_truth", []):
            code = try_parse_code(raw)
            if code is not None:
                ground_truth.append(code)
        return cls(
            arxiv_id=payload["arxiv_id"],
            title=payload.get("title", ""),
            abstract_text=payload.get("abstract_text", ""),
            abstract_source=payload.get("abstract_source", "metadata"),
            ground_truth=ground_truth,
            sampled_under=list(payload.get("sampled_under", [])),
            submitted=payload.get("submitted", ""),
            withdrawn=payload.get("withdrawn", False),
        )


@dataclass
class SampleSet:
    items: list[PaperItem] = field(default_factory=list)
    cutoff: str = ""
    excluded_classes: list[str] = field(default_factory=list)
    unserved_classes: dict[str, str] = field(default_factory=dict)

    @property
    def class_to_item(self) -> dict[str, str]:
        mapping: dict[str, str] = {}
        for item in self.items:
            for top in item.sampled_under:
                mapping[top] = item.arxiv_id
        return mapping

    def to_dict(self) -> dict:
        return {
            "items": [item.to_dict() for item in self.items],
            "cutoff": self.cutoff,
            "excluded_classes": list(self.excluded_classes),
            "unserved_classes": dict(self.unserved_classes),
        }

    @classmethod
    def from_dict(cls, payload: dict) -> "SampleSet":
        return cls(
            items=[PaperItem.from_dict(p) for p in payload.get("items", [])],
            cutoff=payload.get("cutoff", ""),
            excluded_classes=list(payload.get("excluded_classes", [])),
            unserved_classes=dict(payload.get("unserved_classes", {})),
        )


def resolve_abstract(
    metadata: dict[str, str | None], user_text: str | None = None
) -> tuple[str, str]:
    """Pick the classification text by priority and normalize it.

    Priority: user-supplied text, then the metadata abstract, then a
    summary section, then the introduction.
    """
    candidates = [
        (user_text, "user_supplied"),
        (metadata.get("abstract"), "metadata"),
        (metadata.get("summary_section"), "summary_section"),
        (metadata.get("introduction"), "introduction"),
    ]
    for text, source in candidates:
        if text and text.strip():
            return normalize_text(text), source
    raise DataError("nothing to classify: no abstract, summary, or user text")


def _parse_timestamp(value: str) -> datetime:
    try:
        parsed = datetime.fromisoformat(value.replace("Z", "+00:00"))
    except ValueError:
        raise DataError(f"bad timestamp: {value!r}")
    if parsed.tzinfo is None:
        parsed = parsed.replace(tzinfo=timezone.utc)
    return parsed


def fetch_latest_for_class(top: MscCode, cutoff: str, client) -> PaperItem | None:
    """Newest non-withdrawn item at or before the cutoff for one class.

    The client performs the arXiv query (newest first). Entries are
    skipped when withdrawn, past the cutoff, or carrying no ground truth
    that includes the queried class. Returns None when nothing matches.
    """
    cutoff_dt = _parse_timestamp(cutoff)
    for entry in client.search_class(top.top):
        if entry.get("withdrawn"):
            logger.info("class %s: skipping withdrawn %s", top.top, entry.get("arxiv_id"))
            continue
        submitted = entry.get("submitted") or ""
        if submitted and _parse_timestamp(submitted) > cutoff_dt:
            continue
        ground_truth = parse_ground_truth(entry.get("msc_field") or "")
        tops = top_level_set(ground_truth)
        if not tops:
            logger.info(
                "class %s: skipping %s (no MSC ground truth)",
                top.top,
                entry.get("arxiv_id"),
            )
            continue
        if top.top not in tops:
            logger.info(
                "class %s: skipping %s (class not among its MSC codes)",
                top.top,
                entry.get("arxiv_id"),
            )
            continue
        abstract_text, abstract_source = resolve_abstract(
            {"abstract": entry.get("abstract")}
        )
        return PaperItem(
            arxiv_id=entry["arxiv_id"],
            title=normalize_text(entry.get("title") or ""),
            abstract_text=abstract_text,
            abstract_source=abstract_source,
            ground_truth=ground_truth,
            sampled_under=[top.top],
            submitted=submitted,
            withdrawn=False,
        )
    return None


def build_sample(
    taxonomy,
    cutoff: str,
    exclusions: list[str],
    client,
    only: list[str] | None = None,
    concurrency: int = 4,
) -> SampleSet:
    """One item per non-excluded class, deduplicated by arXiv id.

    An item topping several classes appears once with all of them in
    ``sampled_under``. Per-class failures are recorded and do not abort
    the other classes.
    """
    classes = [c for c in taxonomy.top_level_classes() if c not in set(exclusions)]
    if only is not None:
        wanted = set(only)
        classes = [c for c in classes if c in wanted]

    results: dict[str, PaperItem | None] = {}
    failures: dict[str, str] = {}

    def fetch(top: str) -> None:
        try:
            results[top] = fetch_latest_for_class(MscCode(top=top), cutoff, client)
        except Exception as exc:  # per-class isolation
            logger.warning("class %s: fetch failed: %s", top, exc)
            failures[top] = str(exc)
            results[top] = None

    with ThreadPoolExecutor(max_workers=max(1, concurrency)) as pool:
        list(pool.map(fetch, classes))

    sample = SampleSet(cutoff=cutoff, excluded_classes=sorted(exclusions))
    by_id: dict[str, PaperItem] = {}
    for top in classes:
        item = results.get(top)
        if item is None:
            sample.unserved_classes[top] = failures.get(top, "no results")
            continue
        existing = by_id.get(item.arxiv_id)
        if existing is not None:
            if top not in existing.sampled_under:
                existing.sampled_under.append(top)
            continue
        by_id[item.arxiv_id] = item
        sample.items.append(item)
    return sample
