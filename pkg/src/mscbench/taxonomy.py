"""MSC 2020 code grammar, canonicalization, and the shipped code list.

MSC 2020 codes have up to three levels: a two-digit top-level class
("11"), an optional second-level area letter or the special "-" area
("11F", "11-"), and an optional two-digit subtopic ("11F27", "11-02").
A trailing "xx"/"XX" names a level without picking a subtopic and is
comparison-equal to the bare form ("30Fxx" == "30F").
"""

from __future__ import annotations

import enum
import functools
import re
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from types import MappingProxyType
from typing import IO, Iterable, Mapping

from .errors import DataError, MalformedCodeError

_TOP = re.compile(r"^\d{2}$")
_AREA = re.compile(r"^(\d{2})([A-Za-z])$")
_DASH_AREA = re.compile(r"^(\d{2})-$")
_FULL = re.compile(r"^(\d{2})([A-Za-z])(\d{2})$")
_WILD = re.compile(r"^(\d{2})([A-Za-z])[xX]{2}$")
_DASH_FULL = re.compile(r"^(\d{2})-(\d{2})$")
_DASH_WILD = re.compile(r"^(\d{2})-[xX]{2}$")

# Maximal alphanumeric-plus-hyphen runs are the only extraction candidates;
# requiring the whole run to parse keeps fragments of arXiv identifiers
# ("2403.05604" splits into "2403" and "05604") from matching.
_TOKEN_RUN = re.compile(r"[0-9A-Za-z-]+")

# Code-shaped tokens that fail the grammar ("85A-XX", "58A5") are reported
# as malformed candidates; longer hyphenated prose ("40-year-old") is not.
_NEAR_MISS = re.compile(r"^\d{2}[A-Za-z-][A-Za-z0-9-]{1,4}$")


class ValidationStatus(enum.Enum):
    KNOWN = "known"
    UNKNOWN_CODE = "unknown_code"
    MALFORMED = "malformed"


@dataclass(frozen=True)
class MscCode:
    """A parsed MSC 2020 code.

    ``wildcard_sub`` records that the source text spelled an explicit
    "xx" third level; it is excluded from equality because the wildcard
    form and the bare form name the same class.
    """

    top: str
    area: str | None = None
    subtopic: str | None = None
    wildcard_sub: bool = field(default=False, compare=False)

    def __post_init__(self) -> None:
        if not _TOP.match(self.top):
            raise ValueError(f"top must be two digits, got {self.top!r}")
        if self.area is not None and not re.match(r"^[A-Z-]$", self.area):
            raise ValueError(f"area must be A-Z or '-', got {self.area!r}")
        if self.subtopic is not None:
            if self.area is None:
                raise ValueError("subtopic requires an area")
            if not re.match(r"^\d{2}$", self.subtopic):
                raise ValueError(f"subtopic must be two digits, got {self.subtopic!r}")

    @property
    def level(self) -> int:
        if self.area is None:
            return 1
        if self.subtopic is None:
            return 2
        return 3

    def __str__(self) -> str:
        return canonical(self)


def parse_code(text: str) -> MscCode:
    """Parse one MSC 2020 code, raising MalformedCodeError otherwise.

    Accepted shapes: "11", "11F", "11-", "11F27", "11-02", and the
    wildcard spellings "11Fxx" and "11-xx" (case-insensitive). "11-xx"
    counts as the plain top-level class. Surrounding whitespace is
    ignored; anything else, including hybrids like "85A-XX", is
    malformed.
    """
    token = text.strip()
    if _TOP.match(token):
        return MscCode(top=token)
    m = _AREA.match(token)
    if m:
        return MscCode(top=m.group(1), area=m.group(2).upper())
    m = _DASH_AREA.match(token)
    if m:
        return MscCode(top=m.group(1), area="-")
    m = _FULL.match(token)
    if m:
        return MscCode(top=m.group(1), area=m.group(2).upper(), subtopic=m.group(3))
    m = _WILD.match(token)
    if m:
        return MscCode(top=m.group(1), area=m.group(2).upper(), wildcard_sub=True)
    m = _DASH_FULL.match(token)
    if m:
        return MscCode(top=m.group(1), area="-", subtopic=m.group(2))
    m = _DASH_WILD.match(token)
    if m:
        return MscCode(top=m.group(1), wildcard_sub=True)
    raise MalformedCodeError(f"not an MSC 2020 code: {text!r}")


def try_parse_code(text: str) -> MscCode | None:
    try:
        return parse_code(text)
    except MalformedCodeError:
        return None


def canonical(code: MscCode) -> str:
    """Uppercase canonical rendering; wildcard levels render bare ("30F")."""
    return code.top + (code.area or "") + (code.subtopic or "")


def top_level(code: MscCode) -> MscCode:
    """Project onto the two-digit class. Idempotent."""
    return MscCode(top=code.top)


@dataclass(frozen=True)
class Taxonomy:
    """Immutable lookup of canonical code string to description."""

    entries: Mapping[str, str]
    level_counts: tuple[int, int, int]

    def __contains__(self, code_str: str) -> bool:
        return code_str in self.entries

    def describe(self, code_str: str) -> str | None:
        return self.entries.get(code_str)

    def top_level_classes(self) -> list[str]:
        return sorted(c for c in self.entries if len(c) == 2)


def validate(code: MscCode, taxonomy: Taxonomy) -> ValidationStatus:
    """KNOWN when the canonical form is a taxonomy entry, else UNKNOWN_CODE.

    Wildcard subtopics canonicalize to the bare second-level form, so
    "30Fxx" validates through the "30F" entry.
    """
    if canonical(code) in taxonomy.entries:
        return ValidationStatus.KNOWN
    return ValidationStatus.UNKNOWN_CODE


def scan_candidates(
    text: str,
) -> list[tuple[str, tuple[int, int], MscCode | None]]:
    """Find code-shaped tokens: parsed codes plus near-miss malformed ones.

    Returns (token, span, code-or-None) in text order. A None code marks
    a token that looks like an MSC code but fails the grammar.
    """
    out: list[tuple[str, tuple[int, int], MscCode | None]] = []
    for m in _TOKEN_RUN.finditer(text):
        token = m.group()
        code = try_parse_code(token)
        if code is not None:
            out.append((token, m.span(), code))
        elif _NEAR_MISS.match(token):
            out.append((token, m.span(), None))
    return out


def extract_codes(
    free_text: str, taxonomy: Taxonomy
) -> list[tuple[MscCode, ValidationStatus, tuple[int, int]]]:
    """Extract every well-formed MSC code from prose, with validation.

    Spans are non-overlapping and strictly increasing; each extracted
    span re-parses to the same code.
    """
    return [
        (code, validate(code, taxonomy), span)
        for _token, span, code in scan_candidates(free_text)
        if code is not None
    ]


def _iter_lines(source: str | Path | IO[str]) -> Iterable[tuple[int, str]]:
    if hasattr(source, "read"):
        text = source.read()  # type: ignore[union-attr]
    else:
        path = Path(source)
        if not path.exists():
            raise DataError(f"taxonomy file not found: {path}")
        text = path.read_text(encoding="utf-8")
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        yield lineno, stripped


def load_taxonomy(source: str | Path | IO[str]) -> Taxonomy:
    """Load a two-column (code, description) list into a Taxonomy.

    Tab is the primary delimiter with semicolon accepted as a fallback.
    Duplicate codes, non-canonical codes, and orphans (an entry whose
    parent level is missing) are data errors reported with line numbers.
    """
    entries: dict[str, str] = {}
    line_of: dict[str, int] = {}
    for lineno, line in _iter_lines(source):
        if "\t" in line:
            code_str, _, description = line.partition("\t")
        elif ";" in line:
            code_str, _, description = line.partition(";")
        else:
            code_str, description = line, ""
        code_str = code_str.strip()
        description = description.strip()
        code = try_parse_code(code_str)
        if code is None:
            raise DataError(f"line {lineno}: malformed code {code_str!r}")
        if canonical(code) != code_str:
            raise DataError(
                f"line {lineno}: non-canonical code {code_str!r} "
                f"(expected {canonical(code)!r})"
            )
        if code_str in entries:
            raise DataError(
                f"line {lineno}: duplicate code {code_str!r} "
                f"(first seen at line {line_of[code_str]})"
            )
        entries[code_str] = description
        line_of[code_str] = lineno

    counts = [0, 0, 0]
    for code_str in entries:
        level = 1 if len(code_str) == 2 else 2 if len(code_str) == 3 else 3
        counts[level - 1] += 1
        parent = code_str[:3] if level == 3 else code_str[:2] if level == 2 else None
        if parent is not None and parent not in entries:
            raise DataError(
                f"line {line_of[code_str]}: orphan code {code_str!r}: "
                f"missing parent entry {parent!r}"
            )

    return Taxonomy(
        entries=MappingProxyType(dict(sorted(entries.items()))),
        level_counts=(counts[0], counts[1], counts[2]),
    )


def default_taxonomy_path() -> Path:
    return Path(str(resources.files("mscbench") / "data" / "msc2020.tsv"))


@functools.lru_cache(maxsize=1)
def shipped_taxonomy() -> Taxonomy:
    """The MSC 2020 code list bundled with the package, loaded once."""
    return load_taxonomy(default_taxonomy_path())
