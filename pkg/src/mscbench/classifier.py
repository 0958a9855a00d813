"""Prompting protocol and reply parsing for one item's classification.

The conversation names the title and abstract after the arXiv id, asks
for an MSC 2020 classification, and requests secondary classes once if
the first reply gave none.
"""

from __future__ import annotations

import hashlib
import json
import logging
import re
from dataclasses import dataclass, field
from importlib import resources

from .corpus import PaperItem
from .errors import DataError, NoCachedTranscriptError
from .providers import ChatProvider, Message
from .taxonomy import (
    MscCode,
    Taxonomy,
    ValidationStatus,
    canonical,
    parse_code,
    scan_candidates,
    shipped_taxonomy,
    validate,
)

logger = logging.getLogger(__name__)

DEFAULT_TITLE_TEMPLATE = 'Call the following text "{arxiv_id}-Title": {title}'
DEFAULT_ABSTRACT_TEMPLATE = 'Call the following text "{arxiv_id}-Abstract": {abstract}'
DEFAULT_CLASSIFY_TEMPLATE = (
    'Given the title "{arxiv_id}-Title" and abstract "{arxiv_id}-Abstract" '
    "classify the text according to the MSC 2020 classification."
)
DEFAULT_SECONDARY_FOLLOWUP = (
    "Please also give the secondary MSC 2020 classifications for the text."
)
DEFAULT_BROADEN_FOLLOWUP = "Are there additional relevant MSC 2020 areas for this text?"

CONFIDENCE_DEFINITIVE = "definitive"
CONFIDENCE_HEDGED = "hedged"
CONFIDENCE_REFUSAL = "refusal"


@dataclass(frozen=True)
class PromptProtocol:
    title_template: str = DEFAULT_TITLE_TEMPLATE
    abstract_template: str = DEFAULT_ABSTRACT_TEMPLATE
    classify_template: str = DEFAULT_CLASSIFY_TEMPLATE
    secondary_followup: str = DEFAULT_SECONDARY_FOLLOWUP
    broaden_followup: str = DEFAULT_BROADEN_FOLLOWUP

    def hash(self) -> str:
        joined = "\x00".join(
            (
                self.title_template,
                self.abstract_template,
                self.classify_template,
                self.secondary_followup,
                self.broaden_followup,
            )
        )
        return hashlib.sha256(joined.encode("utf-8")).hexdigest()[:16]


def _load_cues() -> dict[str, list[str]]:
    path = resources.files("mscbench") / "data" / "confidence_cues.json"
    return json.loads(path.read_text(encoding="utf-8"))


_CUES = _load_cues()


@dataclass
class ClassificationOutcome:
    primary: list[MscCode] = field(default_factory=list)
    secondary: list[MscCode] = field(default_factory=list)
    confidence: str = CONFIDENCE_DEFINITIVE
    refusal_text: str | None = None
    validation_flags: list[tuple[str, str]] = field(default_factory=list)
    transcript: list[tuple[str, str]] = field(default_factory=list)

    @property
    def primary_tops(self) -> set[str]:
        return {c.top for c in self.primary}

    @property
    def secondary_tops(self) -> set[str]:
        return {c.top for c in self.secondary}

    def to_dict(self) -> dict:
        return {
            "primary": [canonical(c) for c in self.primary],
            "secondary": [canonical(c) for c in self.secondary],
            "confidence": self.confidence,
            "refusal_text": self.refusal_text,
            "validation_flags": [list(flag) for flag in self.validation_flags],
            "transcript": [list(pair) for pair in self.transcript],
        }

    @classmethod
    def from_dict(cls, payload: dict) -> "ClassificationOutcome":
        return cls(
            primary=[parse_code(c) for c in payload.get("primary", [])],
            secondary=[parse_code(c) for c in payload.get("secondary", [])],
            confidence=payload.get("confidence", CONFIDENCE_DEFINITIVE),
            refusal_text=payload.get("refusal_text"),
            validation_flags=[tuple(f) for f in payload.get("validation_flags", [])],
            transcript=[tuple(p) for p in payload.get("transcript", [])],
        )


def render_prompts(item: PaperItem, protocol: PromptProtocol) -> list[Message]:
    """The three opening messages: title, abstract, classification request."""
    if not item.title.strip():
        raise DataError(f"item {item.arxiv_id} has an empty title")
    if not item.abstract_text.strip():
        raise DataError(f"item {item.arxiv_id} has an empty abstract")
    values = {
        "arxiv_id": item.arxiv_id,
        "title": item.title,
        "abstract": item.abstract_text,
    }
    return [
        {"role": "user", "content": protocol.title_template.format(**values)},
        {"role": "user", "content": protocol.abstract_template.format(**values)},
        {"role": "user", "content": protocol.classify_template.format(**values)},
    ]


def detect_confidence(reply: str) -> str:
    """Refusal, hedged, or definitive, from configurable wording cues.

    Refusal needs a refusal cue and no extractable codes; hedging cues
    alone make a reply hedged. Cue matching collapses whitespace so
    wrapped lines still match.
    """
    lowered = " ".join(reply.lower().split())
    has_codes = any(code is not None for _t, _s, code in scan_candidates(reply))
    if not has_codes and any(cue in lowered for cue in _CUES["refusal"]):
        return CONFIDENCE_REFUSAL
    if any(cue in lowered for cue in _CUES["hedged"]):
        return CONFIDENCE_HEDGED
    return CONFIDENCE_DEFINITIVE


_LABEL = re.compile(r"\b(primary|secondary)\b", re.IGNORECASE)
_SENTENCE_BOUND = frozenset(".!?\n")
_CLAUSE_BOUND = frozenset(",.;!?\n")


def _code_regions(
    reply: str, default_region: str
) -> list[tuple[str, MscCode | None, str]]:
    """Assign each code-shaped token in a reply to primary or secondary.

    A code takes the nearest preceding label in its sentence, or a label
    that follows it within the same clause ("74B20 secondary"). Unlabeled
    codes default by position: in a first reply the first code-bearing
    sentence is primary and the rest secondary; in follow-up replies
    everything unlabeled is secondary.
    """
    labels = [(m.start(), m.group(1).lower()) for m in _LABEL.finditer(reply)]
    hits = scan_candidates(reply)
    assigned: list[tuple[str, MscCode | None, str | None]] = []
    for token, (start, end), code in hits:
        region: str | None = None
        preceding = [lb for lb in labels if lb[0] < start]
        if preceding:
            pos, label = preceding[-1]
            if not any(ch in _SENTENCE_BOUND for ch in reply[pos:start]):
                region = label
        if region is None:
            trailing = _LABEL.search(reply, end)
            if trailing is not None and not any(
                ch in _CLAUSE_BOUND for ch in reply[end : trailing.start()]
            ):
                region = trailing.group(1).lower()
        assigned.append((token, code, region))

    if default_region == "secondary":
        return [(t, c, r or "secondary") for t, c, r in assigned]

    first_sentence_end = len(reply)
    for token, (start, end), code in hits:
        if code is not None:
            for i in range(end, len(reply)):
                if reply[i] in _SENTENCE_BOUND:
                    first_sentence_end = i
                    break
            break
    out: list[tuple[str, MscCode | None, str]] = []
    for (token, code, region), (_t, (start, _end), _c) in zip(assigned, hits):
        if region is None:
            region = "primary" if start <= first_sentence_end else "secondary"
        out.append((token, code, region))
    return out


def parse_outcome(
    replies: list[str], taxonomy: Taxonomy | None = None
) -> ClassificationOutcome:
    """Structure raw replies into primary/secondary codes plus flags.

    Well-formed but unknown codes stay in the lists and are flagged;
    malformed code-shaped tokens are only flagged. Duplicates keep their
    first occurrence. Zero codes overall means a refusal.
    """
    if not replies:
        raise DataError("parse_outcome needs at least one reply")
    taxonomy = taxonomy or shipped_taxonomy()
    outcome = ClassificationOutcome()
    seen: set[str] = set()
    flagged: set[str] = set()
    for index, reply in enumerate(replies):
        default_region = "primary" if index == 0 else "secondary"
        for token, code, region in _code_regions(reply, default_region):
            if code is None:
                if token not in flagged:
                    outcome.validation_flags.append((token, "malformed"))
                    flagged.add(token)
                continue
            key = canonical(code)
            if key in seen:
                continue
            seen.add(key)
            if validate(code, taxonomy) is ValidationStatus.UNKNOWN_CODE:
                outcome.validation_flags.append((key, "unknown_code"))
            target = outcome.primary if region == "primary" else outcome.secondary
            target.append(code)

    if not outcome.primary and not outcome.secondary:
        outcome.confidence = CONFIDENCE_REFUSAL
        outcome.refusal_text = "\n\n".join(replies).strip()
        return outcome

    confidence = detect_confidence(replies[0])
    outcome.confidence = (
        CONFIDENCE_HEDGED if confidence == CONFIDENCE_HEDGED else CONFIDENCE_DEFINITIVE
    )
    return outcome


def classify(
    item: PaperItem,
    provider: ChatProvider,
    protocol: PromptProtocol,
    taxonomy: Taxonomy | None = None,
    store=None,
    use_cache: bool = True,
    broaden: bool = False,
) -> ClassificationOutcome:
    """Run one item's conversation and parse it into an outcome.

    A cached transcript (keyed by item id, protocol hash, and model id)
    is replayed instead of calling the provider; fresh conversations are
    cached on completion. Exactly one secondary follow-up is sent when
    the first reply has primary codes but no secondary ones.
    """
    taxonomy = taxonomy or shipped_taxonomy()
    key = (item.arxiv_id, protocol.hash(), provider.model_id)
    cached = store.cache_lookup(key) if (store is not None and use_cache) else None

    if cached is not None:
        replies = [reply for _prompt, reply in cached.pairs]
        outcome = parse_outcome(replies, taxonomy)
        outcome.transcript = list(cached.pairs)
        return outcome

    if provider.cache_only:
        raise NoCachedTranscriptError(
            f"no cached transcript for {item.arxiv_id} "
            f"(protocol {key[1]}, model {provider.model_id})"
        )

    messages = render_prompts(item, protocol)
    transcript: list[tuple[str, str]] = []

    reply = provider.send(messages)
    transcript.append(("\n\n".join(m["content"] for m in messages), reply))
    messages.append({"role": "assistant", "content": reply})
    replies = [reply]

    interim = parse_outcome(replies, taxonomy)
    if interim.primary and not interim.secondary:
        messages.append({"role": "user", "content": protocol.secondary_followup})
        followup_reply = provider.send(messages)
        transcript.append((protocol.secondary_followup, followup_reply))
        messages.append({"role": "assistant", "content": followup_reply})
        replies.append(followup_reply)

    if broaden:
        messages.append({"role": "user", "content": protocol.broaden_followup})
        broaden_reply = provider.send(messages)
        transcript.append((protocol.broaden_followup, broaden_reply))
        replies.append(broaden_reply)

    outcome = parse_outcome(replies, taxonomy)
    outcome.transcript = transcript
    if store is not None:
        try:
            store.cache_put(key, transcript)
        except DataError:
            logger.debug("transcript for %s already cached by a concurrent writer", key)
    return outcome
