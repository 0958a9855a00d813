"""arXiv Atom API client with an on-disk response cache.

Queries use the class code as an all-fields term sorted by submission
date, which approximates the site's MSC search. Raw Atom documents are
cached keyed by query string so sampling is replayable offline. Live
requests honor a minimum inter-request delay and retry with exponential
backoff on transient failures.
"""

from __future__ import annotations

import hashlib
import logging
import os
import threading
import time
import xml.etree.ElementTree as ET
from pathlib import Path

from .errors import DataError, TransportError

logger = logging.getLogger(__name__)

DEFAULT_BASE_URL = "https://export.arxiv.org/api/query"
BASE_URL_ENV = "MSCBENCH_ARXIV_URL"

ATOM_NS = {
    "atom": "http://www.w3.org/2005/Atom",
    "arxiv": "http://arxiv.org/schemas/atom",
}

# arXiv subject tags like "math.AG" or "cs.AI"; any other category term
# is treated as a candidate MSC field.
_CATEGORY_SHAPE = r"^[a-z-]+(\.[A-Za-z-]+)?$"


def _looks_like_arxiv_category(term: str) -> bool:
    import re

    return bool(re.match(_CATEGORY_SHAPE, term))


def _strip_version(arxiv_id: str) -> str:
    import re

    return re.sub(r"v\d+$", "", arxiv_id)


def parse_atom_feed(xml_text: str) -> list[dict]:
    """Parse an arXiv Atom document into entry dicts, newest first.

    Each entry carries: arxiv_id, title, abstract, submitted, comment,
    categories, msc_field (joined non-category terms), withdrawn.
    """
    try:
        root = ET.fromstring(xml_text)
    except ET.ParseError as exc:
        raise DataError(f"bad Atom document: {exc}")
    entries = []
    for node in root.findall("atom:entry", ATOM_NS):
        id_el = node.find("atom:id", ATOM_NS)
        raw_id = (id_el.text or "").strip() if id_el is not None else ""
        arxiv_id = _strip_version(raw_id.rsplit("/abs/", 1)[-1])
        title_el = node.find("atom:title", ATOM_NS)
        summary_el = node.find("atom:summary", ATOM_NS)
        published_el = node.find("atom:published", ATOM_NS)
        comment_el = node.find("arxiv:comment", ATOM_NS)
        comment = (comment_el.text or "").strip() if comment_el is not None else ""
        categories = []
        msc_terms = []
        for cat in node.findall("atom:category", ATOM_NS):
            term = (cat.get("term") or "").strip()
            if not term:
                continue
            if _looks_like_arxiv_category(term):
                categories.append(term)
            else:
                msc_terms.append(term)
        entries.append(
            {
                "arxiv_id": arxiv_id,
                "title": (title_el.text or "").strip() if title_el is not None else "",
                "abstract": (summary_el.text or "").strip() if summary_el is not None else "",
                "submitted": (published_el.text or "").strip() if published_el is not None else "",
                "comment": comment,
                "categories": categories,
                "msc_field": "; ".join(msc_terms),
                "withdrawn": "withdrawn" in comment.lower(),
            }
        )
    return entries


class ArxivClient:
    """Fetch per-class query results, with caching and rate limiting."""

    def __init__(
        self,
        cache_dir: str | Path,
        base_url: str | None = None,
        cache_only: bool = False,
        max_results: int = 25,
        min_interval: float = 3.0,
        max_retries: int = 3,
        timeout: float = 30.0,
    ):
        self.cache_dir = Path(cache_dir)
        self.cache_dir.mkdir(parents=True, exist_ok=True)
        self.base_url = base_url or os.environ.get(BASE_URL_ENV, DEFAULT_BASE_URL)
        self.cache_only = cache_only
        self.max_results = max_results
        self.min_interval = min_interval
        self.max_retries = max_retries
        self.timeout = timeout
        self._lock = threading.Lock()
        self._last_request = 0.0

    def query_params(self, top: str) -> dict[str, str]:
        return {
            "search_query": f'all:"{top}"',
            "sortBy": "submittedDate",
            "sortOrder": "descending",
            "start": "0",
            "max_results": str(self.max_results),
        }

    def _cache_path(self, top: str) -> Path:
        key = "&".join(f"{k}={v}" for k, v in sorted(self.query_params(top).items()))
        digest = hashlib.sha256(key.encode("utf-8")).hexdigest()[:24]
        return self.cache_dir / f"class-{top}-{digest}.xml"

    def _throttle(self) -> None:
        with self._lock:
            wait = self._last_request + self.min_interval - time.monotonic()
            if wait > 0:
                time.sleep(wait)
            self._last_request = time.monotonic()

    def _fetch_live(self, top: str) -> str:
        import requests

        params = self.query_params(top)
        delay = 1.0
        last_error: Exception | None = None
        for attempt in range(self.max_retries + 1):
            self._throttle()
            try:
                response = requests.get(self.base_url, params=params, timeout=self.timeout)
                if response.status_code in (429, 500, 502, 503, 504):
                    raise TransportError(f"HTTP {response.status_code} from arXiv API")
                response.raise_for_status()
                return response.text
            except Exception as exc:
                last_error = exc
                if attempt == self.max_retries:
                    break
                logger.warning(
                    "arXiv query for class %s failed (%s), retry in %.1fs", top, exc, delay
                )
                time.sleep(delay)
                delay *= 2
        raise TransportError(f"arXiv query for class {top} failed: {last_error}")

    def search_class(self, top: str) -> list[dict]:
        """Entries for one class query, from cache when available."""
        path = self._cache_path(top)
        if path.exists():
            return parse_atom_feed(path.read_text(encoding="utf-8"))
        if self.cache_only:
            raise DataError(f"no cached arXiv response for class {top} in {self.cache_dir}")
        text = self._fetch_live(top)
        path.write_text(text, encoding="utf-8")
        return parse_atom_feed(text)
