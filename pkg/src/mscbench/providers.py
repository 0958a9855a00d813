"""Chat providers: one capability, send messages and get one reply back.

Messages are dicts with "role" ("user" or "assistant") and "content".
"""

from __future__ import annotations

import json
import logging
import os
import re
import threading
import time
from pathlib import Path

from .errors import DataError, NoCachedTranscriptError, TransportError

logger = logging.getLogger(__name__)

Message = dict[str, str]

_ITEM_ID = re.compile(r'"([^"]+)-Title"')


class ChatProvider:
    """Abstract transport. Subclasses set model_id and concurrency safety."""

    model_id: str = "unknown"
    concurrent_safe: bool = True
    cache_only: bool = False

    def send(self, messages: list[Message]) -> str:
        raise NotImplementedError


class HttpChatProvider(ChatProvider):
    """Chat-completion endpoint speaking the usual messages/choices schema.

    The credential is read from the named environment variable only.
    """

    def __init__(
        self,
        endpoint: str,
        model: str,
        credential_env: str = "MSCBENCH_API_KEY",
        max_retries: int = 3,
        timeout: float = 120.0,
    ):
        self.endpoint = endpoint
        self.model_id = model
        self.credential_env = credential_env
        self.max_retries = max_retries
        self.timeout = timeout

    def send(self, messages: list[Message]) -> str:
        import requests

        headers = {"Content-Type": "application/json"}
        credential = os.environ.get(self.credential_env)
        if credential:
            headers["Authorization"] = f"Bearer {credential}"
        body = {"model": self.model_id, "messages": messages}
        delay = 1.0
        last_error: Exception | None = None
        for attempt in range(self.max_retries + 1):
            try:
                response = requests.post(
                    self.endpoint, json=body, headers=headers, timeout=self.timeout
                )
                if response.status_code in (429, 500, 502, 503, 504):
                    raise TransportError(f"HTTP {response.status_code} from chat endpoint")
                response.raise_for_status()
                payload = response.json()
                return payload["choices"][0]["message"]["content"]
            except Exception as exc:
                last_error = exc
                if attempt == self.max_retries:
                    break
                logger.warning("chat request failed (%s), retry in %.1fs", exc, delay)
                time.sleep(delay)
                delay *= 2
        raise TransportError(f"chat request failed after retries: {last_error}")


class MockChatProvider(ChatProvider):
    """Scripted replies for tests and offline runs.

    The script maps an arXiv id (or "*") to the ordered replies for that
    item's conversation; the item id is read back out of the rendered
    title message.
    """

    model_id = "mock"

    def __init__(self, script: dict[str, list[str]]):
        self.script = {key: list(replies) for key, replies in script.items()}
        self._positions: dict[str, int] = {}
        self._lock = threading.Lock()

    @classmethod
    def from_file(cls, path: str | Path) -> "MockChatProvider":
        try:
            payload = json.loads(Path(path).read_text(encoding="utf-8"))
        except (OSError, json.JSONDecodeError) as exc:
            raise DataError(f"bad mock script {path}: {exc}")
        return cls(payload)

    def _item_key(self, messages: list[Message]) -> str:
        for message in messages:
            match = _ITEM_ID.search(message.get("content", ""))
            if match and match.group(1) in self.script:
                return match.group(1)
        if "*" in self.script:
            return "*"
        raise DataError("mock script has no entry for this conversation")

    def send(self, messages: list[Message]) -> str:
        with self._lock:
            key = self._item_key(messages)
            position = self._positions.get(key, 0)
            replies = self.script[key]
            if position >= len(replies):
                raise DataError(f"mock script for {key!r} exhausted after {position} replies")
            self._positions[key] = position + 1
            return replies[position]


class ReplayChatProvider(ChatProvider):
    """Cache-only mode: the classifier must find a cached transcript.

    Reaching send() means the lookup missed, which is an error here.
    """

    cache_only = True

    def __init__(self, model: str):
        self.model_id = model

    def send(self, messages: list[Message]) -> str:
        raise NoCachedTranscriptError(
            "no cached transcript for this item (replay provider never calls the network)"
        )
