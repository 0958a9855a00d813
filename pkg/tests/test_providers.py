from __future__ import annotations

import json
import threading
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer

import pytest

from mscbench.errors import DataError, TransportError
from mscbench.providers import HttpChatProvider, MockChatProvider, ReplayChatProvider


class ScriptedHandler(BaseHTTPRequestHandler):
    """Serves queued (status, body) responses and records request bodies."""

    script: list[tuple[int, dict]] = []
    requests: list[dict] = []

    def do_POST(self):
        length = int(self.headers.get("Content-Length", "0"))
        body = json.loads(self.rfile.read(length) or b"{}")
        ScriptedHandler.requests.append(
            {"body": body, "authorization": self.headers.get("Authorization")}
        )
        status, payload = (
            ScriptedHandler.script.pop(0) if ScriptedHandler.script else (200, {})
        )
        encoded = json.dumps(payload).encode("utf-8")
        self.send_response(status)
        self.send_header("Content-Type", "application/json")
        self.send_header("Content-Length", str(len(encoded)))
        self.end_headers()
        self.wfile.write(encoded)

    def log_message(self, *args):
        pass


@pytest.fixture()
def chat_server():
    server = ThreadingHTTPServer(("127.0.0.1", 0), ScriptedHandler)
    thread = threading.Thread(target=server.serve_forever, daemon=True)
    thread.start()
    ScriptedHandler.script = []
    ScriptedHandler.requests = []
    yield f"http://127.0.0.1:{server.server_address[1]}/v1/chat/completions"
    server.shutdown()


def reply_payload(text: str) -> dict:
    return {"choices": [{"message": {"role": "assistant", "content": text}}]}


MESSAGES = [{"role": "user", "content": "Classify this."}]


class TestHttpChatProvider:
    def test_round_trip(self, chat_server):
        ScriptedHandler.script = [(200, reply_payload("Primary: 22E50."))]
        provider = HttpChatProvider(chat_server, model="test-model")
        assert provider.send(MESSAGES) == "Primary: 22E50."
        sent = ScriptedHandler.requests[0]["body"]
        assert sent["model"] == "test-model"
        assert sent["messages"] == MESSAGES

    def test_credential_from_environment_only(self, chat_server, monkeypatch):
        monkeypatch.setenv("TEST_CHAT_KEY", "sekrit")
        ScriptedHandler.script = [(200, reply_payload("ok"))]
        provider = HttpChatProvider(chat_server, "m", credential_env="TEST_CHAT_KEY")
        provider.send(MESSAGES)
        assert ScriptedHandler.requests[0]["authorization"] == "Bearer sekrit"

    def test_no_credential_means_no_header(self, chat_server, monkeypatch):
        monkeypatch.delenv("MSCBENCH_API_KEY", raising=False)
        ScriptedHandler.script = [(200, reply_payload("ok"))]
        HttpChatProvider(chat_server, "m").send(MESSAGES)
        assert ScriptedHandler.requests[0]["authorization"] is None

    def test_retries_transient_errors(self, chat_server, monkeypatch):
        monkeypatch.setattr("time.sleep", lambda _s: None)
        ScriptedHandler.script = [
            (503, {}),
            (429, {}),
            (200, reply_payload("recovered")),
        ]
        provider = HttpChatProvider(chat_server, "m", max_retries=3)
        assert provider.send(MESSAGES) == "recovered"
        assert len(ScriptedHandler.requests) == 3

    def test_gives_up_after_bounded_retries(self, chat_server, monkeypatch):
        monkeypatch.setattr("time.sleep", lambda _s: None)
        ScriptedHandler.script = [(500, {})] * 10
        provider = HttpChatProvider(chat_server, "m", max_retries=2)
        with pytest.raises(TransportError, match="after retries"):
            provider.send(MESSAGES)
        assert len(ScriptedHandler.requests) == 3  # initial try + 2 retries


class TestMockChatProvider:
    def test_replies_in_order_per_item(self):
        provider = MockChatProvider({"2404.00001": ["one", "two"]})
        messages = [{"role": "user", "content": 'Call the following text "2404.00001-Title": x'}]
        assert provider.send(messages) == "one"
        assert provider.send(messages) == "two"
        with pytest.raises(DataError, match="exhausted"):
            provider.send(messages)

    def test_wildcard_fallback(self):
        provider = MockChatProvider({"*": ["fallback"]})
        assert provider.send([{"role": "user", "content": "anything"}]) == "fallback"

    def test_no_entry_is_an_error(self):
        provider = MockChatProvider({"2404.00001": ["x"]})
        with pytest.raises(DataError, match="no entry"):
            provider.send([{"role": "user", "content": "unrelated"}])

    def test_bad_script_file(self, tmp_path):
        bad = tmp_path / "script.json"
        bad.write_text("{not json", encoding="utf-8")
        with pytest.raises(DataError, match="bad mock script"):
            MockChatProvider.from_file(bad)


class TestReplayChatProvider:
    def test_never_calls_network(self):
        provider = ReplayChatProvider("chat-default")
        assert provider.cache_only
        with pytest.raises(DataError, match="no cached transcript"):
            provider.send(MESSAGES)
