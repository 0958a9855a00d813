from __future__ import annotations

import threading
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from pathlib import Path

import pytest

from mscbench.arxiv import ArxivClient
from mscbench.errors import DataError, TransportError

DATA_DIR = Path(__file__).parent / "data"


class FeedHandler(BaseHTTPRequestHandler):
    script: list[int] = []  # status codes to serve before succeeding
    hits: int = 0

    def do_GET(self):
        FeedHandler.hits += 1
        if FeedHandler.script:
            status = FeedHandler.script.pop(0)
            self.send_response(status)
            self.end_headers()
            return
        body = (DATA_DIR / "atom_class_11.xml").read_bytes()
        self.send_response(200)
        self.send_header("Content-Type", "application/atom+xml")
        self.send_header("Content-Length", str(len(body)))
        self.end_headers()
        self.wfile.write(body)

    def log_message(self, *args):
        pass


@pytest.fixture()
def feed_server():
    server = ThreadingHTTPServer(("127.0.0.1", 0), FeedHandler)
    thread = threading.Thread(target=server.serve_forever, daemon=True)
    thread.start()
    FeedHandler.script = []
    FeedHandler.hits = 0
    yield f"http://127.0.0.1:{server.server_address[1]}/api/query"
    server.shutdown()


def make_client(tmp_path, feed_server, **kw):
    kw.setdefault("min_interval", 0.0)
    return ArxivClient(cache_dir=tmp_path / "cache", base_url=feed_server, **kw)


class TestLiveFetch:
    def test_fetch_parses_and_caches(self, tmp_path, feed_server):
        client = make_client(tmp_path, feed_server)
        entries = client.search_class("11")
        assert entries[0]["arxiv_id"] == "2404.00001"
        assert FeedHandler.hits == 1
        client.search_class("11")
        assert FeedHandler.hits == 1  # served from the on-disk cache
        cached = list((tmp_path / "cache").glob("class-11-*.xml"))
        assert len(cached) == 1

    def test_retries_then_succeeds(self, tmp_path, feed_server, monkeypatch):
        monkeypatch.setattr("time.sleep", lambda _s: None)
        FeedHandler.script = [503, 500]
        client = make_client(tmp_path, feed_server, max_retries=3)
        entries = client.search_class("11")
        assert entries and FeedHandler.hits == 3

    def test_transport_error_after_retries(self, tmp_path, feed_server, monkeypatch):
        monkeypatch.setattr("time.sleep", lambda _s: None)
        FeedHandler.script = [503] * 10
        client = make_client(tmp_path, feed_server, max_retries=1)
        with pytest.raises(TransportError, match="failed"):
            client.search_class("11")

    def test_cache_only_miss(self, tmp_path, feed_server):
        client = make_client(tmp_path, feed_server, cache_only=True)
        with pytest.raises(DataError, match="no cached arXiv response"):
            client.search_class("11")
        assert FeedHandler.hits == 0

    def test_base_url_from_environment(self, tmp_path, feed_server, monkeypatch):
        monkeypatch.setenv("MSCBENCH_ARXIV_URL", feed_server)
        client = ArxivClient(cache_dir=tmp_path / "cache", min_interval=0.0)
        assert client.base_url == feed_server
        assert client.search_class("11")

    def test_query_template(self, tmp_path, feed_server):
        params = make_client(tmp_path, feed_server).query_params("30")
        assert params["search_query"] == 'all:"30"'
        assert params["sortBy"] == "submittedDate"
        assert params["sortOrder"] == "descending"
