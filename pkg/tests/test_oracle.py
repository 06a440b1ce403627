import threading
from http.server import BaseHTTPRequestHandler, HTTPServer

import pytest

from propnet import (
    CachingOracle,
    FallbackOracle,
    FixtureOracle,
    OracleMiss,
    OracleProtocolError,
    RemoteOracle,
)
from propnet.oracle import VERB_PROMPT, WORD_PROMPT, build_prompt, canonical_pair


def test_prompts_exact():
    assert build_prompt("run", "walk", True) == (
        "From physical action perspective, return similarity score (0~1) "
        "between two verbs: run and walk. Only return the score"
    )
    assert build_prompt("cat", "dog", False) == (
        "From semantic perspective, return similarity score (0~1) "
        "between two words: cat and dog. Only return the score"
    )
    assert "{}" in VERB_PROMPT and "{}" in WORD_PROMPT


def test_canonical_pair_sorted():
    assert canonical_pair("Zebra", "apple") == ("apple", "zebra")
    assert canonical_pair("a", "b") == canonical_pair("b", "a")


def test_same_word_short_circuit():
    assert FallbackOracle().word_similarity("cat", "cat") == 1.0
    assert FallbackOracle().word_similarity("Cat", "cat", verb_context=True) == 1.0


def test_fallback_scores():
    oracle = FallbackOracle()
    assert oracle.word_similarity("cat", "dog") == 0.0


def test_fixture_lookup_and_miss(tmp_path):
    path = tmp_path / "fixture.tsv"
    path.write_text("banana\torange\t0\t0.2\nrun\twalk\t1\t0.55\n")
    oracle = FixtureOracle(str(path))
    assert oracle.word_similarity("orange", "banana") == 0.2
    assert oracle.word_similarity("walk", "run", verb_context=True) == 0.55
    with pytest.raises(OracleMiss):
        oracle.word_similarity("banana", "kiwi")


def test_fixture_symmetry_via_canonicalization(tmp_path):
    path = tmp_path / "fixture.tsv"
    path.write_text("zebra\tapple\t0\t0.3\n")
    oracle = FixtureOracle(str(path))
    assert oracle.word_similarity("apple", "zebra") == 0.3
    assert oracle.word_similarity("zebra", "apple") == 0.3


def test_cache_persists_and_replays(tmp_path):
    cache = tmp_path / "cache.tsv"

    class Counting(FallbackOracle):
        calls = 0

        def _score(self, w1, w2, verb_context):
            type(self).calls += 1
            return 0.25

    oracle = CachingOracle(Counting(), str(cache))
    assert oracle.word_similarity("cat", "dog") == 0.25
    assert oracle.word_similarity("dog", "cat") == 0.25
    assert Counting.calls == 1
    # a fresh instance reads the persisted entry without backend calls
    again = CachingOracle(Counting(), str(cache))
    assert again.word_similarity("cat", "dog") == 0.25
    assert Counting.calls == 1
    line = cache.read_text().strip()
    assert line == "cat\tdog\t0\t0.25"


class _Handler(BaseHTTPRequestHandler):
    reply = b"0.85"

    def do_POST(self):
        length = int(self.headers.get("Content-Length", 0))
        type(self).last_body = self.rfile.read(length)
        self.send_response(200)
        self.end_headers()
        self.wfile.write(type(self).reply)

    def log_message(self, *args):
        pass


@pytest.fixture()
def http_endpoint():
    server = HTTPServer(("127.0.0.1", 0), _Handler)
    thread = threading.Thread(target=server.serve_forever, daemon=True)
    thread.start()
    yield f"http://127.0.0.1:{server.server_port}/"
    server.shutdown()


def test_remote_parses_float(http_endpoint):
    _Handler.reply = b"0.85"
    oracle = RemoteOracle(http_endpoint)
    assert oracle.word_similarity("cat", "kitten") == 0.85
    assert b"From semantic perspective" in _Handler.last_body


def test_remote_verb_prompt(http_endpoint):
    _Handler.reply = b"0.4"
    oracle = RemoteOracle(http_endpoint)
    oracle.word_similarity("run", "walk", verb_context=True)
    assert b"From physical action perspective" in _Handler.last_body


def test_remote_non_numeric_reply(http_endpoint):
    _Handler.reply = b"sorry, no"
    with pytest.raises(OracleProtocolError):
        RemoteOracle(http_endpoint).word_similarity("cat", "dog")


def test_remote_out_of_range_reply(http_endpoint):
    _Handler.reply = b"3.5"
    with pytest.raises(OracleProtocolError):
        RemoteOracle(http_endpoint).word_similarity("cat", "dog")
