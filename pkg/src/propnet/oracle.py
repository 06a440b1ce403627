"""Word-similarity oracles: remote scorer, fixture table, trivial fallback.

Scores are in [0, 1].  Pairs are canonicalized (sorted) before lookup so a
backend that is not symmetric cannot leak asymmetry into the vectors, and
every backend shares one persistent append-only cache keyed by
(min(w1, w2), max(w1, w2), verb_flag).
"""

from __future__ import annotations

import os
import threading
from pathlib import Path

import requests

VERB_PROMPT = (
    "From physical action perspective, return similarity score (0~1) "
    "between two verbs: {} and {}. Only return the score"
)
WORD_PROMPT = (
    "From semantic perspective, return similarity score (0~1) "
    "between two words: {} and {}. Only return the score"
)


class OracleUnavailable(Exception):
    """The oracle could not produce a score."""


class OracleProtocolError(OracleUnavailable):
    """The remote endpoint answered with something that is not a score."""


class OracleMiss(OracleUnavailable):
    """The fixture table has no entry for the requested pair."""


def canonical_pair(w1: str, w2: str) -> tuple[str, str]:
    w1, w2 = w1.lower(), w2.lower()
    return (w1, w2) if w1 <= w2 else (w2, w1)


def build_prompt(w1: str, w2: str, verb_context: bool) -> str:
    template = VERB_PROMPT if verb_context else WORD_PROMPT
    return template.format(w1, w2)


class Oracle:
    """Base contract: word_similarity(w1, w2, verb_context) -> [0, 1]."""

    def word_similarity(self, w1: str, w2: str, verb_context: bool = False) -> float:
        a, b = canonical_pair(w1, w2)
        if a == b:
            return 1.0
        score = self._score(a, b, verb_context)
        if not 0.0 <= score <= 1.0:
            raise OracleProtocolError(f"score {score!r} outside [0, 1] for ({a}, {b})")
        return score

    def _score(self, w1: str, w2: str, verb_context: bool) -> float:
        raise NotImplementedError


class FallbackOracle(Oracle):
    """Equal lemmas are identical, everything else is different."""

    def _score(self, w1, w2, verb_context):
        return 1.0 if w1 == w2 else 0.0


class FixtureOracle(Oracle):
    """Exact-lookup table from a TSV file: word1, word2, verb_flag, score."""

    def __init__(self, path: str):
        self.path = path
        self.table: dict[tuple[str, str, bool], float] = {}
        with open(path, encoding="utf-8") as f:
            for raw in f:
                line = raw.strip()
                if not line or line.startswith("#"):
                    continue
                w1, w2, flag, score = line.split("\t")
                key = (*canonical_pair(w1, w2), flag == "1")
                self.table[key] = float(score)

    def _score(self, w1, w2, verb_context):
        try:
            return self.table[(w1, w2, verb_context)]
        except KeyError:
            raise OracleMiss(
                f"no fixture entry for ({w1}, {w2}, verb={verb_context})"
            ) from None


class RemoteOracle(Oracle):
    """POSTs the scoring prompt to an HTTP endpoint, expects a float back."""

    def __init__(self, endpoint: str, api_key_env: str = "ORACLE_API_KEY", timeout: float = 30.0):
        self.endpoint = endpoint
        self.api_key_env = api_key_env
        self.timeout = timeout

    def _score(self, w1, w2, verb_context):
        headers = {}
        key = os.environ.get(self.api_key_env, "")
        if key:
            headers["Authorization"] = f"Bearer {key}"
        try:
            response = requests.post(
                self.endpoint,
                json={"prompt": build_prompt(w1, w2, verb_context)},
                headers=headers,
                timeout=self.timeout,
            )
            response.raise_for_status()
        except requests.RequestException as exc:
            raise OracleUnavailable(f"endpoint failure: {exc}") from exc
        text = response.text.strip()
        try:
            return float(text)
        except ValueError:
            raise OracleProtocolError(f"non-numeric reply {text!r}") from None


class CachingOracle(Oracle):
    """Persistent read-through cache in front of any backend.

    Concurrent readers are safe; writes are serialized and appended, so the
    cache file doubles as a reproducibility record of every score used.
    """

    def __init__(self, backend: Oracle, cache_path: str):
        self.backend = backend
        self.cache_path = Path(cache_path)
        self._lock = threading.Lock()
        self._cache: dict[tuple[str, str, bool], float] = {}
        if self.cache_path.exists():
            with self.cache_path.open(encoding="utf-8") as f:
                for raw in f:
                    line = raw.strip()
                    if not line:
                        continue
                    w1, w2, flag, score = line.split("\t")
                    self._cache[(w1, w2, flag == "1")] = float(score)

    def _score(self, w1, w2, verb_context):
        key = (w1, w2, verb_context)
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        score = self.backend.word_similarity(w1, w2, verb_context)
        with self._lock:
            if key not in self._cache:
                self._cache[key] = score
                self.cache_path.parent.mkdir(parents=True, exist_ok=True)
                with self.cache_path.open("a", encoding="utf-8") as f:
                    f.write(f"{w1}\t{w2}\t{1 if verb_context else 0}\t{score}\n")
        return score
