"""Shared configuration: oracle selection, thresholds, CART settings."""

from __future__ import annotations

import configparser
import os
from dataclasses import dataclass, field
from importlib import resources

from .graph import HypernymLexicon
from .oracle import CachingOracle, FallbackOracle, FixtureOracle, Oracle, RemoteOracle


@dataclass
class OracleSettings:
    backend: str = "fallback"
    endpoint: str = ""
    api_key_env: str = "ORACLE_API_KEY"
    fixture_path: str = ""
    cache_path: str = ""


@dataclass
class Thresholds:
    code_hi: float = 0.7
    code_lo: float = 0.2
    pod: int = 1


@dataclass
class CartSettings:
    min_samples_leaf: int = 10
    seed: int = 0
    levene_center: str = "median"


@dataclass
class Config:
    oracle: OracleSettings = field(default_factory=OracleSettings)
    thresholds: Thresholds = field(default_factory=Thresholds)
    cart: CartSettings = field(default_factory=CartSettings)
    lexicon_path: str = ""

    def validate(self) -> None:
        lo, hi = self.thresholds.code_lo, self.thresholds.code_hi
        if not (0.0 <= lo < hi <= 1.0):
            raise ValueError(f"need 0 <= code_lo < code_hi <= 1, got {lo}, {hi}")
        if self.oracle.backend not in ("remote", "fixture", "fallback"):
            raise ValueError(f"unknown oracle backend {self.oracle.backend!r}")
        if self.cart.levene_center not in ("median", "mean"):
            raise ValueError(f"unknown levene center {self.cart.levene_center!r}")


def load_config(path: str | None = None) -> Config:
    """Read INI-style sections [oracle], [thresholds], [cart], [lexicon]."""
    cfg = Config()
    if path is not None:
        parser = configparser.ConfigParser()
        with open(path, encoding="utf-8") as f:
            parser.read_string(f.read())
        if parser.has_section("oracle"):
            s = parser["oracle"]
            cfg.oracle.backend = s.get("backend", cfg.oracle.backend)
            cfg.oracle.endpoint = s.get("endpoint", cfg.oracle.endpoint)
            cfg.oracle.api_key_env = s.get("api_key_env", cfg.oracle.api_key_env)
            cfg.oracle.fixture_path = s.get("fixture_path", cfg.oracle.fixture_path)
            cfg.oracle.cache_path = s.get("cache_path", cfg.oracle.cache_path)
        if parser.has_section("thresholds"):
            s = parser["thresholds"]
            cfg.thresholds.code_hi = s.getfloat("code_hi", cfg.thresholds.code_hi)
            cfg.thresholds.code_lo = s.getfloat("code_lo", cfg.thresholds.code_lo)
            cfg.thresholds.pod = s.getint("pod", cfg.thresholds.pod)
        if parser.has_section("cart"):
            s = parser["cart"]
            cfg.cart.min_samples_leaf = s.getint(
                "min_samples_leaf", cfg.cart.min_samples_leaf
            )
            cfg.cart.seed = s.getint("seed", cfg.cart.seed)
            cfg.cart.levene_center = s.get("levene_center", cfg.cart.levene_center)
        if parser.has_section("lexicon"):
            cfg.lexicon_path = parser["lexicon"].get("path", cfg.lexicon_path)
    cfg.validate()
    return cfg


def make_oracle(cfg: Config, cache_path: str | None = None) -> Oracle:
    settings = cfg.oracle
    if settings.backend == "remote":
        endpoint = settings.endpoint or os.environ.get("ORACLE_ENDPOINT", "")
        backend: Oracle = RemoteOracle(endpoint, settings.api_key_env)
    elif settings.backend == "fixture":
        backend = FixtureOracle(settings.fixture_path)
    else:
        backend = FallbackOracle()
    cache = cache_path or settings.cache_path
    if cache:
        return CachingOracle(backend, cache)
    return backend


def load_lexicon(cfg: Config) -> HypernymLexicon:
    if cfg.lexicon_path:
        return HypernymLexicon.load(cfg.lexicon_path)
    return default_lexicon()


def default_lexicon() -> HypernymLexicon:
    """Bundled physical-entity snapshot."""
    ref = resources.files("propnet").joinpath("data/physical_entities.tsv")
    flags: dict[str, bool] = {}
    for raw in ref.read_text(encoding="utf-8").splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        lemma, _, flag = line.partition("\t")
        flags[lemma.strip().lower()] = flag.strip() == "1"
    return HypernymLexicon(flags=flags)
