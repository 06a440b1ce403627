import pytest

from propnet import load_config, make_oracle
from propnet.oracle import CachingOracle, FallbackOracle, FixtureOracle, RemoteOracle


def test_defaults():
    cfg = load_config(None)
    assert cfg.thresholds.code_hi == 0.7
    assert cfg.thresholds.code_lo == 0.2
    assert cfg.thresholds.pod == 1
    assert cfg.cart.min_samples_leaf == 10
    assert cfg.cart.seed == 0
    assert cfg.cart.levene_center == "median"
    assert cfg.oracle.backend == "fallback"
    assert cfg.oracle.api_key_env == "ORACLE_API_KEY"


def test_file_overrides(tmp_path):
    path = tmp_path / "config.ini"
    path.write_text(
        "[oracle]\nbackend = remote\nendpoint = http://example/score\n"
        "[thresholds]\ncode_hi = 0.8\ncode_lo = 0.3\npod = 2\n"
        "[cart]\nmin_samples_leaf = 5\nlevene_center = mean\n"
    )
    cfg = load_config(str(path))
    assert cfg.oracle.backend == "remote"
    assert cfg.thresholds.code_hi == 0.8
    assert cfg.thresholds.pod == 2
    assert cfg.cart.min_samples_leaf == 5
    assert cfg.cart.levene_center == "mean"


def test_threshold_invariant(tmp_path):
    path = tmp_path / "bad.ini"
    path.write_text("[thresholds]\ncode_hi = 0.2\ncode_lo = 0.7\n")
    with pytest.raises(ValueError, match="code_lo"):
        load_config(str(path))
    path.write_text("[thresholds]\ncode_hi = 1.5\n")
    with pytest.raises(ValueError):
        load_config(str(path))


def test_unknown_backend(tmp_path):
    path = tmp_path / "bad.ini"
    path.write_text("[oracle]\nbackend = psychic\n")
    with pytest.raises(ValueError, match="backend"):
        load_config(str(path))


def test_make_oracle_shapes(tmp_path):
    cfg = load_config(None)
    assert isinstance(make_oracle(cfg), FallbackOracle)
    cfg.oracle.cache_path = str(tmp_path / "cache.tsv")
    assert isinstance(make_oracle(cfg), CachingOracle)
    fixture = tmp_path / "fixture.tsv"
    fixture.write_text("a\tb\t0\t0.5\n")
    cfg = load_config(None)
    cfg.oracle.backend = "fixture"
    cfg.oracle.fixture_path = str(fixture)
    assert isinstance(make_oracle(cfg), FixtureOracle)
    cfg = load_config(None)
    cfg.oracle.backend = "remote"
    cfg.oracle.endpoint = "http://example"
    assert isinstance(make_oracle(cfg), RemoteOracle)


def test_remote_endpoint_env_fallback(monkeypatch):
    monkeypatch.setenv("ORACLE_ENDPOINT", "http://from-env/score")
    cfg = load_config(None)
    cfg.oracle.backend = "remote"
    oracle = make_oracle(cfg)
    assert oracle.endpoint == "http://from-env/score"
