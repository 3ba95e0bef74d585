import pytest

from subjsearch.config import EngineConfig, load_config


def test_defaults():
    cfg = load_config(None)
    assert cfg == EngineConfig()
    assert (cfg.tau, cfg.delta, cfg.alpha, cfg.theta) == (0.35, 2.0, 0.5, 0.5)
    assert (cfg.rho, cfg.c_min, cfg.snippet_k, cfg.tnorm) == (3.0, 3, 3, "product")


def test_overrides_and_comments(tmp_path):
    path = tmp_path / "engine.conf"
    path.write_text(
        """
# scoring
tau = 0.5
tnorm = min
c_min = 5   # informative tokens
seed = 42
"""
    )
    cfg = load_config(path)
    assert cfg.tau == 0.5
    assert cfg.tnorm == "min"
    assert cfg.c_min == 5
    assert cfg.seed == 42
    assert cfg.delta == 2.0  # untouched default


def test_unknown_key_rejected(tmp_path):
    path = tmp_path / "engine.conf"
    path.write_text("taw = 0.5\n")
    with pytest.raises(ValueError, match="unknown config key 'taw'"):
        load_config(path)


def test_bad_tnorm_rejected(tmp_path):
    path = tmp_path / "engine.conf"
    path.write_text("tnorm = fancy\n")
    with pytest.raises(ValueError, match="tnorm"):
        load_config(path)


def test_missing_value_rejected(tmp_path):
    path = tmp_path / "engine.conf"
    path.write_text("tau\n")
    with pytest.raises(ValueError, match="key = value"):
        load_config(path)
