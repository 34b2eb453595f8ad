import logging

import pytest

from src.core.solver.exact_solver import DEFAULT_WORKERS, SolveConfig
from src.utils.config import configure_logging, load_config

ENV_NAMES = ("PACKING_NODE_LIMIT", "PACKING_TIME_LIMIT", "PACKING_WORKERS", "PACKING_LOG_LEVEL")


@pytest.fixture(autouse=True)
def clean_env(monkeypatch):
    # set-then-delete so values written by load_dotenv are removed on teardown
    for name in ENV_NAMES:
        monkeypatch.setenv(name, "")
        monkeypatch.delenv(name)


def test_defaults_without_env(tmp_path):
    config = load_config(str(tmp_path / "missing.env"))
    assert config == {"node_limit": None, "time_limit": None,
                      "workers": None, "log_level": "INFO"}
    assert SolveConfig.from_dict(config).workers == DEFAULT_WORKERS


def test_environment_values(monkeypatch, tmp_path):
    monkeypatch.setenv("PACKING_NODE_LIMIT", "5000")
    monkeypatch.setenv("PACKING_TIME_LIMIT", "2.5")
    monkeypatch.setenv("PACKING_WORKERS", "2")
    monkeypatch.setenv("PACKING_LOG_LEVEL", "debug")
    config = load_config(str(tmp_path / "missing.env"))
    assert config["node_limit"] == 5000
    assert config["time_limit"] == 2.5
    assert config["workers"] == 2
    assert config["log_level"] == "DEBUG"
    cfg = SolveConfig.from_dict(config)
    assert (cfg.node_limit, cfg.time_limit, cfg.workers) == (5000, 2.5, 2)


def test_dotenv_file(tmp_path):
    env_file = tmp_path / ".env"
    env_file.write_text("PACKING_NODE_LIMIT=42\nPACKING_WORKERS=3\n", encoding="utf-8")
    config = load_config(str(env_file))
    assert config["node_limit"] == 42
    assert config["workers"] == 3


def test_environment_wins_over_dotenv(monkeypatch, tmp_path):
    env_file = tmp_path / ".env"
    env_file.write_text("PACKING_WORKERS=3\n", encoding="utf-8")
    monkeypatch.setenv("PACKING_WORKERS", "6")
    assert load_config(str(env_file))["workers"] == 6


@pytest.mark.parametrize("raw", ["abc", "0", "-3"])
def test_bad_values_are_ignored(monkeypatch, tmp_path, raw):
    monkeypatch.setenv("PACKING_NODE_LIMIT", raw)
    monkeypatch.setenv("PACKING_WORKERS", raw)
    config = load_config(str(tmp_path / "missing.env"))
    assert config["node_limit"] is None
    assert config["workers"] is None
    assert SolveConfig.from_dict(config).workers == DEFAULT_WORKERS


def test_configure_logging_level():
    root = logging.getLogger()
    saved = root.handlers[:], root.level
    try:
        configure_logging("warning")
        assert root.level == logging.WARNING
        configure_logging("no-such-level")
        assert root.level == logging.INFO
    finally:
        root.handlers[:], level = saved
        root.setLevel(level)
