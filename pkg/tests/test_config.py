"""Settings persistence, cap resolution and logging setup."""

import io
import json
import logging
import sys

import pytest

from src.config import LoggingConfig, Settings, get_logger, get_settings, level_for
from src.config.constants import APP_NAME, DEFAULT_MAX_N, MAX_N_ENV_VAR
from src.config.limits import check_arity, resolve_max_n
from src.errors import ParameterError, ResourceError
from src.learning import default_estimation_count


def test_defaults(tmp_path):
    settings = Settings(tmp_path)
    assert settings.max_n == DEFAULT_MAX_N == 26
    assert settings.budget_constant == 8.0
    assert settings.confidence == 0.95
    assert default_estimation_count(settings.precision) == 1024
    assert not settings.config_file.exists()


def test_setters_persist(tmp_path):
    settings = Settings(tmp_path)
    settings.max_n = 20
    settings.confidence = 0.99
    reloaded = Settings(tmp_path)
    assert reloaded.max_n == 20
    assert reloaded.confidence == 0.99
    assert json.loads(settings.config_file.read_text())["max_n"] == 20


def test_unreadable_file_falls_back_to_defaults(tmp_path):
    (tmp_path / "settings.json").write_text("{not json", encoding="utf-8")
    assert Settings(tmp_path).max_n == DEFAULT_MAX_N


def test_workers_floor(tmp_path):
    settings = Settings(tmp_path)
    settings.workers = 0
    assert settings.workers == 1


def test_env_overrides_settings(tmp_path, monkeypatch):
    settings = Settings(tmp_path)
    settings.max_n = 20
    monkeypatch.setenv(MAX_N_ENV_VAR, "12")
    assert settings.max_n == 12


def test_non_integer_env_is_ignored(tmp_path, monkeypatch):
    monkeypatch.setenv(MAX_N_ENV_VAR, "lots")
    assert Settings(tmp_path).max_n == DEFAULT_MAX_N


def test_explicit_cap_wins(monkeypatch):
    monkeypatch.setenv(MAX_N_ENV_VAR, "12")
    assert resolve_max_n(5) == 5
    assert resolve_max_n() == 12


def test_check_arity():
    check_arity(get_settings().max_n)
    with pytest.raises(ResourceError) as info:
        check_arity(27)
    assert info.value.exit_code == 2
    assert "GiB" in str(info.value)
    with pytest.raises(ParameterError):
        check_arity(0)


def test_loggers_are_children_of_app_logger():
    logger = get_logger("tests")
    assert logger.name == f"{APP_NAME}.tests"
    assert logging.getLogger(APP_NAME).propagate is False


def test_indifference_setting(tmp_path):
    settings = Settings(tmp_path)
    assert settings.indifference == 0.1
    settings.indifference = 0.05
    assert Settings(tmp_path).indifference == 0.05


def test_verbosity_flags():
    assert level_for() == logging.INFO
    assert level_for(verbose=True) == logging.DEBUG
    assert level_for(quiet=True) == logging.WARNING


def test_quiet_run_still_logs_info_to_file(tmp_path, capsys):
    config = LoggingConfig(tmp_path / "logs", name="sampler-test")
    config.configure(logging.WARNING)
    try:
        logger = config.get_logger("run")
        logger.info("trial finished")
        logger.warning("gap test did not converge")
        for handler in logging.getLogger("sampler-test").handlers:
            handler.flush()
        text = config.log_file.read_text(encoding="utf-8")
        assert "INFO" in text and "trial finished" in text
        captured = capsys.readouterr()
        assert "gap test did not converge" in captured.err
        assert "trial finished" not in captured.err
        assert captured.out == ""
    finally:
        config.close()
    assert logging.getLogger("sampler-test").handlers == []


def test_console_handler_follows_replaced_stderr(tmp_path, monkeypatch):
    config = LoggingConfig(tmp_path, name="sampler-stderr-test")
    config.configure(logging.INFO)
    try:
        replacement = io.StringIO()
        monkeypatch.setattr(sys, "stderr", replacement)
        config.get_logger("run").info("written after the swap")
        assert "written after the swap" in replacement.getvalue()
    finally:
        config.close()


def test_unwritable_log_dir_keeps_console_logging(tmp_path):
    blocker = tmp_path / "not-a-dir"
    blocker.write_text("", encoding="utf-8")
    config = LoggingConfig(blocker / "logs", name="sampler-nofile-test")
    config.configure(logging.INFO)
    try:
        handlers = logging.getLogger("sampler-nofile-test").handlers
        assert len(handlers) == 1
        assert logging.getLogger("sampler-nofile-test").level == logging.INFO
    finally:
        config.close()
