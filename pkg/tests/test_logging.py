"""
日志配置测试
"""

import logging

import pytest

from quasilin.utils.logging_config import QuasilinLogger, setup_logging_from_settings


def test_setup_logging_writes_to_stderr(capsys):
    QuasilinLogger.setup_logging(log_level="info")
    assert QuasilinLogger.is_initialized()
    assert QuasilinLogger.get_current_level() == "INFO"

    logging.getLogger("quasilin.test").info("控制台日志")
    captured = capsys.readouterr()
    assert captured.out == ""
    assert "[INFO] [quasilin.test]" in captured.err
    assert "控制台日志" in captured.err


def test_invalid_level():
    with pytest.raises(ValueError):
        QuasilinLogger.setup_logging(log_level="LOUD")
    with pytest.raises(ValueError):
        QuasilinLogger.set_level("LOUD")


def test_file_handler(tmp_path):
    log_file = tmp_path / "logs" / "quasilin.log"
    QuasilinLogger.setup_logging(log_level="DEBUG", log_file=str(log_file), enable_console=False)
    logging.getLogger("quasilin.test").debug("写入文件")
    for handler in logging.getLogger().handlers:
        handler.flush()
    assert "写入文件" in log_file.read_text(encoding="utf-8")


def test_set_level_updates_handlers():
    QuasilinLogger.setup_logging(log_level="WARNING")
    QuasilinLogger.set_level("error")
    root = logging.getLogger()
    assert root.level == logging.ERROR
    assert all(handler.level == logging.ERROR for handler in root.handlers)


def test_get_logger_initializes_on_demand():
    assert not QuasilinLogger.is_initialized()
    logger = QuasilinLogger.get_logger("quasilin.test")
    assert QuasilinLogger.is_initialized()
    assert logger.name == "quasilin.test"


def test_reset():
    QuasilinLogger.setup_logging(log_level="DEBUG")
    QuasilinLogger.reset()
    assert not QuasilinLogger.is_initialized()
    assert QuasilinLogger.get_current_level() == "WARNING"
    assert logging.getLogger().handlers == []


@pytest.mark.parametrize("configured, verbose, expected", [
    ("WARNING", 0, "WARNING"),
    ("WARNING", 1, "INFO"),
    ("WARNING", 2, "DEBUG"),
    ("DEBUG", 1, "DEBUG"),
    ("ERROR", 0, "ERROR"),
])
def test_setup_from_settings(monkeypatch, configured, verbose, expected):
    monkeypatch.setenv("QUASILIN_LOG_LEVEL", configured)
    setup_logging_from_settings(verbose)
    assert QuasilinLogger.get_current_level() == expected


def test_setup_from_settings_with_log_file(monkeypatch, tmp_path):
    log_file = tmp_path / "run.log"
    monkeypatch.setenv("QUASILIN_LOG_FILE", str(log_file))
    setup_logging_from_settings()
    assert any(isinstance(h, logging.FileHandler) for h in logging.getLogger().handlers)
    assert log_file.exists()
