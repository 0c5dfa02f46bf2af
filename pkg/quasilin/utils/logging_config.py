"""
日志配置模块

提供统一的日志配置和管理功能。

标准输出留给报告，控制台日志一律写到标准错误，
这样同样的参数总是得到逐字节相同的报告。
"""

import logging
import sys
from pathlib import Path
from typing import Optional

from quasilin.config import settings
from quasilin.config.defaults import DEFAULT_LOG_DATE_FORMAT, DEFAULT_LOG_FORMAT
from quasilin.config.validator import VALID_LOG_LEVELS


class QuasilinLogger:
    """
    quasilin 日志管理器

    示例:
        >>> from quasilin.utils.logging_config import QuasilinLogger
        >>> QuasilinLogger.setup_logging(log_level="DEBUG", log_file="logs/quasilin.log")
        >>> logger = QuasilinLogger.get_logger(__name__)
        >>> logger.info("这是一条信息日志")
    """

    _initialized = False
    _log_file: Optional[str] = None
    _log_level: str = "WARNING"

    @staticmethod
    def _check_level(log_level: str) -> str:
        if log_level.upper() not in VALID_LOG_LEVELS:
            raise ValueError(
                f"无效的日志级别: {log_level}. "
                f"有效值: {', '.join(VALID_LOG_LEVELS)}"
            )
        return log_level.upper()

    @staticmethod
    def setup_logging(
        log_level: str = "WARNING",
        log_file: Optional[str] = None,
        enable_console: bool = True,
        log_format: Optional[str] = None
    ) -> None:
        """
        配置日志系统

        参数:
            log_level: 日志级别 (DEBUG, INFO, WARNING, ERROR, CRITICAL)
            log_file: 日志文件路径，为 None 或空字符串时不输出到文件
            enable_console: 是否输出到标准错误
            log_format: 自定义日志格式，为 None 时使用默认格式
        """
        QuasilinLogger._log_level = QuasilinLogger._check_level(log_level)
        QuasilinLogger._log_file = log_file or None

        formatter = logging.Formatter(
            log_format or DEFAULT_LOG_FORMAT,
            datefmt=DEFAULT_LOG_DATE_FORMAT
        )
        level = getattr(logging, QuasilinLogger._log_level)

        root_logger = logging.getLogger()
        root_logger.setLevel(level)
        root_logger.handlers.clear()

        if enable_console:
            console_handler = logging.StreamHandler(sys.stderr)
            console_handler.setLevel(level)
            console_handler.setFormatter(formatter)
            root_logger.addHandler(console_handler)

        if log_file:
            log_path = Path(log_file)
            log_path.parent.mkdir(parents=True, exist_ok=True)

            file_handler = logging.FileHandler(log_file, mode='a', encoding='utf-8')
            file_handler.setLevel(level)
            file_handler.setFormatter(formatter)
            root_logger.addHandler(file_handler)

        QuasilinLogger._initialized = True

        logger = logging.getLogger("QuasilinLogger")
        logger.debug(
            f"日志系统初始化完成: 级别={QuasilinLogger._log_level}, "
            f"文件={log_file if log_file else '禁用'}"
        )

    @staticmethod
    def get_logger(name: str) -> logging.Logger:
        """
        获取日志记录器

        如果日志系统未初始化，将使用默认配置初始化。
        """
        if not QuasilinLogger._initialized:
            QuasilinLogger.setup_logging()
        return logging.getLogger(name)

    @staticmethod
    def set_level(log_level: str) -> None:
        """动态设置根日志记录器及全部处理器的级别"""
        QuasilinLogger._log_level = QuasilinLogger._check_level(log_level)
        level = getattr(logging, QuasilinLogger._log_level)

        root_logger = logging.getLogger()
        root_logger.setLevel(level)
        for handler in root_logger.handlers:
            handler.setLevel(level)

    @staticmethod
    def get_current_level() -> str:
        return QuasilinLogger._log_level

    @staticmethod
    def is_initialized() -> bool:
        return QuasilinLogger._initialized

    @staticmethod
    def reset() -> None:
        """
        重置日志系统

        清除所有处理器和配置，用于测试或重新初始化。
        """
        root_logger = logging.getLogger()
        root_logger.handlers.clear()
        QuasilinLogger._initialized = False
        QuasilinLogger._log_file = None
        QuasilinLogger._log_level = "WARNING"


def setup_logging_from_settings(verbose: int = 0) -> None:
    """
    按 settings 配置日志

    参数:
        verbose: -v 出现的次数；1 次为 INFO，2 次及以上为 DEBUG
    """
    level = settings.log_level
    if verbose >= 2:
        level = "DEBUG"
    elif verbose == 1 and level != "DEBUG":
        level = "INFO"
    QuasilinLogger.setup_logging(log_level=level, log_file=settings.log_file)
