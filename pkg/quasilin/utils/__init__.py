"""
工具函数模块

提供日志配置和报告格式化等通用功能。
"""

from .logging_config import QuasilinLogger, setup_logging_from_settings
from .formatting import bitstrings, format_fraction

__all__ = [
    "QuasilinLogger",
    "setup_logging_from_settings",
    "bitstrings",
    "format_fraction",
]
