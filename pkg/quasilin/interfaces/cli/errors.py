"""
命令行错误处理

所有输入错误都被转换成一行诊断信息，并指出出错的参数。
输入错误的退出码为 2，意外错误为 1。
"""

import logging
from contextlib import contextmanager
from typing import Iterator

from quasilin.core.errors import QuasilinError

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_UNEXPECTED = 1
EXIT_INPUT_ERROR = 2
EXIT_INTERRUPTED = 130


class CliError(QuasilinError):
    """
    带参数名的命令行输入错误

    Attributes:
        flag: 出错的参数，例如 "--anf"
    """

    def __init__(self, flag: str, message: str):
        super().__init__(f"{flag}: {message}")
        self.flag = flag
        self.detail = message


class CliUsageError(QuasilinError):
    """argparse 解析失败"""
    pass


@contextmanager
def flag_context(flag: str) -> Iterator[None]:
    """
    把代码块中的输入错误归到某个参数名下

    示例:
        >>> with flag_context("--anf"):
        ...     parse_anf(text, n)
    """
    try:
        yield
    except CliError:
        raise
    except (QuasilinError, ValueError, OSError) as e:
        raise CliError(flag, _message(e)) from e


def _message(error: Exception) -> str:
    if isinstance(error, OSError) and error.strerror:
        target = f" {error.filename}" if error.filename else ""
        return f"{error.strerror}{target}"
    return str(error).replace("\n", " ").strip() or type(error).__name__


class ErrorHandler:
    """
    统一错误处理器

    把异常转换成一行诊断信息和退出码。
    """

    @staticmethod
    def is_input_error(error: Exception) -> bool:
        return isinstance(error, (QuasilinError, ValueError, OSError))

    @staticmethod
    def exit_code(error: Exception) -> int:
        if isinstance(error, KeyboardInterrupt):
            return EXIT_INTERRUPTED
        return EXIT_INPUT_ERROR if ErrorHandler.is_input_error(error) else EXIT_UNEXPECTED

    @staticmethod
    def handle(error: Exception) -> str:
        """
        生成一行诊断信息

        意外错误同时记录完整的堆栈。

        示例:
            >>> ErrorHandler.handle(CliError("--rounds", "必须是正整数"))
            'quasilin: error: --rounds: 必须是正整数'
        """
        if ErrorHandler.is_input_error(error):
            logger.debug(f"输入错误: {error}")
            return f"quasilin: error: {_message(error)}"
        logger.error(f"执行命令时出错: {error}", exc_info=error)
        return f"quasilin: internal error: {type(error).__name__}: {_message(error)}"
