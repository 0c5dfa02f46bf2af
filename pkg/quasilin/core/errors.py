"""
错误类型模块

定义 quasilin 的异常层次结构。

分析结论（例如仿射方程组无解、函数不存在非零线性结构）是返回值，
不是异常；这里只描述输入错误和内部一致性错误。
"""

from typing import Optional


class QuasilinError(Exception):
    """quasilin 所有异常的基类"""
    pass


class AnfSyntaxError(QuasilinError):
    """
    ANF 表达式语法错误

    Attributes:
        position: 出错字符在原始文本中的下标（从 0 开始）
    """

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (位置 {position})")
        self.position = position


class VariableRangeError(QuasilinError, ValueError):
    """变量个数或变量下标超出允许范围"""

    def __init__(self, message: str, value: Optional[int] = None):
        super().__init__(message)
        self.value = value


class DomainError(QuasilinError, ValueError):
    """参数不在运算的定义域内"""
    pass


class SpectrumError(QuasilinError):
    """Walsh 谱损坏（例如不满足 Parseval 关系）"""
    pass


class TruthTableFormatError(QuasilinError):
    """真值表文件格式错误"""
    pass


class FixtureError(QuasilinError):
    """内置测试函数名称无法识别"""
    pass


class ConfigurationError(QuasilinError):
    """配置验证失败"""
    pass


__all__ = [
    "QuasilinError",
    "AnfSyntaxError",
    "VariableRangeError",
    "DomainError",
    "SpectrumError",
    "TruthTableFormatError",
    "FixtureError",
    "ConfigurationError",
]
