"""
报告格式化工具

精确分数在报告中写成 "p/q" 并附带小数近似，位串按 x₁…x_n 从左到右输出。
"""

from fractions import Fraction
from typing import Iterable, List, Union

from quasilin.core.bits import to_bitstring


def format_fraction(value: Union[Fraction, int]) -> str:
    """
    分数的 "p/q" 写法，整数不带分母

    示例:
        >>> format_fraction(Fraction(-1, 2))
        '-1/2'
        >>> format_fraction(Fraction(4, 4))
        '1'
    """
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def bitstrings(vectors: Iterable[int], n: int) -> List[str]:
    return [to_bitstring(int(v), n) for v in vectors]
