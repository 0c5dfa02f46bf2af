"""
布尔函数表示模块

BooleanFunction 是整个库的通用输入对象：一个 n 元布尔函数的真值表。
"""

import logging
from dataclasses import dataclass
from typing import Iterable, Union

import numpy as np

from quasilin.core.errors import VariableRangeError

logger = logging.getLogger(__name__)

MIN_VARIABLES = 1
MAX_VARIABLES = 24


def check_variable_count(n: int) -> int:
    """
    检查变量个数是否在 [1, 24] 内

    参数:
        n: 变量个数

    返回:
        n 本身

    异常:
        VariableRangeError: n 越界或不是整数
    """
    if isinstance(n, bool) or not isinstance(n, (int, np.integer)):
        raise VariableRangeError(f"变量个数必须是整数: {n!r}", None)
    if n < MIN_VARIABLES or n > MAX_VARIABLES:
        raise VariableRangeError(
            f"变量个数必须在 {MIN_VARIABLES} 到 {MAX_VARIABLES} 之间: {n}", int(n)
        )
    return int(n)


@dataclass(frozen=True, eq=False)
class BooleanFunction:
    """
    n 元布尔函数

    真值表下标 x 按 x₁x₂…x_n 解释，x₁ 是最高位，
    因此 table[x] 就是 f(x₁, …, x_n)。构造后不可变。

    Attributes:
        n: 变量个数（1 ≤ n ≤ 24）
        table: 长度为 2^n 的 uint8 数组，元素为 0 或 1（只读）

    示例:
        >>> f = BooleanFunction.from_bits(2, [0, 1, 1, 0])
        >>> f(0b10)
        1
    """
    n: int
    table: np.ndarray

    def __post_init__(self):
        n = check_variable_count(self.n)
        table = np.ascontiguousarray(self.table, dtype=np.uint8)
        if table.ndim != 1 or table.size != (1 << n):
            raise VariableRangeError(
                f"真值表长度必须是 2^{n} = {1 << n}: 实际 {table.size}", n
            )
        if np.any(table > 1):
            raise ValueError("真值表只能包含 0 和 1")
        if table is self.table:
            table = table.copy()
        table.setflags(write=False)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "table", table)

    @classmethod
    def from_bits(cls, n: int, bits: Iterable[int]) -> "BooleanFunction":
        """由按下标顺序给出的 0/1 序列构造函数"""
        return cls(n, np.fromiter((int(b) for b in bits), dtype=np.uint8))

    @property
    def size(self) -> int:
        """定义域大小 2^n"""
        return 1 << self.n

    def __call__(self, x: Union[int, np.integer]) -> int:
        """在 x ∈ F₂ⁿ 处求值"""
        x = int(x)
        if x < 0 or x >= self.size:
            raise VariableRangeError(f"输入向量超出 F₂^{self.n}: {x}", x)
        return int(self.table[x])

    def signs(self) -> np.ndarray:
        """(−1)^{f(x)} 组成的 int64 数组"""
        return 1 - 2 * self.table.astype(np.int64)

    def weight(self) -> int:
        """汉明重量"""
        return int(self.table.sum())

    def packed(self) -> bytes:
        """按位打包的真值表，每字节高位对应较小的下标"""
        return np.packbits(self.table).tobytes()

    def bitstring(self) -> str:
        return "".join("1" if b else "0" for b in self.table.tolist())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BooleanFunction):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.table, other.table)

    def __hash__(self) -> int:
        return hash((self.n, self.packed()))

    def __repr__(self) -> str:
        if self.n <= 6:
            return f"BooleanFunction(n={self.n}, table={self.bitstring()})"
        return f"BooleanFunction(n={self.n}, weight={self.weight()})"
