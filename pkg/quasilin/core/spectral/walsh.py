"""
Walsh 谱模块

所有系数都以整数形式保存：Ŵ(w) = 2^n·S_f(w) = Σ_x (−1)^{f(x)+w·x}，
恒等式都在整数上精确成立，不需要浮点容差。
"""

import logging
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from quasilin.core.bits import parity_array
from quasilin.core.boolfn import BooleanFunction, check_variable_count
from quasilin.core.errors import SpectrumError

logger = logging.getLogger(__name__)


def fwht(values: np.ndarray, n: int) -> np.ndarray:
    """
    自然序快速 Walsh–Hadamard 变换（不归一化）

    result[w] = Σ_x (−1)^{w·x} values[x]，共 n 轮蝶形运算，O(n·2^n)。

    参数:
        values: 长度为 2^n 的 int64 数组（不会被修改）
        n: 变量个数
    """
    a = np.array(values, dtype=np.int64)
    if a.size != (1 << n):
        raise SpectrumError(f"变换输入长度必须是 2^{n}: 实际 {a.size}")
    for i in range(n):
        blocks = a.reshape(-1, 2, 1 << i)
        left = blocks[:, 0, :]
        right = blocks[:, 1, :]
        a = np.stack((left + right, left - right), axis=1).reshape(-1)
    return a


@dataclass(frozen=True, eq=False)
class WalshSpectrum:
    """
    整数化的 Walsh 谱

    Attributes:
        n: 变量个数
        coeffs: 长度为 2^n 的 int64 数组，coeffs[w] = Ŵ(w)（只读）
    """
    n: int
    coeffs: np.ndarray

    def __post_init__(self):
        n = check_variable_count(self.n)
        coeffs = np.array(self.coeffs, dtype=np.int64)
        if coeffs.ndim != 1 or coeffs.size != (1 << n):
            raise SpectrumError(f"谱长度必须是 2^{n}: 实际 {coeffs.size}")
        coeffs.setflags(write=False)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "coeffs", coeffs)

    def __getitem__(self, w: int) -> int:
        return int(self.coeffs[w])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WalshSpectrum):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.coeffs, other.coeffs)

    def __hash__(self) -> int:
        return hash((self.n, self.coeffs.tobytes()))

    def squares(self) -> np.ndarray:
        """Ŵ(w)² 组成的数组（最大 2^{48}，int64 足够）"""
        return self.coeffs * self.coeffs

    def support(self) -> np.ndarray:
        """谱支撑集 {w : Ŵ(w) ≠ 0}，升序"""
        return np.flatnonzero(self.coeffs)

    def normalized(self, w: int) -> Fraction:
        """S_f(w) = Ŵ(w) / 2^n，精确分数"""
        return Fraction(int(self.coeffs[w]), 1 << self.n)

    def parseval_sum(self) -> int:
        """Σ_w Ŵ(w)²"""
        return int(self.squares().sum())

    def satisfies_parseval(self) -> bool:
        return self.parseval_sum() == 1 << (2 * self.n)


def walsh_transform(f: BooleanFunction) -> WalshSpectrum:
    """
    计算 f 的整数化 Walsh 谱

    示例:
        >>> from quasilin.core.boolfn import symmetric_quadratic
        >>> walsh_transform(symmetric_quadratic()).coeffs.tolist()
        [0, -4, 4, 0, 4, 0, 0, 4]
    """
    spectrum = WalshSpectrum(f.n, fwht(f.signs(), f.n))
    logger.debug(f"完成 {f.n} 元函数的 Walsh 变换，支撑集大小 {spectrum.support().size}")
    return spectrum


def walsh_value_naive(f: BooleanFunction, w: int) -> int:
    """
    直接求和计算单个 Walsh 系数 Ŵ(w)，O(2^n)

    仅用作快速变换的校验。
    """
    xs = np.arange(f.size, dtype=np.int64)
    characters = 1 - 2 * parity_array(xs & w, f.n).astype(np.int64)
    return int(np.dot(f.signs(), characters))


def autocorrelation(spectrum: WalshSpectrum) -> np.ndarray:
    """
    由谱计算全部自相关值 C_f(a)

    对 Ŵ² 再做一次变换得到 2^n·C_f(a)，整体 O(n·2^n)。
    中间结果是部分平方和的带符号组合，绝对值不超过 2^{2n}。
    """
    scaled = fwht(spectrum.squares(), spectrum.n)
    size = 1 << spectrum.n
    if np.any(scaled % size):
        raise SpectrumError("谱的平方变换不能被 2^n 整除，谱已损坏")
    return scaled // size
