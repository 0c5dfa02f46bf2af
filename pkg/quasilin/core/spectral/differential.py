"""
差分统计模块

计算导数计数 |V_{f,a}^i| = |{x : f(x⊕a)+f(x) = i}|、相关函数 C_f(a)
以及相对差分均匀度 δ_f。
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, NamedTuple, Optional

import numpy as np

from quasilin.config import settings
from quasilin.core.boolfn import BooleanFunction
from quasilin.core.errors import DomainError
from quasilin.core.spectral.walsh import WalshSpectrum, autocorrelation, walsh_transform

logger = logging.getLogger(__name__)


class DerivativeCounts(NamedTuple):
    """导数 f(x⊕a)+f(x) 取 0 和取 1 的 x 的个数"""
    count0: int
    count1: int


class Differential(NamedTuple):
    """一个差分 (a, i) 及其概率 |V_{f,a}^i| / 2^n"""
    a: int
    i: int
    count: int
    probability: Fraction


def _derivative(f: BooleanFunction, a: int) -> np.ndarray:
    if a < 0 or a >= f.size:
        raise DomainError(f"向量 {a} 不在 F₂^{f.n} 中")
    xs = np.arange(f.size, dtype=np.int64)
    return f.table ^ f.table[xs ^ a]


def derivative_counts(f: BooleanFunction, a: int) -> DerivativeCounts:
    """
    统计导数取值

    示例:
        >>> from quasilin.core.boolfn import symmetric_quadratic
        >>> derivative_counts(symmetric_quadratic(), 0b111)
        DerivativeCounts(count0=0, count1=8)
    """
    count1 = int(_derivative(f, a).sum())
    return DerivativeCounts(f.size - count1, count1)


def correlation(f: BooleanFunction, a: int) -> int:
    """直接求和计算 C_f(a) = Σ_x (−1)^{f(x)+f(x⊕a)}"""
    terms = 1 - 2 * _derivative(f, a).astype(np.int64)
    return int(terms.sum())


@dataclass(frozen=True, eq=False)
class DifferentialProfile:
    """
    全部差分计数

    Attributes:
        n: 变量个数
        counts: 形状 (2^n, 2) 的 int64 数组，counts[a, i] = |V_{f,a}^i|
        delta_f: 相对差分均匀度，分母为 2^n 的精确分数
    """
    n: int
    counts: np.ndarray
    delta_f: Fraction

    def count(self, a: int, i: int) -> int:
        return int(self.counts[a, i])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DifferentialProfile):
            return NotImplemented
        return (
            self.n == other.n
            and self.delta_f == other.delta_f
            and np.array_equal(self.counts, other.counts)
        )

    def has_perfect_differential(self) -> bool:
        """δ_f = 1，即存在非零线性结构"""
        return self.delta_f == 1


def _profile_from_counts(n: int, count0: np.ndarray) -> DifferentialProfile:
    size = 1 << n
    counts = np.stack((count0, size - count0), axis=1).astype(np.int64)
    counts.setflags(write=False)
    best = int(counts[1:].max())
    return DifferentialProfile(n, counts, Fraction(best, size))


def differential_profile(
    f: BooleanFunction,
    spectrum: Optional[WalshSpectrum] = None,
) -> DifferentialProfile:
    """
    通过谱计算差分统计，O(n·2^n)

    由 2^n·C_f(a) = Σ_w (−1)^{w·a} Ŵ(w)² 得到全部 C_f(a)，
    再由 |V_{f,a}^0| = (2^n + C_f(a)) / 2 得到计数。

    参数:
        f: 布尔函数
        spectrum: 已经算好的谱（可选）
    """
    if spectrum is None:
        spectrum = walsh_transform(f)
    correlations = autocorrelation(spectrum)
    profile = _profile_from_counts(f.n, (f.size + correlations) // 2)
    logger.debug(f"差分统计完成: δ_f = {profile.delta_f}")
    return profile


def differential_profile_naive(
    f: BooleanFunction,
    max_n: Optional[int] = None,
) -> DifferentialProfile:
    """
    逐个 a 枚举的差分统计，O(4^n)，用于校验谱方法

    异常:
        DomainError: n 超过 max_n（默认取 settings.naive_profile_max_n）
    """
    limit = settings.naive_profile_max_n if max_n is None else max_n
    if f.n > limit:
        raise DomainError(f"朴素差分统计只支持 n ≤ {limit}: n = {f.n}")
    count0 = np.array(
        [derivative_counts(f, a).count0 for a in range(f.size)], dtype=np.int64
    )
    return _profile_from_counts(f.n, count0)


def high_probability_differentials(
    profile: DifferentialProfile,
    limit: int = 10,
) -> List[Differential]:
    """
    列出概率最大的差分 (a, i)，a ≠ 0

    按计数降序、再按 (a, i) 升序排列，结果确定。
    """
    size = 1 << profile.n
    flat = profile.counts[1:].reshape(-1)
    # 稳定排序保证计数相同时按 (a, i) 升序
    order = np.argsort(-flat, kind="stable")[:max(limit, 0)]
    result = []
    for position in order.tolist():
        a, i = divmod(position, 2)
        count = int(flat[position])
        result.append(Differential(a + 1, i, count, Fraction(count, size)))
    return result
