"""
置信界与运行次数估计

- hoeffding_failure_bound: 单个候选向量亏量不小于 ε 的概率上界 e^{−2mε²}
- confidence_interval: ε = m^{−λ} 时的置信区间形式
- expected_bv_runs: 证明“无线性结构”大约需要的 BV 运行次数
"""

import math
from fractions import Fraction
from numbers import Rational
from typing import NamedTuple, Optional, Union

from quasilin.config import settings
from quasilin.core.boolfn import check_variable_count
from quasilin.core.errors import DomainError

Number = Union[int, float, Fraction]


class ConfidenceInterval(NamedTuple):
    """
    置信区间

    以概率至少 confidence，每个报告的向量满足 |V_{f,a}^i|/2^n ∈ (lower, 1]。
    """
    lam: float
    epsilon: float
    lower: float
    confidence: float


def check_runs(m: int) -> int:
    if isinstance(m, bool) or not isinstance(m, int) or m < 1:
        raise DomainError(f"运行次数 m 必须是正整数: {m!r}")
    return m


def check_epsilon(epsilon: Number) -> float:
    if isinstance(epsilon, bool) or not isinstance(epsilon, (int, float, Rational)):
        raise DomainError(f"ε 必须是数字: {epsilon!r}")
    if not 0 < epsilon <= 1:
        raise DomainError(f"ε 必须在 (0, 1] 内: {epsilon}")
    return float(epsilon)


def hoeffding_failure_bound(m: int, epsilon: Number) -> float:
    """
    e^{−2mε²}

    参数:
        m: BV 运行总次数
        epsilon: 精度，0 < ε ≤ 1

    示例:
        >>> round(hoeffding_failure_bound(1, 1), 4)
        0.1353
    """
    m = check_runs(m)
    epsilon = check_epsilon(epsilon)
    return math.exp(-2.0 * m * epsilon * epsilon)


def default_epsilon(m: int, lam: Optional[float] = None) -> float:
    """ε = m^{−λ}，λ 默认取 settings.confidence_lambda"""
    m = check_runs(m)
    lam = settings.confidence_lambda if lam is None else lam
    if not 0 < lam <= 0.5:
        raise DomainError(f"λ 必须在 (0, 1/2] 内: {lam}")
    return m ** -lam


def confidence_interval(m: int, lam: Optional[float] = None) -> ConfidenceInterval:
    """
    ε = m^{−λ} 时的置信区间 (1 − m^{−λ}, 1]，置信度 1 − e^{−2m^{1−2λ}}

    λ = 1/2 时置信度固定为 1 − e^{−2}，λ 越小区间越宽、置信度越高。
    """
    lam = settings.confidence_lambda if lam is None else lam
    epsilon = default_epsilon(m, lam)
    confidence = 1.0 - math.exp(-2.0 * m ** (1.0 - 2.0 * lam))
    return ConfidenceInterval(lam, epsilon, 1.0 - epsilon, confidence)


def expected_bv_runs(delta: Number, n: int, c: Number = 1) -> int:
    """
    ⌈(n+1)·c/(1−δ)⌉

    差分均匀度为 δ 的函数，大约需要这么多次 BV 运行才能得到 n 个
    线性无关的样本并证明“无非零线性结构”。这是规划用的量级估计，
    常数 c 由调用方选择。

    参数:
        delta: 差分均匀度，1/2 ≤ δ < 1
        n: 变量个数
        c: 正的常数

    异常:
        DomainError: δ = 1（函数有真正的线性结构，无法在有限次内证明“无”）
            或参数越界

    示例:
        >>> expected_bv_runs(Fraction(3, 4), 7, 2)
        64
    """
    n = check_variable_count(n)
    delta = Fraction(delta)
    c = Fraction(c)
    if delta == 1:
        raise DomainError("δ = 1：函数存在非零线性结构，无法证明不存在")
    if not Fraction(1, 2) <= delta < 1:
        raise DomainError(f"δ 必须在 [1/2, 1) 内: {delta}")
    if c <= 0:
        raise DomainError(f"常数 c 必须为正: {c}")
    return math.ceil((n + 1) * c / (1 - delta))
