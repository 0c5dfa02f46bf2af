"""
准线性结构审计

用导数计数核对搜索报告中的每个候选向量：亏量 1 − |V_{f,a}^i|/2^n
是否小于 ε。
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Optional, Tuple

from quasilin.config import settings
from quasilin.core.boolfn import BooleanFunction
from quasilin.core.errors import DomainError
from quasilin.core.search.bounds import Number, check_epsilon
from quasilin.core.search.report import StructureReport
from quasilin.core.spectral import DifferentialProfile, derivative_counts, differential_profile

logger = logging.getLogger(__name__)


class QuasiCheck(NamedTuple):
    """单个向量的审计结果"""
    is_quasi: bool
    deficiency: Fraction


class AuditEntry(NamedTuple):
    a: int
    i: int
    deficiency: Fraction
    is_quasi: bool


@dataclass(frozen=True)
class AuditResult:
    """
    整份报告的审计结果

    Attributes:
        epsilon: 审计使用的 ε
        entries: 每个候选向量（不含零向量）的审计结果
        violations: 亏量不小于 ε 的向量个数
        failure_bound: 报告给出的单向量失败概率上界
    """
    epsilon: float
    entries: Tuple[AuditEntry, ...]
    violations: int
    failure_bound: float

    @property
    def checked(self) -> int:
        return len(self.entries)

    @property
    def violation_fraction(self) -> float:
        return self.violations / self.checked if self.entries else 0.0


def _check_audit_size(f: BooleanFunction, max_n: Optional[int]) -> None:
    limit = settings.brute_force_max_n if max_n is None else max_n
    if f.n > limit:
        raise DomainError(f"审计只支持 n ≤ {limit}: n = {f.n}")


def quasi_check(
    f: BooleanFunction,
    a: int,
    i: int,
    epsilon: Number,
    max_n: Optional[int] = None,
) -> QuasiCheck:
    """
    判断 a 是否为 ε 意义下的准线性结构

    直接统计 f(x⊕a)+f(x) = i 的 x 个数，亏量为精确分数。

    示例:
        >>> from quasilin.core.boolfn import make_inner_product_bent
        >>> quasi_check(make_inner_product_bent(2), 0b01, 0, 0.4)
        QuasiCheck(is_quasi=False, deficiency=Fraction(1, 2))
    """
    if i not in (0, 1):
        raise DomainError(f"i 必须是 0 或 1: {i}")
    if epsilon <= 0:
        raise DomainError(f"ε 必须为正: {epsilon}")
    _check_audit_size(f, max_n)
    count = derivative_counts(f, a)[i]
    deficiency = 1 - Fraction(count, f.size)
    return QuasiCheck(deficiency < epsilon, deficiency)


def audit_report(
    report: StructureReport,
    f: BooleanFunction,
    epsilon: Optional[Number] = None,
    profile: Optional[DifferentialProfile] = None,
    max_n: Optional[int] = None,
) -> AuditResult:
    """
    审计搜索报告中的全部候选向量

    候选集合可能有 2^n 量级的元素，逐个直接计数代价太高，
    这里一次性算出全部 |V_{f,a}^i| 再查表，结果与 quasi_check 相同。

    参数:
        report: 搜索报告
        f: 被分析的函数
        epsilon: 审计精度，默认使用报告中的 ε
        profile: 已经算好的差分统计（可选）
    """
    if report.n != f.n:
        raise DomainError(f"报告的变量个数 {report.n} 与函数的 {f.n} 不一致")
    _check_audit_size(f, max_n)
    epsilon = report.epsilon if epsilon is None else check_epsilon(epsilon)
    if profile is None:
        profile = differential_profile(f)

    entries = []
    violations = 0
    for a, i in report.candidates():
        deficiency = 1 - Fraction(profile.count(a, i), f.size)
        is_quasi = deficiency < epsilon
        if not is_quasi:
            violations += 1
        entries.append(AuditEntry(a, i, deficiency, is_quasi))

    result = AuditResult(epsilon, tuple(entries), violations, report.failure_bound)
    logger.info(f"审计 {result.checked} 个候选向量，{violations} 个亏量不小于 ε={epsilon:.6g}")
    return result
