"""
报告文档模型

本模块定义命令行输出使用的 Pydantic 模型。报告中不含时间戳等易变字段，
同样的参数总是得到逐字节相同的 JSON。
"""

from fractions import Fraction
from typing import List, Optional

from pydantic import BaseModel, ConfigDict, Field

from quasilin.config import settings
from quasilin.core.bits import to_bitstring
from quasilin.core.gf2 import AffineSolutionSet
from quasilin.utils.formatting import bitstrings, format_fraction


class ReportModel(BaseModel):
    """所有报告模型的基类：字段顺序固定，禁止多余字段"""
    model_config = ConfigDict(extra="forbid")


class Rational(ReportModel):
    """
    精确分数

    Attributes:
        text: "p/q" 写法
        decimal: 小数近似
        numerator: 分子
        denominator: 分母
    """
    text: str
    decimal: float
    numerator: int
    denominator: int

    @classmethod
    def of(cls, value) -> "Rational":
        value = Fraction(value)
        return cls(
            text=format_fraction(value),
            decimal=round(float(value), 12),
            numerator=value.numerator,
            denominator=value.denominator,
        )


class SourceModel(ReportModel):
    kind: str = Field(..., description="truth-table-file | anf-string | builtin-fixture | random")
    payload: str
    n: int


class AffineSetModel(ReportModel):
    """
    仿射解集

    集合较小时（不超过 enumeration_limit 个元素）同时列出全部元素。
    """
    empty: bool
    size: int
    dimension: Optional[int] = None
    particular: Optional[str] = None
    kernel_basis: List[str] = Field(default_factory=list)
    elements: Optional[List[str]] = None

    @classmethod
    def of(cls, solutions: AffineSolutionSet, limit: Optional[int] = None) -> "AffineSetModel":
        limit = settings.enumeration_limit if limit is None else limit
        n = solutions.n
        if solutions.empty:
            return cls(empty=True, size=0, elements=[])
        return cls(
            empty=False,
            size=len(solutions),
            dimension=solutions.dimension,
            particular=to_bitstring(solutions.particular, n),
            kernel_basis=bitstrings(solutions.kernel_basis, n),
            elements=bitstrings(solutions.elements(), n) if len(solutions) <= limit else None,
        )


# ============================================================================
# spectrum
# ============================================================================

class SpectrumEntry(ReportModel):
    w: str
    walsh: int = Field(..., description="Ŵ(w) = 2^n·S_f(w)")
    normalized: Rational = Field(..., description="S_f(w)")


class SpectrumReport(ReportModel):
    command: str = "spectrum"
    source: SourceModel
    order: str
    support_size: int
    parseval_holds: bool
    entries: List[SpectrumEntry]


# ============================================================================
# exact
# ============================================================================

class SupportDiagnostics(ReportModel):
    """
    支撑集诊断

    Attributes:
        zero_in_support: 0 ∈ N_f¹（为真时 U_f¹ 为空）
        xor_triple: w₁, w₂, w₁⊕w₂ 都在支撑集中的见证；未扫描时为 None
        xor_triple_scanned: 支撑集是否在两两扫描的规模上限内
        odd_dependency: 支撑集中奇数个异或为 0 的向量
        k: 支撑集的秩
        dim_u0: n − k
        u1_nonempty: U_f¹ 非空
        dim_u: dim U_f
    """
    zero_in_support: bool
    xor_triple: Optional[List[str]] = None
    xor_triple_scanned: bool
    odd_dependency: Optional[List[str]] = None
    k: int
    dim_u0: int
    u1_nonempty: bool
    dim_u: int


class ExactReport(ReportModel):
    command: str = "exact"
    source: SourceModel
    anf: str
    delta_f: Rational
    u0: AffineSetModel
    u1: AffineSetModel
    brute_force_agrees: Optional[bool] = Field(
        None, description="定义法与谱方法是否一致；n 超过上限时为 null"
    )
    diagnostics: SupportDiagnostics


# ============================================================================
# algorithm1
# ============================================================================

class RoundModel(ReportModel):
    round: int
    samples: List[str]
    h_size: int
    rank: int
    zero_in_h: bool
    dim_a0: int
    dim_a1: Optional[int] = None


class ConfidenceModel(ReportModel):
    lam: float
    epsilon: float
    lower: float
    confidence: float


class AuditEntryModel(ReportModel):
    a: str
    i: int
    deficiency: Rational
    is_quasi: bool


class AuditModel(ReportModel):
    epsilon: float
    checked: int
    violations: int
    violation_fraction: float
    failure_bound: float
    entries: List[AuditEntryModel]
    entries_truncated: bool


class SearchReport(ReportModel):
    command: str = "algorithm1"
    source: SourceModel
    verdict: str
    a0: AffineSetModel
    a1: AffineSetModel
    bv_runs: int
    rounds_used: int
    max_rounds: int
    batch_size: int
    seed: int
    h_size: int
    epsilon: float
    failure_bound: float = Field(..., description="e^{−2mε²}，对每个候选向量单独成立")
    confidence: ConfidenceModel
    history: List[RoundModel]
    audit: Optional[AuditModel] = None


# ============================================================================
# profile
# ============================================================================

class DifferentialModel(ReportModel):
    a: str
    i: int
    count: int
    probability: Rational


class ProfileReport(ReportModel):
    command: str = "profile"
    source: SourceModel
    delta_f: Rational
    perfect_differential: bool
    expected_bv_runs: Optional[int] = Field(
        None, description="⌈(n+1)/(1−δ_f)⌉；δ_f = 1 时为 null"
    )
    top: List[DifferentialModel]


# ============================================================================
# check
# ============================================================================

class CheckItem(ReportModel):
    name: str
    passed: bool
    detail: str


class CheckReport(ReportModel):
    command: str = "check"
    source: SourceModel
    passed: bool
    delta_f: Rational
    checks: List[CheckItem]
