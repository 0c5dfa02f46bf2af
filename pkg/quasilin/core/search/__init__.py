"""
准线性结构搜索模块

迭代 BV 采样、GF(2) 求解与提前停止，以及置信界、运行次数估计和审计。
"""

from quasilin.core.gf2 import (
    AffineSolutionSet,
    Gf2Eliminator,
    Gf2System,
    odd_dependency,
    solve_affine_system,
)
from .bounds import (
    ConfidenceInterval,
    confidence_interval,
    default_epsilon,
    expected_bv_runs,
    hoeffding_failure_bound,
)
from .report import RoundRecord, StructureReport, Verdict
from .algorithm import QuasiStructureSearch, batch_size, default_rounds, run_structure_search
from .audit import AuditEntry, AuditResult, QuasiCheck, audit_report, quasi_check

__all__ = [
    "AffineSolutionSet",
    "Gf2Eliminator",
    "Gf2System",
    "odd_dependency",
    "solve_affine_system",
    "ConfidenceInterval",
    "confidence_interval",
    "default_epsilon",
    "expected_bv_runs",
    "hoeffding_failure_bound",
    "RoundRecord",
    "StructureReport",
    "Verdict",
    "QuasiStructureSearch",
    "batch_size",
    "default_rounds",
    "run_structure_search",
    "AuditEntry",
    "AuditResult",
    "QuasiCheck",
    "audit_report",
    "quasi_check",
]
