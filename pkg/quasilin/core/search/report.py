"""
搜索报告类型
"""

from dataclasses import dataclass
from enum import Enum
from typing import Optional, Tuple

from quasilin.core.gf2 import AffineSolutionSet, Gf2System
from quasilin.core.search.bounds import ConfidenceInterval


class Verdict(str, Enum):
    """搜索结论"""
    NO_LINEAR_STRUCTURE = "NoLinearStructure"
    QUASI_STRUCTURES = "QuasiStructures"


@dataclass(frozen=True)
class RoundRecord:
    """
    一轮采样后的状态

    Attributes:
        round: 轮次（从 1 开始）
        samples: 本轮的 n+1 个样本（按采样顺序，含重复）
        h_size: 本轮结束后 |H|
        rank: H 的秩
        zero_in_h: 0 ∈ H
        dim_a0: A⁰ 的维数
        dim_a1: A¹ 的维数，空集为 None
    """
    round: int
    samples: Tuple[int, ...]
    h_size: int
    rank: int
    zero_in_h: bool
    dim_a0: int
    dim_a1: Optional[int]


@dataclass(frozen=True)
class StructureReport:
    """
    搜索结果

    verdict 为 NO_LINEAR_STRUCTURE 当且仅当 A⁰ = {0} 且 A¹ 为空；
    bv_runs = rounds_used × (n+1)。

    Attributes:
        n: 变量个数
        verdict: 结论
        a0: 候选集合 A⁰
        a1: 候选集合 A¹
        system: 收集到的样本集合 H
        bv_runs: BV 运行总次数 m（重复样本也计数）
        rounds_used: 实际执行的轮数
        max_rounds: 轮数上限 r
        seed: 采样种子
        epsilon: 精度 ε
        failure_bound: e^{−2mε²}
        interval: ε = m^{−λ} 形式的置信区间
        history: 每轮的状态
    """
    n: int
    verdict: Verdict
    a0: AffineSolutionSet
    a1: AffineSolutionSet
    system: Gf2System
    bv_runs: int
    rounds_used: int
    max_rounds: int
    seed: int
    epsilon: float
    failure_bound: float
    interval: ConfidenceInterval
    history: Tuple[RoundRecord, ...]

    @property
    def found_no_structure(self) -> bool:
        return self.verdict is Verdict.NO_LINEAR_STRUCTURE

    def candidates(self):
        """
        逐个给出报告的候选 (a, i)

        A⁰ 中的零向量是平凡结构，不计入。
        """
        for a in self.a0:
            if a:
                yield a, 0
        for a in self.a1:
            yield a, 1

    def candidate_count(self) -> int:
        return len(self.a0) - (0 if self.a0.empty else 1) + len(self.a1)
