"""
准线性结构搜索

每轮模拟 n+1 次 BV 运行，把样本并入 H，求解 x·H = 0 与 x·H = 1，
得到候选集合 A⁰、A¹。由于 U_f^i ⊆ A^i 总成立，一旦 A⁰ = {0} 且 A¹ 为空，
就可以确定函数没有非零线性结构并提前停止；r 轮后仍未停止时，
A⁰、A¹ 中的向量以高概率是准线性结构。
"""

import logging
import time
from typing import List, Optional

from quasilin.config import settings
from quasilin.core.boolfn import BooleanFunction
from quasilin.core.errors import DomainError
from quasilin.core.gf2 import Gf2Eliminator, Gf2System
from quasilin.core.quantum_sim import BvSampler
from quasilin.core.search.bounds import (
    check_epsilon,
    confidence_interval,
    default_epsilon,
    hoeffding_failure_bound,
)
from quasilin.core.search.report import RoundRecord, StructureReport, Verdict
from quasilin.core.spectral import WalshSpectrum, walsh_transform

logger = logging.getLogger(__name__)


def batch_size(n: int) -> int:
    """每轮的 BV 运行次数，固定为 n+1"""
    return n + 1


def default_rounds(n: int) -> int:
    """默认轮数上限 r = n²"""
    return n * n


class QuasiStructureSearch:
    """
    准线性结构搜索器

    每次 run() 都是一个独立的顺序状态机，结果只由 (f, r, seed, ε) 决定。

    示例:
        >>> from quasilin.core.boolfn import symmetric_quadratic
        >>> report = QuasiStructureSearch(symmetric_quadratic(), seed=3).run()
        >>> report.verdict.value, report.a1.elements()
        ('QuasiStructures', [7])
    """

    def __init__(
        self,
        f: BooleanFunction,
        max_rounds: Optional[int] = None,
        seed: Optional[int] = None,
        epsilon: Optional[float] = None,
        spectrum: Optional[WalshSpectrum] = None,
    ):
        """
        初始化搜索器

        参数:
            f: 被分析的函数（只通过它的谱来模拟 BV 运行）
            max_rounds: 轮数上限 r，默认 n²
            seed: 采样种子，默认取 settings.default_seed
            epsilon: 精度 ε，默认在结束时取 m^{−λ}
            spectrum: 已经算好的谱（可选）

        异常:
            DomainError: r < 1 或 ε 不在 (0, 1] 内
        """
        rounds = default_rounds(f.n) if max_rounds is None else max_rounds
        if isinstance(rounds, bool) or not isinstance(rounds, int) or rounds < 1:
            raise DomainError(f"轮数 r 必须是正整数: {max_rounds!r}")
        if epsilon is not None:
            epsilon = check_epsilon(epsilon)

        self.f = f
        self.max_rounds = rounds
        self.seed = settings.default_seed if seed is None else seed
        self.epsilon = epsilon
        self.spectrum = walsh_transform(f) if spectrum is None else spectrum

    def run(self) -> StructureReport:
        """
        执行搜索

        返回:
            StructureReport，包含结论、候选集合和每轮历史
        """
        n = self.f.n
        start = time.perf_counter()
        sampler = BvSampler(self.spectrum, self.seed)
        eliminator = Gf2Eliminator(n)
        rows = set()
        history: List[RoundRecord] = []
        verdict = Verdict.QUASI_STRUCTURES

        for round_number in range(1, self.max_rounds + 1):
            samples = tuple(sampler.sample_batch(batch_size(n)).tolist())
            for w in samples:
                if w not in rows:
                    rows.add(w)
                    eliminator.add(w)

            a0 = eliminator.solution_set(0)
            a1 = eliminator.solution_set(1)
            history.append(RoundRecord(
                round=round_number,
                samples=samples,
                h_size=len(rows),
                rank=eliminator.rank,
                zero_in_h=0 in rows,
                dim_a0=a0.dimension,
                dim_a1=a1.dimension,
            ))
            logger.debug(
                f"第 {round_number} 轮: |H|={len(rows)}, 秩={eliminator.rank}, "
                f"dim A⁰={a0.dimension}, dim A¹={a1.dimension}"
            )

            if a0.is_zero_only() and a1.empty:
                verdict = Verdict.NO_LINEAR_STRUCTURE
                break

        m = sampler.draws
        epsilon = self.epsilon if self.epsilon is not None else default_epsilon(m)
        report = StructureReport(
            n=n,
            verdict=verdict,
            a0=a0,
            a1=a1,
            system=Gf2System(n, frozenset(rows)),
            bv_runs=m,
            rounds_used=len(history),
            max_rounds=self.max_rounds,
            seed=self.seed,
            epsilon=epsilon,
            failure_bound=hoeffding_failure_bound(m, epsilon),
            interval=confidence_interval(m),
            history=tuple(history),
        )

        elapsed = time.perf_counter() - start
        logger.info(
            f"搜索结束: {verdict.value}，{len(history)} 轮，m={m}，耗时 {elapsed:.3f}秒"
        )
        return report


def run_structure_search(
    f: BooleanFunction,
    max_rounds: Optional[int] = None,
    seed: Optional[int] = None,
    epsilon: Optional[float] = None,
) -> StructureReport:
    """
    便捷函数：创建搜索器并执行一次

    示例:
        >>> from quasilin.core.boolfn import make_inner_product_bent
        >>> report = run_structure_search(make_inner_product_bent(4), max_rounds=16, seed=7)
    """
    return QuasiStructureSearch(f, max_rounds=max_rounds, seed=seed, epsilon=epsilon).run()
