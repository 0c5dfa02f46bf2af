#!/usr/bin/env python3
"""
统计验证脚本

用固定的种子集合运行四组统计实验：
1. 可靠性：预置结构的函数上从不输出 “无线性结构”，且候选集合包含预置向量
2. 运行次数：Bent 函数上搜索在 r = 4n 轮内停止，平均 BV 运行次数接近 2(n+1)
3. 采样分布：10⁶ 次采样的经验频率与 Ŵ(w)²/2^{2n} 一致
4. 覆盖率：随机 8 元函数及翻转一位的预置结构函数上，亏量不小于 ε 的候选向量比例不超过 e^{−2mε²}

种子集合：第 k 次试验使用种子 BASE_SEED + k。

使用方法:
    python scripts/validate_statistics.py
    python scripts/validate_statistics.py --workers 8 --trials 2000
"""

import argparse
import math
import statistics
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import Dict, List, Tuple

import numpy as np
from scipy.stats import chisquare

# 添加项目根目录到 Python 路径
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

from quasilin.core.boolfn import (
    flip_bits,
    make_inner_product_bent,
    plant_structure,
    random_function,
    symmetric_quadratic,
)
from quasilin.core.quantum_sim import BvSampler
from quasilin.core.search import (
    Verdict,
    audit_report,
    batch_size,
    expected_bv_runs,
    run_structure_search,
)
from quasilin.core.spectral import walsh_transform

BASE_SEED = 1_000


def _soundness_trial(seed: int) -> Tuple[bool, bool]:
    """返回 (误报 “无”, 候选集合包含预置向量)"""
    n = 4 + seed % 7
    i = seed % 2
    f = plant_structure(random_function(n - 1, seed), i)
    report = run_structure_search(f, seed=seed)
    planted = 1 << (n - 1)
    candidates = report.a1 if i else report.a0
    return report.verdict is Verdict.NO_LINEAR_STRUCTURE, planted in candidates


def _run_count_trial(task: Tuple[int, int]) -> Tuple[bool, int]:
    n, seed = task
    report = run_structure_search(make_inner_product_bent(n), max_rounds=4 * n, seed=seed)
    return report.verdict is Verdict.NO_LINEAR_STRUCTURE, report.bv_runs


def _coverage_trial(seed: int) -> Tuple[int, int]:
    """
    返回 (审计的候选向量数, 亏量不小于 ε 的个数)

    每个种子审计两个函数：随机函数，以及预置结构后翻转一位的函数
    （预置向量成为亏量 2/2^n 的准线性结构）。
    """
    n = 8
    rounds = 9
    m = rounds * batch_size(n)
    perturbed = flip_bits(plant_structure(random_function(n - 1, seed), seed % 2), 1, seed)
    checked = violations = 0
    for f in (random_function(n, seed), perturbed):
        report = run_structure_search(f, max_rounds=rounds, seed=seed, epsilon=m ** -0.5)
        audit = audit_report(report, f)
        checked += audit.checked
        violations += audit.violations
    return checked, violations


class StatisticsValidator:
    """统计实验"""

    def __init__(self, trials: int = 1_000, workers: int = 1):
        self.trials = trials
        self.workers = workers
        self.results: Dict[str, Dict] = {}

    def _map(self, function, tasks: List) -> List:
        if self.workers > 1:
            with ProcessPoolExecutor(max_workers=self.workers) as executor:
                return list(executor.map(function, tasks, chunksize=16))
        return [function(task) for task in tasks]

    def validate_soundness(self) -> None:
        print(f"\n📊 可靠性：{self.trials} 个预置结构函数 (n = 4 … 10)...")
        outcomes = self._map(_soundness_trial, [BASE_SEED + k for k in range(self.trials)])
        self.results["soundness"] = {
            "false_no": sum(no for no, _ in outcomes),
            "missing_planted": sum(not contained for _, contained in outcomes),
            "trials": len(outcomes),
        }

    def validate_run_count(self, trials: int = 200) -> None:
        print(f"\n📊 运行次数：Bent 函数 n ∈ {{4, 6, 8}}，每个 {trials} 次...")
        rows = {}
        for n in (4, 6, 8):
            outcomes = self._map(_run_count_trial, [(n, BASE_SEED + k) for k in range(trials)])
            halted = [runs for no, runs in outcomes if no]
            rows[n] = {
                "halt_rate": len(halted) / trials,
                "mean_runs": statistics.mean(halted) if halted else math.inf,
                "expected": expected_bv_runs(0.5, n, 1),
            }
        self.results["run_count"] = rows

    def validate_sampler(self, draws: int = 1_000_000) -> None:
        print(f"\n📊 采样分布：三元对称二次函数 {draws} 次采样...")
        spectrum = walsh_transform(symmetric_quadratic())
        samples = BvSampler(spectrum, seed=BASE_SEED).sample_batch(draws)
        frequencies = np.bincount(samples, minlength=8) / draws
        expected = spectrum.squares() / float(1 << (2 * spectrum.n))
        support = expected > 0
        _, p_value = chisquare(
            np.bincount(samples, minlength=8)[support],
            expected[support] * draws,
        )
        self.results["sampler"] = {
            "max_deviation": float(np.max(np.abs(frequencies[support] - expected[support]))),
            "off_support": int(np.bincount(samples, minlength=8)[~support].sum()),
            "p_value": float(p_value),
        }

    def validate_coverage(self) -> None:
        print(f"\n📊 覆盖率：{self.trials} 个随机 8 元函数与 {self.trials} 个翻转一位的预置结构函数，m = 81，ε = m^(-1/2)...")
        outcomes = self._map(_coverage_trial, [BASE_SEED + k for k in range(self.trials)])
        checked = sum(c for c, _ in outcomes)
        violations = sum(v for _, v in outcomes)
        self.results["coverage"] = {
            "checked": checked,
            "violations": violations,
            "fraction": violations / checked if checked else 0.0,
            "bound": math.exp(-2.0),
        }

    def validate_targets(self) -> bool:
        print("\n" + "=" * 70)
        print("✅ 目标验证")
        print("=" * 70)
        passed = True

        soundness = self.results["soundness"]
        ok = soundness["false_no"] == 0 and soundness["missing_planted"] == 0
        print(f"\n🎯 可靠性：误报 {soundness['false_no']}，漏掉预置向量 "
              f"{soundness['missing_planted']} / {soundness['trials']} {'✅ PASS' if ok else '❌ FAIL'}")
        passed &= ok

        print("\n🎯 运行次数（停止率 ≥ 99%，平均次数在 2(n+1) 的 3 倍以内）")
        for n, row in self.results["run_count"].items():
            ratio = row["mean_runs"] / row["expected"]
            ok = row["halt_rate"] >= 0.99 and 1 / 3 <= ratio <= 3
            print(f"   n = {n}: 停止率 {row['halt_rate']:.3f}，平均 {row['mean_runs']:.1f} 次，"
                  f"估计 {row['expected']} 次 {'✅ PASS' if ok else '❌ FAIL'}")
            passed &= ok

        sampler = self.results["sampler"]
        ok = sampler["max_deviation"] <= 0.005 and sampler["off_support"] == 0
        print(f"\n🎯 采样分布：最大偏差 {sampler['max_deviation']:.5f}，支撑集外 "
              f"{sampler['off_support']} 次，χ² p = {sampler['p_value']:.3f} {'✅ PASS' if ok else '❌ FAIL'}")
        passed &= ok

        coverage = self.results["coverage"]
        ok = coverage["fraction"] <= coverage["bound"]
        print(f"\n🎯 覆盖率：{coverage['violations']} / {coverage['checked']} = "
              f"{coverage['fraction']:.4f} ≤ {coverage['bound']:.4f} {'✅ PASS' if ok else '❌ FAIL'}")
        passed &= ok

        print("\n" + "=" * 70)
        print("🎉 全部统计目标达成!" if passed else "⚠️  部分统计目标未达成")
        print("=" * 70)
        return passed

    def run_all(self) -> bool:
        print("=" * 70)
        print("🚀 quasilin 统计验证")
        print("=" * 70)
        start = time.perf_counter()
        self.validate_soundness()
        self.validate_run_count()
        self.validate_sampler()
        self.validate_coverage()
        print(f"\n总耗时 {time.perf_counter() - start:.1f} 秒")
        return self.validate_targets()


def main() -> int:
    parser = argparse.ArgumentParser(description="quasilin 统计验证")
    parser.add_argument('--trials', type=int, default=1_000, help='可靠性与覆盖率实验的试验次数 (默认: 1000)')
    parser.add_argument('--workers', type=int, default=1, help='工作进程数 (默认: 1)')
    args = parser.parse_args()

    validator = StatisticsValidator(trials=args.trials, workers=args.workers)
    return 0 if validator.run_all() else 1


if __name__ == "__main__":
    sys.exit(main())
