#!/usr/bin/env python3
"""
恒等式验证脚本

在大规模函数语料上核对谱与导数计数之间的精确整数关系：
1. 计数恒等式 Σ_{w·a=i} Ŵ(w)² = 2^n·|V_{f,a}^i|，对全部 (a, i)
2. 相关恒等式与 Parseval 关系
3. 谱方法与定义法求得的线性结构完全一致

语料：n ≤ 3 的全部函数，以及 n = 4 … 10 每个 n 若干随机函数。

使用方法:
    python scripts/validate_identities.py
    python scripts/validate_identities.py --count 10000 --workers 8
"""

import argparse
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import Dict, Iterable, List, Tuple

import numpy as np

# 添加项目根目录到 Python 路径
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

from quasilin.core.boolfn import BooleanFunction, random_function
from quasilin.core.spectral import (
    autocorrelation,
    correlation_identity,
    derivative_counts,
    differential_profile,
    parseval_identity,
    spectral_count_identity,
    walsh_transform,
)
from quasilin.core.structures import brute_force_linear_structures, spectral_linear_structures

# 逐个 (a, i) 调用 spectral_count_identity 的变量个数上限；更大的 n 用整表比较
DIRECT_IDENTITY_MAX_N = 6


def _all_functions(n: int) -> Iterable[BooleanFunction]:
    size = 1 << n
    for code in range(1 << size):
        bits = [(code >> (size - 1 - x)) & 1 for x in range(size)]
        yield BooleanFunction.from_bits(n, bits)


def check_function(f: BooleanFunction) -> Dict[str, bool]:
    """对一个函数核对各类关系，返回每类是否成立"""
    spectrum = walsh_transform(f)

    if f.n <= DIRECT_IDENTITY_MAX_N:
        counting = all(
            spectral_count_identity(f, a, i, spectrum).holds
            for a in range(f.size)
            for i in (0, 1)
        )
        correlations = all(correlation_identity(f, a, spectrum).holds for a in range(f.size))
    else:
        # 整表：谱方法得到的 |V_{f,a}^0| 与逐个 a 计数比较
        profile = differential_profile(f, spectrum)
        naive0 = np.array([derivative_counts(f, a).count0 for a in range(f.size)])
        counting = bool(np.array_equal(profile.counts[:, 0], naive0))
        naive_corr = 2 * naive0 - f.size
        correlations = bool(np.array_equal(autocorrelation(spectrum), naive_corr))

    parseval = parseval_identity(spectrum).holds
    oracle = spectral_linear_structures(spectrum) == brute_force_linear_structures(f)
    return {
        "counting": counting,
        "correlation": correlations,
        "parseval": parseval,
        "oracle": oracle,
    }


def _check_random_batch(task: Tuple[int, int, int]) -> Tuple[int, Dict[str, int]]:
    n, first_seed, count = task
    failures = {"counting": 0, "correlation": 0, "parseval": 0, "oracle": 0}
    for seed in range(first_seed, first_seed + count):
        outcome = check_function(random_function(n, seed))
        for key, ok in outcome.items():
            if not ok:
                failures[key] += 1
    return n, failures


class IdentityValidator:
    """在函数语料上核对恒等式"""

    def __init__(self, count: int = 10_000, workers: int = 1, base_seed: int = 20240101):
        self.count = count
        self.workers = workers
        self.base_seed = base_seed
        self.results: Dict[str, Dict[str, int]] = {}

    def validate_exhaustive(self, max_n: int = 3) -> None:
        """n ≤ max_n 的全部函数"""
        print(f"\n📊 穷举 n ≤ {max_n} 的全部函数...")
        for n in range(1, max_n + 1):
            start = time.perf_counter()
            failures = {"counting": 0, "correlation": 0, "parseval": 0, "oracle": 0}
            total = 0
            for f in _all_functions(n):
                total += 1
                for key, ok in check_function(f).items():
                    if not ok:
                        failures[key] += 1
            elapsed = time.perf_counter() - start
            print(f"   n = {n}: {total} 个函数，{elapsed:.2f} 秒")
            self.results[f"exhaustive-n{n}"] = dict(failures, total=total)

    def validate_random(self, sizes: Iterable[int] = range(4, 11)) -> None:
        """每个 n 取 count 个随机函数，种子为 base_seed + n·10⁶ 起的连续整数"""
        print(f"\n📊 随机函数，每个 n {self.count} 个（{self.workers} 个进程）...")
        chunk = max(1, self.count // max(1, self.workers * 4))
        tasks: List[Tuple[int, int, int]] = []
        for n in sizes:
            first = self.base_seed + n * 1_000_000
            for offset in range(0, self.count, chunk):
                tasks.append((n, first + offset, min(chunk, self.count - offset)))

        start = time.perf_counter()
        totals: Dict[int, Dict[str, int]] = {}
        if self.workers > 1:
            with ProcessPoolExecutor(max_workers=self.workers) as executor:
                outcomes = list(executor.map(_check_random_batch, tasks))
        else:
            outcomes = [_check_random_batch(task) for task in tasks]
        for n, failures in outcomes:
            merged = totals.setdefault(n, {key: 0 for key in failures})
            for key, value in failures.items():
                merged[key] += value
        for n in sorted(totals):
            self.results[f"random-n{n}"] = dict(totals[n], total=self.count)
        print(f"   耗时 {time.perf_counter() - start:.2f} 秒")

    def print_results(self) -> bool:
        print("\n" + "=" * 70)
        print("📈 验证结果")
        print("=" * 70)
        print(f"{'语料':<16} {'函数数':<10} {'计数':<8} {'相关':<8} {'Parseval':<10} {'结构':<8}")
        print("-" * 70)
        passed = True
        for name, result in self.results.items():
            print(
                f"{name:<16} {result['total']:<10} {result['counting']:<8} "
                f"{result['correlation']:<8} {result['parseval']:<10} {result['oracle']:<8}"
            )
            passed &= not any(result[key] for key in ("counting", "correlation", "parseval", "oracle"))
        print("\n" + "=" * 70)
        print("🎉 全部恒等式成立（不成立数均为 0）" if passed else "❌ 存在不成立的恒等式")
        print("=" * 70)
        return passed


def main() -> int:
    parser = argparse.ArgumentParser(description="quasilin 恒等式验证")
    parser.add_argument('--count', type=int, default=10_000, help='每个 n 的随机函数个数 (默认: 10000)')
    parser.add_argument('--workers', type=int, default=1, help='工作进程数 (默认: 1)')
    parser.add_argument('--max-random-n', type=int, default=10, help='随机语料的最大 n (默认: 10)')
    args = parser.parse_args()

    print("=" * 70)
    print("🚀 quasilin 恒等式验证")
    print("=" * 70)

    validator = IdentityValidator(count=args.count, workers=args.workers)
    validator.validate_exhaustive()
    validator.validate_random(range(4, args.max_random_n + 1))
    return 0 if validator.print_results() else 1


if __name__ == "__main__":
    sys.exit(main())
