#!/usr/bin/env python3
"""
性能验证脚本

验证快速变换及其下游运算的耗时：
- walsh_transform 在 n = 20 时 < 1 秒
- differential_profile 与 walsh_transform 同阶（两次变换）
- 采样器批量采样的吞吐量
- 搜索在 Bent 函数上的单次耗时

使用方法:
    python scripts/validate_performance.py
    python scripts/validate_performance.py --max-n 22 --repeat 5
"""

import argparse
import statistics
import sys
import time
from pathlib import Path
from typing import Callable, Dict, List

# 添加项目根目录到 Python 路径
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

from quasilin.core.boolfn import make_inner_product_bent, random_function
from quasilin.core.quantum_sim import BvSampler
from quasilin.core.search import run_structure_search
from quasilin.core.spectral import differential_profile, walsh_transform

# n = 20 的变换耗时上限（秒）
TRANSFORM_TARGET_SECONDS = 1.0


def _timings(action: Callable[[], object], repeat: int) -> Dict[str, float]:
    times: List[float] = []
    for _ in range(repeat):
        start = time.perf_counter()
        action()
        times.append(time.perf_counter() - start)
    return {
        "mean": statistics.mean(times),
        "median": statistics.median(times),
        "min": min(times),
        "max": max(times),
    }


class PerformanceValidator:
    """按固定目标验证各运算的耗时"""

    def __init__(self, max_n: int = 20, repeat: int = 3):
        self.max_n = max_n
        self.repeat = repeat
        self.results: Dict[str, Dict] = {}

    def measure_transform(self) -> Dict[int, Dict[str, float]]:
        """不同 n 下 walsh_transform 的耗时"""
        print(f"\n📊 测试 Walsh 变换 (n ≤ {self.max_n}, 每个 {self.repeat} 次)...")
        results = {}
        for n in range(min(12, self.max_n), self.max_n + 1, 2):
            f = random_function(n, seed=n)
            results[n] = _timings(lambda: walsh_transform(f), self.repeat)
        return results

    def measure_profile(self) -> Dict[str, float]:
        """differential_profile 在 max_n 下的耗时"""
        print(f"\n📊 测试差分统计 (n = {self.max_n})...")
        f = random_function(self.max_n, seed=1)
        spectrum = walsh_transform(f)
        return _timings(lambda: differential_profile(f, spectrum), self.repeat)

    def measure_sampler(self, count: int = 1_000_000) -> Dict[str, float]:
        """一次批量采样 count 个样本的耗时"""
        print(f"\n📊 测试批量采样 (n = {self.max_n}, {count} 个样本)...")
        spectrum = walsh_transform(random_function(self.max_n, seed=2))
        sampler = BvSampler(spectrum, seed=0)
        timing = _timings(lambda: sampler.sample_batch(count), self.repeat)
        timing["samples_per_second"] = count / timing["median"]
        return timing

    def measure_search(self, n: int = 16) -> Dict[str, float]:
        """Bent 函数上一次完整搜索的耗时（含变换）"""
        print(f"\n📊 测试准线性结构搜索 (bent-n{n})...")
        f = make_inner_product_bent(n)
        return _timings(lambda: run_structure_search(f, seed=7), self.repeat)

    def run_all_tests(self) -> bool:
        print("=" * 70)
        print("🚀 quasilin 性能验证")
        print("=" * 70)

        self.results["transform"] = self.measure_transform()
        self.results["profile"] = self.measure_profile()
        self.results["sampler"] = self.measure_sampler()
        self.results["search"] = self.measure_search()

        self.print_results()
        return self.validate_targets()

    def print_results(self) -> None:
        print("\n" + "=" * 70)
        print("📈 性能结果")
        print("=" * 70)

        print("\n1️⃣  Walsh 变换:")
        print(f"   {'n':<6} {'中位数(秒)':<14} {'最大(秒)':<14}")
        for n, timing in self.results["transform"].items():
            print(f"   {n:<6} {timing['median']:<14.4f} {timing['max']:<14.4f}")

        profile = self.results["profile"]
        print(f"\n2️⃣  差分统计: 中位数 {profile['median']:.4f} 秒")

        sampler = self.results["sampler"]
        print(f"\n3️⃣  批量采样: 中位数 {sampler['median']:.4f} 秒，"
              f"{sampler['samples_per_second']:.0f} 样本/秒")

        search = self.results["search"]
        print(f"\n4️⃣  搜索: 中位数 {search['median']:.4f} 秒")

    def validate_targets(self) -> bool:
        print("\n" + "=" * 70)
        print("✅ 目标验证")
        print("=" * 70)

        passed = True
        transform = self.results["transform"]
        if 20 in transform:
            median = transform[20]["median"]
            ok = median < TRANSFORM_TARGET_SECONDS
            status = "✅ PASS" if ok else "❌ FAIL"
            print(f"\n🎯 n = 20 的 Walsh 变换 < {TRANSFORM_TARGET_SECONDS} 秒: {median:.4f} 秒 {status}")
            passed &= ok
        else:
            print("\n⚠️  未测量 n = 20（--max-n 小于 20）")

        largest = max(transform)
        ratio = self.results["profile"]["median"] / transform[largest]["median"]
        ok = ratio < 4.0
        status = "✅ PASS" if ok else "❌ FAIL"
        print(f"🎯 差分统计 / 变换耗时比 < 4: {ratio:.2f} {status}")
        passed &= ok

        print("\n" + "=" * 70)
        print("🎉 全部性能目标达成!" if passed else "⚠️  部分性能目标未达成")
        print("=" * 70)
        return passed


def main() -> int:
    parser = argparse.ArgumentParser(description="quasilin 性能验证")
    parser.add_argument('--max-n', type=int, default=20, help='最大变量个数 (默认: 20)')
    parser.add_argument('--repeat', type=int, default=3, help='每项测量重复次数 (默认: 3)')
    args = parser.parse_args()

    validator = PerformanceValidator(max_n=args.max_n, repeat=args.repeat)
    return 0 if validator.run_all_tests() else 1


if __name__ == "__main__":
    sys.exit(main())
