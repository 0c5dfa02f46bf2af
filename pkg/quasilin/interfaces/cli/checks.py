"""
一致性检查

对单个函数逐项核对谱模块与结构模块的全部恒等式和等价关系。
这些关系都是定理，任何一项失败都意味着实现有错误。
"""

import logging
from typing import Callable, List, NamedTuple, Tuple

from quasilin.core.boolfn import BooleanFunction
from quasilin.core.spectral import (
    WalshSpectrum,
    correlation_identity,
    differential_profile,
    differential_profile_naive,
    parseval_identity,
    spectral_count_identity,
    walsh_transform,
    walsh_value_naive,
)
from quasilin.core.structures import (
    SpectralSupport,
    brute_force_linear_structures,
    spectral_linear_structures,
    support_dimensions,
    xor_closed_triple,
    zero_in_support,
)

logger = logging.getLogger(__name__)


class CheckOutcome(NamedTuple):
    name: str
    passed: bool
    detail: str


def _parseval(f: BooleanFunction, spectrum: WalshSpectrum) -> Tuple[bool, str]:
    sides = parseval_identity(spectrum)
    return sides.holds, f"Σ Ŵ² = {sides.spectral_side}, 2^(2n) = {sides.counting_side}"


def _fast_transform(f: BooleanFunction, spectrum: WalshSpectrum) -> Tuple[bool, str]:
    mismatches = [w for w in range(f.size) if walsh_value_naive(f, w) != spectrum[w]]
    return not mismatches, f"{f.size} 个系数，{len(mismatches)} 个不一致"


def _spectral_count(f: BooleanFunction, spectrum: WalshSpectrum) -> Tuple[bool, str]:
    failures = [
        (a, i)
        for a in range(f.size)
        for i in (0, 1)
        if not spectral_count_identity(f, a, i, spectrum).holds
    ]
    return not failures, f"{2 * f.size} 个 (a, i)，{len(failures)} 个不成立"


def _correlation(f: BooleanFunction, spectrum: WalshSpectrum) -> Tuple[bool, str]:
    failures = [a for a in range(f.size) if not correlation_identity(f, a, spectrum).holds]
    return not failures, f"{f.size} 个 a，{len(failures)} 个不成立"


def _profile(f: BooleanFunction, spectrum: WalshSpectrum) -> Tuple[bool, str]:
    fast = differential_profile(f, spectrum)
    naive = differential_profile_naive(f)
    return fast == naive, f"δ_f = {fast.delta_f}（朴素枚举 {naive.delta_f}）"


def _structure_oracle(f: BooleanFunction, spectrum: WalshSpectrum) -> Tuple[bool, str]:
    spectral = spectral_linear_structures(spectrum)
    brute = brute_force_linear_structures(f)
    return spectral == brute, f"|U_f⁰| = {len(spectral.u0)}, |U_f¹| = {len(spectral.u1)}"


def _delta_equivalence(f: BooleanFunction, spectrum: WalshSpectrum) -> Tuple[bool, str]:
    perfect = differential_profile(f, spectrum).has_perfect_differential()
    nonzero = spectral_linear_structures(spectrum).has_nonzero_structure()
    return perfect == nonzero, f"δ_f = 1: {perfect}，存在非零线性结构: {nonzero}"


def _support_diagnostics(f: BooleanFunction, spectrum: WalshSpectrum) -> Tuple[bool, str]:
    support = SpectralSupport.from_spectrum(spectrum)
    structures = spectral_linear_structures(spectrum, support)
    dims = support_dimensions(spectrum, support)
    u1_empty = structures.u1.empty

    ok = True
    if zero_in_support(support):
        ok &= u1_empty
    if xor_closed_triple(support) is not None:
        ok &= u1_empty
    expected = 1 << dims.dim_u0
    ok &= len(structures.u0) == expected
    ok &= len(structures.u1) in (0, expected)
    ok &= dims.u1_nonempty == (not u1_empty)
    return ok, f"k = {dims.k}, dim U_f⁰ = {dims.dim_u0}, dim U_f = {dims.dim_u}"


CHECKS: Tuple[Tuple[str, Callable[[BooleanFunction, WalshSpectrum], Tuple[bool, str]]], ...] = (
    ("parseval", _parseval),
    ("fast-transform", _fast_transform),
    ("spectral-count-identity", _spectral_count),
    ("correlation-identity", _correlation),
    ("differential-profile", _profile),
    ("structure-oracle", _structure_oracle),
    ("delta-structure-equivalence", _delta_equivalence),
    ("support-diagnostics", _support_diagnostics),
)


def run_consistency_checks(f: BooleanFunction) -> List[CheckOutcome]:
    """
    执行全部一致性检查

    返回:
        按固定顺序排列的检查结果
    """
    spectrum = walsh_transform(f)
    outcomes = []
    for name, check in CHECKS:
        passed, detail = check(f, spectrum)
        passed = bool(passed)
        if not passed:
            logger.error(f"一致性检查失败: {name} ({detail})")
        outcomes.append(CheckOutcome(name, passed, detail))
    logger.info(f"一致性检查: {sum(o.passed for o in outcomes)}/{len(outcomes)} 通过")
    return outcomes


__all__ = ["CheckOutcome", "CHECKS", "run_consistency_checks"]
