"""
精确线性结构

两条相互独立的计算途径:

- 定义法: 逐个 a 检查 f(x⊕a)+f(x) 是否为常数，O(4^n)，作为基准
- 谱方法: a ∈ U_f^i 当且仅当对支撑集中每个 w 都有 w·a = i
"""

import logging
from typing import Optional

import numpy as np

from quasilin.config import settings
from quasilin.core.bits import parity_array
from quasilin.core.boolfn import BooleanFunction
from quasilin.core.errors import DomainError
from quasilin.core.gf2 import AffineSolutionSet, Gf2System, solve_affine_system
from quasilin.core.spectral import WalshSpectrum
from quasilin.core.structures.sets import SpectralSupport, StructureSets

logger = logging.getLogger(__name__)


def brute_force_linear_structures(
    f: BooleanFunction,
    max_n: Optional[int] = None,
) -> StructureSets:
    """
    按定义枚举线性结构

    对每个 a 计算导数 f(x⊕a)+f(x)，全为 0 时 a ∈ U_f⁰，全为 1 时 a ∈ U_f¹。
    得到的元素再组装成仿射解集，组装时会验证它们确实构成陪集。

    参数:
        f: 布尔函数
        max_n: 变量个数上限，默认取 settings.brute_force_max_n

    异常:
        DomainError: n 超过上限
    """
    limit = settings.brute_force_max_n if max_n is None else max_n
    if f.n > limit:
        raise DomainError(f"定义法只支持 n ≤ {limit}: n = {f.n}")

    xs = np.arange(f.size, dtype=np.int64)
    u0, u1 = [], []
    for a in range(f.size):
        derivative = f.table ^ f.table[xs ^ a]
        first = derivative[0]
        if np.all(derivative == first):
            (u1 if first else u0).append(a)

    structures = StructureSets(
        AffineSolutionSet.from_elements(f.n, u0),
        AffineSolutionSet.from_elements(f.n, u1),
    )
    logger.debug(f"定义法: |U_f⁰| = {len(u0)}, |U_f¹| = {len(u1)}")
    return structures


def spectral_linear_structures(
    spectrum: WalshSpectrum,
    support: Optional[SpectralSupport] = None,
) -> StructureSets:
    """
    由谱支撑集求线性结构

    在支撑集的一组基上解方程组，再把 i = 1 的解代回整个支撑集验证：
    基上有解并不保证非基向量也满足 w·a = 1（它们可能是偶数个基向量的和）。

    示例:
        >>> from quasilin.core.boolfn import symmetric_quadratic
        >>> from quasilin.core.spectral import walsh_transform
        >>> s = spectral_linear_structures(walsh_transform(symmetric_quadratic()))
        >>> s.u1.elements(), s.u0.elements()
        ([7], [0])
    """
    if support is None:
        support = SpectralSupport.from_spectrum(spectrum)
    system = Gf2System(spectrum.n, frozenset(support.basis))

    u0 = solve_affine_system(system, 0)
    u1 = solve_affine_system(system, 1)
    if not u1.empty:
        # 核空间与整个支撑集正交，只需验证特解
        products = parity_array(support.vectors & u1.particular, spectrum.n)
        if not np.all(products == 1):
            logger.debug("基上的解不满足整个支撑集，U_f¹ 为空")
            u1 = AffineSolutionSet.empty_set(spectrum.n)

    return StructureSets(u0, u1)
