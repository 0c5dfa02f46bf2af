"""
支撑集诊断

不解方程组就能判断 U_f¹ 为空的两个充分条件，以及支撑集秩与
U_f 维数之间的关系。
"""

import logging
from typing import NamedTuple, Optional, Tuple

import numpy as np

from quasilin.config import settings
from quasilin.core.errors import DomainError
from quasilin.core.spectral import WalshSpectrum
from quasilin.core.structures.exact import spectral_linear_structures
from quasilin.core.structures.sets import SpectralSupport

logger = logging.getLogger(__name__)


class SupportDimensions(NamedTuple):
    """
    支撑集秩与结构集合维数

    Attributes:
        k: 支撑集的秩
        dim_u0: dim U_f⁰ = n − k
        u1_nonempty: U_f¹ 是否非空（非空时 |U_f¹| = |U_f⁰|）
        dim_u: dim U_f，U_f¹ 非空时为 n − k + 1，否则 n − k
    """
    k: int
    dim_u0: int
    u1_nonempty: bool
    dim_u: int


def zero_in_support(support: SpectralSupport) -> bool:
    """
    0 ∈ N_f¹

    为真时方程 0·x = 1 无解，可以直接断定 U_f¹ 为空。
    """
    return len(support) > 0 and int(support.vectors[0]) == 0


def xor_closed_triple(
    support: SpectralSupport,
    max_support: Optional[int] = None,
) -> Optional[Tuple[int, int]]:
    """
    寻找 w₁ < w₂ 使 w₁⊕w₂ 也在支撑集中

    这样的三元组意味着 x·w₁ = x·w₂ = x·(w₁⊕w₂) = 1 矛盾，U_f¹ 为空。
    两两扫描，O(|N_f¹|²)。

    参数:
        support: 谱支撑集
        max_support: 支撑集大小上限，默认取 settings.prop2_max_support

    返回:
        第一个（按 w₁、w₂ 升序）见证 (w₁, w₂)；不存在时为 None

    异常:
        DomainError: 支撑集超过上限
    """
    limit = settings.prop2_max_support if max_support is None else max_support
    if len(support) > limit:
        raise DomainError(f"两两扫描只支持 |N_f¹| ≤ {limit}: {len(support)}")

    member = np.zeros(1 << support.n, dtype=bool)
    member[support.vectors] = True
    vectors = support.vectors
    for index in range(vectors.size - 1):
        w1 = int(vectors[index])
        partners = vectors[index + 1:]
        hits = member[partners ^ w1]
        if hits.any():
            w2 = int(partners[int(np.argmax(hits))])
            logger.debug(f"支撑集异或封闭见证: {w1} ⊕ {w2}")
            return w1, w2
    return None


def support_dimensions(
    spectrum: WalshSpectrum,
    support: Optional[SpectralSupport] = None,
) -> SupportDimensions:
    """
    支撑集的秩 k 与结构集合维数

    U_f¹ 是否非空需要把基上的解代回整个支撑集才能确定，
    这里直接复用谱方法的结果。

    示例:
        >>> from quasilin.core.boolfn import symmetric_quadratic
        >>> from quasilin.core.spectral import walsh_transform
        >>> support_dimensions(walsh_transform(symmetric_quadratic()))
        SupportDimensions(k=3, dim_u0=0, u1_nonempty=True, dim_u=1)
    """
    if support is None:
        support = SpectralSupport.from_spectrum(spectrum)
    structures = spectral_linear_structures(spectrum, support)
    k = support.dimension
    u1_nonempty = not structures.u1.empty
    dim_u0 = spectrum.n - k
    return SupportDimensions(k, dim_u0, u1_nonempty, dim_u0 + (1 if u1_nonempty else 0))
