"""
线性结构集合类型
"""

from dataclasses import dataclass
from typing import Tuple

import numpy as np

from quasilin.core.gf2 import AffineSolutionSet, span_basis
from quasilin.core.spectral import WalshSpectrum


@dataclass(frozen=True)
class StructureSets:
    """
    精确的线性结构集合 U_f⁰ 与 U_f¹

    两个集合都以仿射解集的形式保存，集合很大时也不展开元素。

    Attributes:
        u0: U_f⁰，总是含有零向量的线性子空间
        u1: U_f¹，空集或 U_f⁰ 的一个陪集
    """
    u0: AffineSolutionSet
    u1: AffineSolutionSet

    @property
    def n(self) -> int:
        return self.u0.n

    def has_nonzero_structure(self) -> bool:
        """U_f ≠ {0}"""
        return len(self.u0) > 1 or not self.u1.empty

    def structure_value(self, a: int):
        """a 属于 U_f^i 时返回 i，否则 None"""
        if a in self.u0:
            return 0
        if a in self.u1:
            return 1
        return None

    def union_dimension(self) -> int:
        """dim U_f：U_f¹ 非空时比 U_f⁰ 多一维"""
        return self.u0.dimension + (0 if self.u1.empty else 1)


@dataclass(frozen=True, eq=False)
class SpectralSupport:
    """
    谱支撑集 N_f¹ = {w : Ŵ(w) ≠ 0}

    Attributes:
        n: 变量个数
        vectors: 升序排列的支撑集向量（只读 int64 数组）
        basis: 支撑集张成空间的约化基
    """
    n: int
    vectors: np.ndarray
    basis: Tuple[int, ...]

    @classmethod
    def from_spectrum(cls, spectrum: WalshSpectrum) -> "SpectralSupport":
        vectors = spectrum.support().astype(np.int64)
        vectors.setflags(write=False)
        return cls(spectrum.n, vectors, span_basis(vectors))

    @property
    def dimension(self) -> int:
        """支撑集在 GF(2) 上的秩"""
        return len(self.basis)

    def __len__(self) -> int:
        return int(self.vectors.size)

    def __contains__(self, w: int) -> bool:
        position = int(np.searchsorted(self.vectors, w))
        return position < self.vectors.size and int(self.vectors[position]) == w
