"""
谱恒等式校验

把谱与导数计数之间的三个恒等式暴露为一等运算，两边都用整数独立计算:

- 计数恒等式: Σ_{w·a=i} Ŵ(w)² = 2^n·|V_{f,a}^i|
- 相关恒等式: 2^n·C_f(a) = Σ_{w·a=0} Ŵ(w)² − Σ_{w·a=1} Ŵ(w)²
- Parseval:   Σ_w Ŵ(w)² = 2^{2n}
"""

from typing import NamedTuple, Optional

import numpy as np

from quasilin.core.bits import parity_array
from quasilin.core.boolfn import BooleanFunction
from quasilin.core.errors import DomainError
from quasilin.core.spectral.differential import correlation, derivative_counts
from quasilin.core.spectral.walsh import WalshSpectrum, walsh_transform


class IdentitySides(NamedTuple):
    """恒等式的两边；holds 为真表示相等"""
    spectral_side: int
    counting_side: int

    @property
    def holds(self) -> bool:
        return self.spectral_side == self.counting_side


def _split_squares(spectrum: WalshSpectrum, a: int):
    """按 w·a 的取值把 Ŵ(w)² 分成两组求和"""
    ws = np.arange(1 << spectrum.n, dtype=np.int64)
    mask = parity_array(ws & a, spectrum.n).astype(bool)
    squares = spectrum.squares()
    return int(squares[~mask].sum()), int(squares[mask].sum())


def spectral_count_identity(
    f: BooleanFunction,
    a: int,
    i: int,
    spectrum: Optional[WalshSpectrum] = None,
) -> IdentitySides:
    """
    计数恒等式两边

    返回:
        (Σ_{w·a=i} Ŵ(w)², 2^n·|V_{f,a}^i|)

    示例:
        >>> from quasilin.core.boolfn import symmetric_quadratic
        >>> spectral_count_identity(symmetric_quadratic(), 0b111, 1)
        IdentitySides(spectral_side=64, counting_side=64)
    """
    if i not in (0, 1):
        raise DomainError(f"i 必须是 0 或 1: {i}")
    if spectrum is None:
        spectrum = walsh_transform(f)
    sums = _split_squares(spectrum, a)
    return IdentitySides(sums[i], f.size * derivative_counts(f, a)[i])


def correlation_identity(
    f: BooleanFunction,
    a: int,
    spectrum: Optional[WalshSpectrum] = None,
) -> IdentitySides:
    """
    相关恒等式两边

    返回:
        (Σ_{w·a=0} Ŵ² − Σ_{w·a=1} Ŵ², 2^n·C_f(a))
    """
    if spectrum is None:
        spectrum = walsh_transform(f)
    even, odd = _split_squares(spectrum, a)
    return IdentitySides(even - odd, f.size * correlation(f, a))


def parseval_identity(spectrum: WalshSpectrum) -> IdentitySides:
    """(Σ Ŵ², 2^{2n})"""
    return IdentitySides(spectrum.parseval_sum(), 1 << (2 * spectrum.n))
