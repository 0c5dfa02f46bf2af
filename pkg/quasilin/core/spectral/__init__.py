"""
谱分析模块

Walsh 谱、相关函数、差分统计，以及连接谱与导数计数的恒等式。
"""

from .walsh import WalshSpectrum, fwht, walsh_transform, walsh_value_naive, autocorrelation
from .differential import (
    DerivativeCounts,
    Differential,
    DifferentialProfile,
    derivative_counts,
    correlation,
    differential_profile,
    differential_profile_naive,
    high_probability_differentials,
)
from .identities import (
    IdentitySides,
    spectral_count_identity,
    correlation_identity,
    parseval_identity,
)

__all__ = [
    "WalshSpectrum",
    "fwht",
    "walsh_transform",
    "walsh_value_naive",
    "autocorrelation",
    "DerivativeCounts",
    "Differential",
    "DifferentialProfile",
    "derivative_counts",
    "correlation",
    "differential_profile",
    "differential_profile_naive",
    "high_probability_differentials",
    "IdentitySides",
    "spectral_count_identity",
    "correlation_identity",
    "parseval_identity",
]
