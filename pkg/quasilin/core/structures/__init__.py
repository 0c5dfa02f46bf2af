"""
线性结构模块

精确的 U_f⁰、U_f¹（定义法与谱方法两条途径）以及支撑集诊断。
"""

from .sets import StructureSets, SpectralSupport
from .exact import brute_force_linear_structures, spectral_linear_structures
from .support import (
    SupportDimensions,
    zero_in_support,
    xor_closed_triple,
    support_dimensions,
)

__all__ = [
    "StructureSets",
    "SpectralSupport",
    "brute_force_linear_structures",
    "spectral_linear_structures",
    "SupportDimensions",
    "zero_in_support",
    "xor_closed_triple",
    "support_dimensions",
]
