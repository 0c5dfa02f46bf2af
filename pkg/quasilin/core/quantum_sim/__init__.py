"""
量子采样模拟模块
"""

from .sampler import BvSampler, new_sampler

__all__ = ["BvSampler", "new_sampler"]
