"""
Bernstein–Vazirani 采样模拟

一次运行以概率 S_f(w)² = Ŵ(w)²/2^{2n} 输出 w。模拟只在测量分布层面进行，
不演化 2^{n+1} 维的量子态。

概率计算全部使用整数：累积表 cumulative[w] = Σ_{v≤w} Ŵ(v)²，末项恰为 2^{2n}；
每次从 PCG64 取一个 64 位原始输出，右移 64−2n 位得到 [0, 2^{2n}) 上
严格均匀的整数 u，再二分查找第一个 cumulative[w] > u 的 w。
"""

import logging
from typing import Optional

import numpy as np

from quasilin.config import settings
from quasilin.core.errors import DomainError, SpectrumError
from quasilin.core.spectral import WalshSpectrum

logger = logging.getLogger(__name__)


class BvSampler:
    """
    BV 算法输出的采样器

    采样器是可变的随机流，同一时间只能由一个线程使用；
    同一个谱上可以并行运行多个采样器。

    示例:
        >>> from quasilin.core.boolfn import make_linear
        >>> from quasilin.core.spectral import walsh_transform
        >>> sampler = BvSampler(walsh_transform(make_linear(0b101, 3)), seed=1)
        >>> sampler.sample()
        5
    """

    def __init__(self, spectrum: WalshSpectrum, seed: int):
        """
        初始化采样器

        参数:
            spectrum: 满足 Parseval 关系的谱
            seed: 非负整数种子

        异常:
            SpectrumError: 谱不满足 Parseval 关系
            DomainError: 种子不是非负整数
        """
        if not spectrum.satisfies_parseval():
            raise SpectrumError(
                f"谱不满足 Parseval 关系: Σ Ŵ² = {spectrum.parseval_sum()}，"
                f"应为 {1 << (2 * spectrum.n)}"
            )
        if isinstance(seed, bool) or not isinstance(seed, (int, np.integer)) or seed < 0:
            raise DomainError(f"种子必须是非负整数: {seed!r}")

        self._spectrum = spectrum
        cumulative = np.cumsum(spectrum.squares())
        cumulative.setflags(write=False)
        self._cumulative = cumulative
        self._shift = np.uint64(64 - 2 * spectrum.n)
        self._bitgen = np.random.PCG64(int(seed))
        self._seed = int(seed)
        self._draws = 0
        logger.debug(f"采样器初始化: n={spectrum.n}, seed={seed}")

    @property
    def spectrum(self) -> WalshSpectrum:
        return self._spectrum

    @property
    def cumulative(self) -> np.ndarray:
        """累积平方和（只读）"""
        return self._cumulative

    @property
    def seed(self) -> int:
        return self._seed

    @property
    def draws(self) -> int:
        """已经产生的样本数"""
        return self._draws

    def sample(self) -> int:
        """模拟一次 BV 运行"""
        return int(self.sample_batch(1)[0])

    def sample_batch(self, count: int) -> np.ndarray:
        """
        连续模拟 count 次运行

        与 count 次 sample() 得到的序列完全相同。

        返回:
            int64 数组
        """
        if isinstance(count, bool) or not isinstance(count, (int, np.integer)) or count < 1:
            raise DomainError(f"样本数必须是正整数: {count!r}")
        raw = self._bitgen.random_raw(int(count))
        uniform = (raw >> self._shift).astype(np.int64)
        draws = np.searchsorted(self._cumulative, uniform, side="right").astype(np.int64)
        self._draws += int(count)
        return draws


def new_sampler(spectrum: WalshSpectrum, seed: Optional[int] = None) -> BvSampler:
    """
    创建采样器

    参数:
        spectrum: 函数的谱
        seed: 种子，默认取 settings.default_seed
    """
    if seed is None:
        seed = settings.default_seed
    return BvSampler(spectrum, seed)
