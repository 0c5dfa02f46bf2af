"""
布尔函数生成器

提供线性函数、内积型 Bent 函数、带预置线性结构的函数、
随机函数以及扰动函数等构造方法，主要作为测试和实验的输入。
"""

import logging
from typing import Optional

import numpy as np

from quasilin.core.bits import parity_array
from quasilin.core.boolfn.anf import anf_to_function, parse_anf
from quasilin.core.boolfn.function import BooleanFunction, check_variable_count
from quasilin.core.errors import DomainError, VariableRangeError

logger = logging.getLogger(__name__)

# 三元二次函数 x1+x2+x1x2+x2x3+x1x3：支撑集秩为 3，但 111 仍是线性结构
SYMMETRIC_QUADRATIC_ANF = "x1+x2+x1x2+x2x3+x1x3"


def make_linear(a: int, n: int) -> BooleanFunction:
    """
    线性函数 f(x) = a·x

    参数:
        a: 系数向量（整数表示，x₁ 为最高位）
        n: 变量个数

    示例:
        >>> make_linear(0b11, 2).bitstring()
        '0110'
    """
    n = check_variable_count(n)
    if a < 0 or a >= (1 << n):
        raise VariableRangeError(f"向量 {a} 不在 F₂^{n} 中", a)
    xs = np.arange(1 << n, dtype=np.int64)
    return BooleanFunction(n, parity_array(xs & a, n))


def make_inner_product_bent(n: int) -> BooleanFunction:
    """
    内积型 Bent 函数 f(x, y) = Σ x_i·y_i

    前 n/2 个变量是 x，后 n/2 个变量是 y；差分均匀度为 1/2。

    异常:
        DomainError: n 为奇数
    """
    n = check_variable_count(n)
    if n % 2:
        raise DomainError(f"Bent 函数要求变量个数为偶数: {n}")
    half = n // 2
    xs = np.arange(1 << n, dtype=np.int64)
    high = xs >> half
    low = xs & ((1 << half) - 1)
    return BooleanFunction(n, parity_array(high & low, half))


def plant_structure(g: BooleanFunction, i: int) -> BooleanFunction:
    """
    预置线性结构

    返回 n = g.n + 1 元函数 f(x₁, …, x_n) = g(x₂, …, x_n) + i·x₁，
    向量 (1, 0, …, 0) 一定属于 U_f^i。
    """
    if i not in (0, 1):
        raise DomainError(f"i 必须是 0 或 1: {i}")
    n = check_variable_count(g.n + 1)
    upper = g.table ^ np.uint8(i)
    return BooleanFunction(n, np.concatenate([g.table, upper]))


def random_function(n: int, seed: Optional[int]) -> BooleanFunction:
    """
    随机布尔函数

    每个真值表位独立均匀取值，使用 numpy 的 PCG64 生成器；
    相同的 seed 总是得到相同的函数。
    """
    n = check_variable_count(n)
    rng = np.random.default_rng(seed)
    return BooleanFunction(n, rng.integers(0, 2, size=1 << n, dtype=np.uint8))


def flip_bits(f: BooleanFunction, count: int, seed: Optional[int]) -> BooleanFunction:
    """
    翻转 count 个不同位置的真值表位

    对预置结构的函数做少量翻转，可以得到亏量不超过 2·count/2^n 的
    准线性结构。
    """
    if count < 0 or count > f.size:
        raise DomainError(f"翻转位数必须在 0 到 {f.size} 之间: {count}")
    rng = np.random.default_rng(seed)
    positions = rng.choice(f.size, size=count, replace=False)
    table = f.table.copy()
    table[positions] ^= 1
    logger.debug(f"翻转 {count} 个真值表位")
    return BooleanFunction(f.n, table)


def symmetric_quadratic() -> BooleanFunction:
    """三元函数 x1+x2+x1x2+x2x3+x1x3，真值表 00101011"""
    return anf_to_function(parse_anf(SYMMETRIC_QUADRATIC_ANF, 3))
