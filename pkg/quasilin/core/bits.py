"""
位向量工具

F₂ⁿ 中的向量统一用 Python 整数表示，x₁ 对应最高位：
向量 (x₁, …, x_n) 的整数值为 Σ x_i·2^{n−i}。
"""

import numpy as np


def dot(a: int, b: int) -> int:
    """GF(2) 内积 a·b，即 a AND b 的奇偶性"""
    return bin(a & b).count("1") & 1


def parity_array(values: np.ndarray, n: int) -> np.ndarray:
    """逐元素计算 n 位整数数组的奇偶性，返回 0/1 的 uint8 数组"""
    values = np.asarray(values, dtype=np.int64)
    parity = np.zeros(values.shape, dtype=np.int64)
    for i in range(n):
        parity ^= (values >> i) & 1
    return parity.astype(np.uint8)


def to_bitstring(v: int, n: int) -> str:
    """按 x₁…x_n 的顺序输出位串"""
    return format(v, f"0{n}b") if n > 0 else ""


def from_bitstring(text: str) -> int:
    """
    位串转整数

    参数:
        text: 只含 '0'/'1' 的字符串，最左边是 x₁

    返回:
        向量的整数表示

    异常:
        ValueError: 含有其他字符或为空
    """
    if not text or any(ch not in "01" for ch in text):
        raise ValueError(f"无效的位串: {text!r}")
    return int(text, 2)

