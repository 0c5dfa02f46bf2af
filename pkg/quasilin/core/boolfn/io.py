"""
真值表文件读写

文件格式:
    第一行: n=<整数>
    第二行: 2^n 个 '0'/'1' 字符（按下标顺序），
            或 "hex:" 后接 ⌈2^n/4⌉ 个十六进制数字，
            最高的半字节对应最小的下标；不足 4 位的尾部补 0。
"""

import logging
from pathlib import Path
from typing import Union

import numpy as np

from quasilin.core.boolfn.function import BooleanFunction, check_variable_count
from quasilin.core.errors import TruthTableFormatError

logger = logging.getLogger(__name__)

HEX_PREFIX = "hex:"


def parse_truth_table(text: str) -> BooleanFunction:
    """
    解析真值表文本

    参数:
        text: 文件内容

    返回:
        BooleanFunction

    异常:
        TruthTableFormatError: 格式不符
        VariableRangeError: n 超出 [1, 24]
    """
    lines = [line.strip() for line in text.splitlines() if line.strip()]
    if len(lines) != 2:
        raise TruthTableFormatError(f"真值表文件必须恰好包含两行非空内容，实际 {len(lines)} 行")

    header, body = lines
    if not header.startswith("n="):
        raise TruthTableFormatError(f"第一行必须形如 n=<整数>: {header!r}")
    try:
        n = int(header[2:].strip())
    except ValueError:
        raise TruthTableFormatError(f"无法解析变量个数: {header!r}")
    n = check_variable_count(n)
    size = 1 << n

    if body.lower().startswith(HEX_PREFIX):
        digits = body[len(HEX_PREFIX):].strip()
        expected = (size + 3) // 4
        if len(digits) != expected:
            raise TruthTableFormatError(
                f"十六进制真值表需要 {expected} 个数字，实际 {len(digits)} 个"
            )
        try:
            raw = bytes.fromhex(digits + ("0" if len(digits) % 2 else ""))
        except ValueError:
            raise TruthTableFormatError(f"无效的十六进制数字: {digits!r}")
        bits = np.unpackbits(np.frombuffer(raw, dtype=np.uint8))
        if np.any(bits[size:len(digits) * 4]):
            raise TruthTableFormatError("十六进制真值表的填充位必须为 0")
        table = bits[:size]
    else:
        if len(body) != size:
            raise TruthTableFormatError(f"真值表需要 {size} 个字符，实际 {len(body)} 个")
        if any(ch not in "01" for ch in body):
            raise TruthTableFormatError("真值表只能包含 '0' 和 '1'")
        table = np.frombuffer(body.encode("ascii"), dtype=np.uint8) - ord("0")

    return BooleanFunction(n, table)


def format_truth_table(f: BooleanFunction, use_hex: bool = False) -> str:
    """把函数写成真值表文件文本（以换行结尾）"""
    if use_hex:
        digits = (f.size + 3) // 4
        body = HEX_PREFIX + f.packed().hex()[:digits]
    else:
        body = f.bitstring()
    return f"n={f.n}\n{body}\n"


def read_truth_table(path: Union[str, Path]) -> BooleanFunction:
    """从文件读取真值表"""
    path = Path(path)
    if not path.exists():
        raise TruthTableFormatError(f"真值表文件不存在: {path}")
    f = parse_truth_table(path.read_text(encoding="utf-8"))
    logger.info(f"从 {path} 读取 {f.n} 元布尔函数")
    return f


def write_truth_table(f: BooleanFunction, path: Union[str, Path], use_hex: bool = False) -> None:
    """把真值表写入文件"""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(format_truth_table(f, use_hex), encoding="utf-8")
    logger.info(f"真值表已写入 {path}")
