"""
函数来源与内置函数注册表

命令行上的函数可以来自真值表文件、ANF 字符串、内置函数或随机生成，
四者恰好选一。

内置函数:
    paper-eq37      三元函数 x1+x2+x1x2+x2x3+x1x3（111 是线性结构）
    bent-n<k>       k 元内积型 Bent 函数，k 为偶数（bent-n2 … bent-n8 等）
    linear-<bits>   线性函数 a·x，bits 为 a 的位串，例如 linear-101
    zero-n<k>       k 元常零函数
"""

import logging
import re
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Dict, Optional, Tuple, Union

from quasilin.config import settings
from quasilin.core.bits import from_bitstring
from quasilin.core.boolfn import (
    BooleanFunction,
    anf_to_function,
    make_inner_product_bent,
    make_linear,
    parse_anf,
    random_function,
    read_truth_table,
    symmetric_quadratic,
)
from quasilin.core.errors import FixtureError
from quasilin.interfaces.cli.errors import CliError, flag_context

logger = logging.getLogger(__name__)

SYMMETRIC_QUADRATIC_FIXTURE = "paper-eq37"

FIXTURE_HELP = (
    f"{SYMMETRIC_QUADRATIC_FIXTURE}, bent-n2 … bent-n8 (任意偶数 k: bent-n<k>), "
    "linear-<bits>, zero-n<k>"
)


class SourceKind(str, Enum):
    TRUTH_TABLE_FILE = "truth-table-file"
    ANF_STRING = "anf-string"
    BUILTIN_FIXTURE = "builtin-fixture"
    RANDOM = "random"


@dataclass(frozen=True)
class FunctionSource:
    """
    函数来源

    Attributes:
        kind: 来源种类
        payload: 文件路径、ANF 文本、内置函数名或随机种子
    """
    kind: SourceKind
    payload: Union[str, int]

    @property
    def flag(self) -> str:
        return _FLAGS[self.kind]


_FLAGS = {
    SourceKind.TRUTH_TABLE_FILE: "--file",
    SourceKind.ANF_STRING: "--anf",
    SourceKind.BUILTIN_FIXTURE: "--fixture",
    SourceKind.RANDOM: "--random",
}

_PARAMETERIZED: Tuple[Tuple[re.Pattern, Callable[[str], BooleanFunction]], ...] = (
    (re.compile(r"bent-n(\d+)"), lambda k: make_inner_product_bent(int(k))),
    (re.compile(r"linear-([01]+)"), lambda bits: make_linear(from_bitstring(bits), len(bits))),
    (re.compile(r"zero-n(\d+)"), lambda k: make_linear(0, int(k))),
)

_FIXED: Dict[str, Callable[[], BooleanFunction]] = {
    SYMMETRIC_QUADRATIC_FIXTURE: symmetric_quadratic,
}


def load_fixture(name: str) -> BooleanFunction:
    """
    按名称构造内置函数

    异常:
        FixtureError: 名称不在注册表中
    """
    if name in _FIXED:
        return _FIXED[name]()
    for pattern, build in _PARAMETERIZED:
        match = pattern.fullmatch(name)
        if match:
            return build(match.group(1))
    raise FixtureError(f"未知的内置函数: {name!r}（可选: {FIXTURE_HELP}）")


def source_from_args(args) -> FunctionSource:
    """从 argparse 结果中取出唯一的函数来源"""
    if args.file is not None:
        return FunctionSource(SourceKind.TRUTH_TABLE_FILE, args.file)
    if args.anf is not None:
        return FunctionSource(SourceKind.ANF_STRING, args.anf)
    if args.fixture is not None:
        return FunctionSource(SourceKind.BUILTIN_FIXTURE, args.fixture)
    return FunctionSource(SourceKind.RANDOM, args.random)


def resolve_function(source: FunctionSource, n: Optional[int] = None) -> BooleanFunction:
    """
    按来源构造函数

    参数:
        source: 函数来源
        n: 变量个数，--anf 与 --random 必须提供

    异常:
        CliError: 来源无效，flag 指明出错的参数
    """
    if source.kind in (SourceKind.ANF_STRING, SourceKind.RANDOM) and n is None:
        raise CliError("-n", f"使用 {source.flag} 时必须指定变量个数")

    with flag_context(source.flag):
        if source.kind is SourceKind.TRUTH_TABLE_FILE:
            f = read_truth_table(source.payload)
        elif source.kind is SourceKind.ANF_STRING:
            f = anf_to_function(parse_anf(source.payload, n))
        elif source.kind is SourceKind.BUILTIN_FIXTURE:
            f = load_fixture(source.payload)
        else:
            f = random_function(n, source.payload)

    if f.n > settings.max_variables:
        raise CliError(source.flag, f"变量个数 {f.n} 超过上限 {settings.max_variables}")
    logger.info(f"函数来源 {source.kind.value}: {source.payload}，n={f.n}")
    return f
