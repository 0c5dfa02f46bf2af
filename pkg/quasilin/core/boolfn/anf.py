"""
代数正规型（ANF）模块

负责 ANF 表达式的解析、打印以及与真值表之间的相互转换。

支持的文法（空白字符忽略）:
    expression := term ('+' term)*
    term       := '0' | '1' | factor+
    factor     := 'x' integer          (1 ≤ integer ≤ n)

'+' 是 GF(2) 上的加法（异或），因此出现偶数次的单项式相互抵消。
"""

import logging
from dataclasses import dataclass
from typing import FrozenSet, Iterable, List, Optional

import numpy as np

from quasilin.core.boolfn.function import BooleanFunction, check_variable_count
from quasilin.core.errors import AnfSyntaxError, VariableRangeError

logger = logging.getLogger(__name__)

Monomial = FrozenSet[int]


@dataclass(frozen=True)
class AnfExpression:
    """
    ANF 表达式

    Attributes:
        n: 变量个数
        monomials: 单项式集合，每个单项式是变量下标的集合；
            空集表示常数 1
    """
    n: int
    monomials: FrozenSet[Monomial]

    def __post_init__(self):
        n = check_variable_count(self.n)
        monomials = frozenset(frozenset(int(i) for i in m) for m in self.monomials)
        for monomial in monomials:
            for index in monomial:
                if index < 1 or index > n:
                    raise VariableRangeError(
                        f"变量下标 x{index} 超出范围 [1, {n}]", index
                    )
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "monomials", monomials)

    @classmethod
    def from_terms(cls, n: int, terms: Iterable[Iterable[int]]) -> "AnfExpression":
        """
        由单项式序列构造，按异或语义合并重复项

        示例:
            >>> AnfExpression.from_terms(2, [[1], [1], [2]]).monomials
            frozenset({frozenset({2})})
        """
        result = set()
        for term in terms:
            result ^= {frozenset(term)}
        return cls(n, frozenset(result))

    @property
    def degree(self) -> int:
        return max((len(m) for m in self.monomials), default=0)


class AnfParser:
    """
    ANF 表达式解析器

    逐字符扫描，出错时报告字符位置。

    示例:
        >>> expr = AnfParser("x1+x2+x1x2+x2x3+x1x3", 3).parse()
        >>> len(expr.monomials)
        5
    """

    def __init__(self, text: str, n: int):
        self.text = text
        self.n = check_variable_count(n)
        self.i = 0

    def _skip_whitespace(self) -> None:
        while self.i < len(self.text) and self.text[self.i].isspace():
            self.i += 1

    def _peek(self) -> Optional[str]:
        self._skip_whitespace()
        if self.i >= len(self.text):
            return None
        return self.text[self.i]

    def _integer(self) -> int:
        self._skip_whitespace()
        start = self.i
        while self.i < len(self.text) and '0' <= self.text[self.i] <= '9':
            self.i += 1
        if start == self.i:
            raise AnfSyntaxError("'x' 之后需要变量下标", start)
        index = int(self.text[start:self.i])
        if index < 1 or index > self.n:
            raise VariableRangeError(
                f"变量下标 x{index} 超出范围 [1, {self.n}] (位置 {start})", index
            )
        return index

    def _term(self) -> Optional[Monomial]:
        """解析一项；常数 0 返回 None"""
        ch = self._peek()
        if ch is None:
            raise AnfSyntaxError("表达式意外结束，需要一项", self.i)
        if ch in "01":
            self.i += 1
            nxt = self._peek()
            if nxt is not None and nxt != "+":
                raise AnfSyntaxError(f"常数项之后出现意外字符 {nxt!r}", self.i)
            return frozenset() if ch == "1" else None
        if ch != "x":
            raise AnfSyntaxError(f"意外字符 {ch!r}，需要 'x'、'0' 或 '1'", self.i)
        variables = set()
        while self._peek() == "x":
            self.i += 1
            variables.add(self._integer())
        return frozenset(variables)

    def parse(self) -> AnfExpression:
        """
        解析整个表达式

        返回:
            规范化的 AnfExpression

        异常:
            AnfSyntaxError: 语法错误（带位置）
            VariableRangeError: 变量下标越界
        """
        terms: List[Monomial] = []
        while True:
            term = self._term()
            if term is not None:
                terms.append(term)
            ch = self._peek()
            if ch is None:
                break
            if ch != "+":
                raise AnfSyntaxError(f"意外字符 {ch!r}，需要 '+'", self.i)
            self.i += 1
        expr = AnfExpression.from_terms(self.n, terms)
        logger.debug(f"解析 ANF: {len(terms)} 项，规范化后 {len(expr.monomials)} 项")
        return expr


def parse_anf(text: str, n: int) -> AnfExpression:
    """
    解析 ANF 字符串

    参数:
        text: 例如 "x1+x2+x1x2+x2x3+x1x3"
        n: 变量个数

    返回:
        单项式集合（已做异或抵消）
    """
    return AnfParser(text, n).parse()


def render_anf(expr: AnfExpression) -> str:
    """
    把 ANF 打印成 parse_anf 可以读回的字符串

    单项式按次数、再按变量下标排序；零函数打印为 "0"。
    """
    if not expr.monomials:
        return "0"
    ordered = sorted(expr.monomials, key=lambda m: (len(m), sorted(m)))
    parts = []
    for monomial in ordered:
        if not monomial:
            parts.append("1")
        else:
            parts.append("".join(f"x{i}" for i in sorted(monomial)))
    return "+".join(parts)


def _mobius(values: np.ndarray, n: int) -> np.ndarray:
    """GF(2) 上的 Möbius 变换（自逆），values 的长度为 2^n"""
    a = values.astype(np.uint8).copy()
    for i in range(n):
        h = 1 << i
        blocks = a.reshape(-1, 2, h)
        blocks[:, 1, :] ^= blocks[:, 0, :]
    return a


def _monomial_mask(monomial: Monomial, n: int) -> int:
    mask = 0
    for index in monomial:
        mask |= 1 << (n - index)
    return mask


def anf_to_function(expr: AnfExpression) -> BooleanFunction:
    """
    计算 ANF 的真值表

    table[x] 等于所有单项式在 x 处取值之和（mod 2）。

    示例:
        >>> anf_to_function(parse_anf("x1", 1)).bitstring()
        '01'
    """
    coefficients = np.zeros(1 << expr.n, dtype=np.uint8)
    for monomial in expr.monomials:
        coefficients[_monomial_mask(monomial, expr.n)] = 1
    return BooleanFunction(expr.n, _mobius(coefficients, expr.n))


def function_to_anf(f: BooleanFunction) -> AnfExpression:
    """由真值表恢复 ANF（anf_to_function 的逆运算）"""
    coefficients = _mobius(f.table, f.n)
    monomials = []
    for mask in np.flatnonzero(coefficients).tolist():
        monomials.append(
            frozenset(i for i in range(1, f.n + 1) if (mask >> (f.n - i)) & 1)
        )
    return AnfExpression(f.n, frozenset(monomials))
