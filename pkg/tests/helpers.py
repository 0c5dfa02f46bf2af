"""
测试辅助：函数语料与 hypothesis 策略
"""

from hypothesis import strategies as st

from quasilin.core.bits import dot
from quasilin.core.boolfn import BooleanFunction


def all_functions(n):
    """n 元全部 2^(2^n) 个函数"""
    size = 1 << n
    for code in range(1 << size):
        yield BooleanFunction.from_bits(n, [(code >> x) & 1 for x in range(size)])


def solutions_by_enumeration(n, rows, rhs):
    """逐个代入求 {x : x·w = rhs, ∀w ∈ rows}"""
    return sorted(x for x in range(1 << n) if all(dot(x, w) == rhs for w in rows))


@st.composite
def boolean_functions(draw, min_n=1, max_n=6):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    bits = draw(st.lists(st.integers(0, 1), min_size=1 << n, max_size=1 << n))
    return BooleanFunction.from_bits(n, bits)


@st.composite
def row_sets(draw, max_n=6):
    """(n, H)：H 是 F₂ⁿ 中的向量集合，可以为空"""
    n = draw(st.integers(min_value=1, max_value=max_n))
    rows = draw(st.frozensets(st.integers(0, (1 << n) - 1), max_size=2 * n + 2))
    return n, rows
