"""
GF(2) 线性代数

向量用整数位集表示（x₁ 为最高位）。提供:
- Gf2System: 方程组 x·w = i（对 H 中每个 w，右端 i 相同）的行集合
- AffineSolutionSet: 解集，空集或“特解 + 核空间”的陪集
- Gf2Eliminator / solve_affine_system: 高斯消元求解
- odd_dependency: 右端为 1 时无解的证据
- span_basis: 大量向量（numpy 数组）张成空间的基
"""

import logging
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Tuple

import numpy as np

from quasilin.core.bits import dot
from quasilin.core.errors import DomainError

logger = logging.getLogger(__name__)


def _lead(v: int) -> int:
    return v.bit_length() - 1


def _reduced_basis(vectors: Iterable[int]) -> Tuple[int, ...]:
    """
    约化行阶梯形的基

    每个基向量的首位（最高位）只在它自己身上出现，
    结果按首位降序排列，对同一个张成空间唯一。
    """
    pivots: Dict[int, int] = {}
    for v in vectors:
        v = int(v)
        while v:
            lead = _lead(v)
            if lead not in pivots:
                pivots[lead] = v
                break
            v ^= pivots[lead]
    for lead in sorted(pivots):
        for other in pivots:
            if other > lead and (pivots[other] >> lead) & 1:
                pivots[other] ^= pivots[lead]
    return tuple(pivots[lead] for lead in sorted(pivots, reverse=True))


def _reduce(v: int, basis: Tuple[int, ...]) -> int:
    for b in basis:
        if (v >> _lead(b)) & 1:
            v ^= b
    return v


def span_basis(vectors: np.ndarray) -> Tuple[int, ...]:
    """
    大量向量张成空间的约化基

    用 numpy 向量化消元：每轮取当前最大的行作主元并消去所有行的首位，
    至多 n 轮。

    参数:
        vectors: 整数向量数组（可以有重复和零向量）
    """
    rows = np.unique(np.asarray(vectors, dtype=np.int64))
    rows = rows[rows != 0]
    pivots: List[int] = []
    while rows.size:
        pivot = int(rows.max())
        lead = _lead(pivot)
        pivots.append(pivot)
        rows = np.where((rows >> lead) & 1, rows ^ pivot, rows)
        rows = rows[rows != 0]
    return _reduced_basis(pivots)


@dataclass(frozen=True)
class Gf2System:
    """
    方程组的系数行集合 H

    H 是集合，重复的向量只保存一次。

    Attributes:
        n: 变量个数
        rows: 系数向量集合
    """
    n: int
    rows: FrozenSet[int] = frozenset()

    def __post_init__(self):
        rows = frozenset(int(w) for w in self.rows)
        for w in rows:
            if w < 0 or w >= (1 << self.n):
                raise DomainError(f"向量 {w} 不在 F₂^{self.n} 中")
        object.__setattr__(self, "rows", rows)

    def union(self, vectors: Iterable[int]) -> "Gf2System":
        """H ∪ vectors"""
        return Gf2System(self.n, self.rows | frozenset(int(w) for w in vectors))

    @property
    def contains_zero(self) -> bool:
        return 0 in self.rows

    def rank(self) -> int:
        return len(_reduced_basis(self.rows))

    def __len__(self) -> int:
        return len(self.rows)


@dataclass(frozen=True)
class AffineSolutionSet:
    """
    GF(2) 仿射方程组的解集

    非空时是 particular + span(kernel_basis)。始终保持规范形式
    （核基为约化行阶梯形，特解已对核基约化），
    因此两个解集相等当且仅当对象相等。

    Attributes:
        n: 变量个数
        particular: 特解；解集为空时为 None
        kernel_basis: 齐次方程组解空间的基
    """
    n: int
    particular: Optional[int]
    kernel_basis: Tuple[int, ...] = ()

    def __post_init__(self):
        if self.particular is None:
            object.__setattr__(self, "kernel_basis", ())
            return
        basis = _reduced_basis(self.kernel_basis)
        object.__setattr__(self, "kernel_basis", basis)
        object.__setattr__(self, "particular", _reduce(int(self.particular), basis))

    @classmethod
    def empty_set(cls, n: int) -> "AffineSolutionSet":
        return cls(n, None)

    @classmethod
    def full_space(cls, n: int) -> "AffineSolutionSet":
        """F₂ⁿ 全体"""
        return cls(n, 0, tuple(1 << i for i in range(n)))

    @classmethod
    def from_elements(cls, n: int, elements: Iterable[int]) -> "AffineSolutionSet":
        """
        由显式元素构造，并验证它们确实构成一个陪集

        异常:
            DomainError: 元素集合不是仿射子空间
        """
        items = sorted(set(int(e) for e in elements))
        if not items:
            return cls.empty_set(n)
        offset = items[0]
        result = cls(n, offset, tuple(e ^ offset for e in items[1:]))
        if len(result) != len(items):
            raise DomainError(
                f"{len(items)} 个元素不构成仿射子空间（张成 {len(result)} 个元素）"
            )
        return result

    @property
    def empty(self) -> bool:
        return self.particular is None

    @property
    def dimension(self) -> Optional[int]:
        """陪集维数；空集为 None"""
        return None if self.empty else len(self.kernel_basis)

    def __len__(self) -> int:
        return 0 if self.empty else 1 << len(self.kernel_basis)

    def __bool__(self) -> bool:
        return not self.empty

    def __contains__(self, x: int) -> bool:
        if self.empty:
            return False
        return _reduce(int(x) ^ self.particular, self.kernel_basis) == 0

    def __iter__(self) -> Iterator[int]:
        """按 Gray 码顺序惰性枚举元素"""
        if self.empty:
            return
        current = self.particular
        yield current
        for step in range(1, len(self)):
            # 第 step 步翻转的基向量下标是 step 的最低置位
            current ^= self.kernel_basis[(step & -step).bit_length() - 1]
            yield current

    def elements(self) -> List[int]:
        """全部元素（升序）"""
        return sorted(self)

    def is_zero_only(self) -> bool:
        """解集恰为 {0}"""
        return not self.empty and self.particular == 0 and not self.kernel_basis

    def issubset(self, other: "AffineSolutionSet") -> bool:
        if self.empty:
            return True
        if other.empty or self.particular not in other:
            return False
        return all(_reduce(b, other.kernel_basis) == 0 for b in self.kernel_basis)

    def is_linear_subspace(self) -> bool:
        return not self.empty and self.particular == 0

    def satisfies(self, rows: Iterable[int], rhs: int) -> bool:
        """逐行代入检查：解集中每个元素都满足 x·w = rhs"""
        if self.empty:
            return True
        rows = list(rows)
        if any(dot(self.particular, w) != rhs for w in rows):
            return False
        return all(dot(b, w) == 0 for b in self.kernel_basis for w in rows)


class Gf2Eliminator:
    """
    增量高斯消元

    逐行加入 H 的向量，同时维护 x·H = 0 与 x·H = 1 两个方程组。
    两个方程组的系数矩阵相同，只是右端不同，所以共用一组主元；
    每个主元行额外记录它在“右端全 1”时对应的右端值。

    示例:
        >>> eliminator = Gf2Eliminator(3)
        >>> for w in (0b001, 0b010, 0b100, 0b111):
        ...     _ = eliminator.add(w)
        >>> eliminator.rank
        3
        >>> eliminator.solution_set(1).particular
        7
    """

    def __init__(self, n: int):
        self.n = n
        self._pivots: Dict[int, Tuple[int, int]] = {}
        self._odd_consistent = True

    def add(self, w: int) -> bool:
        """
        加入一行

        返回:
            True 表示秩增加
        """
        row, b = int(w), 1
        while row:
            lead = _lead(row)
            if lead not in self._pivots:
                self._pivots[lead] = (row, b)
                return True
            prow, pb = self._pivots[lead]
            row ^= prow
            b ^= pb
        if b == 1:
            # 奇数个行异或为 0，x·H = 1 从此无解
            self._odd_consistent = False
        return False

    @property
    def rank(self) -> int:
        return len(self._pivots)

    def is_consistent(self, rhs: int) -> bool:
        return rhs == 0 or self._odd_consistent

    def solution_set(self, rhs: int) -> AffineSolutionSet:
        """当前方程组 x·H = rhs 的解集"""
        if rhs not in (0, 1):
            raise DomainError(f"右端必须是 0 或 1: {rhs}")
        if not self.is_consistent(rhs):
            return AffineSolutionSet.empty_set(self.n)

        pivots = {
            lead: (row, b if rhs else 0) for lead, (row, b) in self._pivots.items()
        }
        # 回代成约化行阶梯形
        for lead in sorted(pivots):
            prow, pb = pivots[lead]
            for other in pivots:
                orow, ob = pivots[other]
                if other > lead and (orow >> lead) & 1:
                    pivots[other] = (orow ^ prow, ob ^ pb)

        particular = 0
        for lead, (_, b) in pivots.items():
            if b:
                particular |= 1 << lead

        kernel = []
        for free in range(self.n):
            if free in pivots:
                continue
            v = 1 << free
            for lead, (row, _) in pivots.items():
                if (row >> free) & 1:
                    v |= 1 << lead
            kernel.append(v)

        return AffineSolutionSet(self.n, particular, tuple(kernel))


def solve_affine_system(system: Gf2System, rhs: int) -> AffineSolutionSet:
    """
    求解 {x : x·w = rhs, ∀w ∈ H}

    每一行的右端都是同一个 rhs。H 为空时解集是 F₂ⁿ 全体。
    无解是正常结果（返回空集），不是错误。

    示例:
        >>> s = solve_affine_system(Gf2System(3, frozenset({1, 2, 4, 7})), 1)
        >>> s.particular, s.kernel_basis
        (7, ())
    """
    eliminator = Gf2Eliminator(system.n)
    for w in sorted(system.rows):
        eliminator.add(w)
    solutions = eliminator.solution_set(rhs)
    if solutions.empty:
        logger.debug(f"方程组 x·H={rhs} 无解（|H| = {len(system)}）")
    return solutions


def odd_dependency(system: Gf2System) -> Optional[Tuple[int, ...]]:
    """
    寻找 H 中奇数个异或为 0 的行

    存在这样的子集当且仅当 x·w = 1（∀w ∈ H）无解；
    例如 0 ∈ H，或者 w₁⊕w₂ = w₃ 都属于 H。

    返回:
        升序排列的行子集；不存在时为 None
    """
    rows = sorted(system.rows)
    pivots: Dict[int, Tuple[int, FrozenSet[int]]] = {}
    for index, w in enumerate(rows):
        row, combination = w, frozenset((index,))
        while row:
            lead = _lead(row)
            if lead not in pivots:
                pivots[lead] = (row, combination)
                break
            prow, pcomb = pivots[lead]
            row ^= prow
            combination ^= pcomb
        if row == 0 and len(combination) % 2 == 1:
            return tuple(rows[j] for j in sorted(combination))
    return None


__all__ = [
    "Gf2System",
    "AffineSolutionSet",
    "Gf2Eliminator",
    "solve_affine_system",
    "odd_dependency",
    "span_basis",
]
