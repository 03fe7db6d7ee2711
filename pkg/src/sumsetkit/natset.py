"""有限自然数集合运算

NatSet 是含 0 的有限 ℕ 子集，内部以升序元组或位向量（Python 大整数）保存。
和集有两个可互换的内核：有序序列两两相加与位向量移位-或卷积，结果完全一致。
稀疏的大元素集合只能走有序内核，位向量内核在结果过大时自动退回有序内核。
"""

from __future__ import annotations

import logging
import math
import re
from bisect import bisect_left
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator

from sumsetkit.models import ParseError

logger = logging.getLogger(__name__)

_RUN_PATTERN = re.compile("1+")
_TOKEN_PATTERN = re.compile(r"\d+")


class Backend(str, Enum):
    """和集内核"""

    SORTED = "sorted"  # 有序元素序列，两两相加
    BITSET = "bitset"  # 位向量移位-或


DEFAULT_BACKEND = Backend.BITSET

# 位向量内核处理的最大元素上界（对应约 32 MiB 的整数）
BITSET_MAX = 1 << 28


def _runs(bits: int) -> list[tuple[int, int]]:
    """位向量中所有极大连续段 (lo, hi)，升序"""
    text = format(bits, "b")[::-1]
    return [(m.start(), m.end() - 1) for m in _RUN_PATTERN.finditer(text)]


def _smear(bits: int, length: int) -> int:
    """返回 bits<<0 | bits<<1 | ... | bits<<length，只需 O(log length) 次移位"""
    result = bits
    covered = 1
    while covered <= length:
        step = min(covered, length + 1 - covered)
        result |= result << step
        covered += step
    return result


def _sumset_bits(x_bits: int, y_bits: int) -> int:
    x_runs = _runs(x_bits)
    y_runs = _runs(y_bits)
    # 遍历连续段较少的一方
    if len(x_runs) > len(y_runs):
        x_runs, y_bits = y_runs, x_bits
    smeared: dict[int, int] = {}
    result = 0
    for lo, hi in x_runs:
        length = hi - lo
        if length not in smeared:
            smeared[length] = _smear(y_bits, length)
        result |= smeared[length] << lo
    return result


def _sumset_sorted(xs: tuple[int, ...], ys: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(sorted({x + y for x in xs for y in ys}))


class NatSet:
    """含 0 的有限自然数集合（不可变）

    两种内部表示至少持有其一：升序元素元组，或位向量（第 i 位为 1 表示 i ∈ 集合）。
    另一种按需转换，有序内核只读写元组，位向量内核只读写位向量。
    """

    __slots__ = ("_bits", "_elements")

    def __init__(self, elements: Iterable[int]):
        """由元素构造（元组表示）

        Args:
            elements: 非负整数，可重复、可无序，但必须包含 0

        Raises:
            ValueError: 出现负数、非整数或缺少 0
        """
        values = set()
        for x in elements:
            if not isinstance(x, int) or isinstance(x, bool):
                raise ValueError(f"元素必须是整数: {x!r}")
            if x < 0:
                raise ValueError(f"元素必须非负: {x}")
            values.add(x)
        if 0 not in values:
            raise ValueError("集合必须包含 0")
        self._bits: int | None = None
        self._elements: tuple[int, ...] | None = tuple(sorted(values))

    @classmethod
    def from_bits(cls, bits: int) -> NatSet:
        """由位向量构造"""
        if bits <= 0 or not bits & 1:
            raise ValueError("位向量必须为正且第 0 位为 1")
        obj = cls.__new__(cls)
        obj._bits = bits
        obj._elements = None
        return obj

    @classmethod
    def _from_sorted(cls, elements: tuple[int, ...]) -> NatSet:
        obj = cls.__new__(cls)
        obj._bits = None
        obj._elements = elements
        return obj

    @classmethod
    def parse(cls, literal: str) -> NatSet:
        """解析 `0,2,3` 形式的字面量（升序、逗号分隔、十进制）

        Raises:
            ParseError: 记号非法、非严格升序或首元素不是 0
        """
        tokens = literal.split(",")
        values: list[int] = []
        for position, raw in enumerate(tokens):
            token = raw.strip()
            if not _TOKEN_PATTERN.fullmatch(token):
                raise ParseError("非法的非负整数", position, raw)
            value = int(token)
            if values and value <= values[-1]:
                raise ParseError("元素必须严格升序", position, raw)
            values.append(value)
        if values[0] != 0:
            raise ParseError("集合必须以 0 开头", 0, tokens[0])
        return cls._from_sorted(tuple(values))

    @property
    def bits(self) -> int:
        """位向量（元组表示时按需构造，大小与 max 成正比）"""
        if self._bits is None:
            bits = 0
            for x in self._elements:
                bits |= 1 << x
            self._bits = bits
        return self._bits

    @property
    def elements(self) -> tuple[int, ...]:
        """升序元素序列（位向量表示时按需展开）"""
        if self._elements is None:
            self._elements = tuple(
                x for lo, hi in _runs(self._bits) for x in range(lo, hi + 1)
            )
        return self._elements

    @property
    def max(self) -> int:
        if self._elements is not None:
            return self._elements[-1]
        return self._bits.bit_length() - 1

    @property
    def nonzero(self) -> tuple[int, ...]:
        return self.elements[1:]

    @property
    def is_zero(self) -> bool:
        """是否为单位元 {0}"""
        return self.max == 0

    def __contains__(self, x: object) -> bool:
        if not isinstance(x, int) or x < 0:
            return False
        if self._bits is not None:
            return bool(self._bits >> x & 1)
        i = bisect_left(self._elements, x)
        return i < len(self._elements) and self._elements[i] == x

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements)

    def __len__(self) -> int:
        if self._elements is not None:
            return len(self._elements)
        return self._bits.bit_count()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, NatSet):
            return NotImplemented
        if self._elements is not None and other._elements is not None:
            return self._elements == other._elements
        if self.max != other.max or len(self) != len(other):
            return False
        # max 相同，位向量规模与已有的一方相当
        return self.bits == other.bits

    def __hash__(self) -> int:
        return hash((self.max, len(self)))

    def __add__(self, other: NatSet) -> NatSet:
        return sumset(self, other)

    def __str__(self) -> str:
        return ",".join(map(str, self.elements))

    def __repr__(self) -> str:
        return f"NatSet({self})"

    def __reduce__(self):
        if self._bits is not None:
            return (NatSet.from_bits, (self._bits,))
        return (NatSet._from_sorted, (self._elements,))


ZERO = NatSet.from_bits(1)


@dataclass(frozen=True)
class Interval:
    """离散区间 ⟦lo, hi⟧ = {x : lo ≤ x ≤ hi}；hi < lo 时为空"""

    lo: int
    hi: int

    @property
    def is_empty(self) -> bool:
        return self.hi < self.lo

    def __contains__(self, x: object) -> bool:
        return isinstance(x, int) and self.lo <= x <= self.hi

    def __iter__(self) -> Iterator[int]:
        return iter(range(self.lo, self.hi + 1))

    def __len__(self) -> int:
        return max(0, self.hi - self.lo + 1)

    def bits(self) -> int:
        """区间的位向量（要求非空时 lo ≥ 0）"""
        if self.is_empty:
            return 0
        if self.lo < 0:
            raise ValueError(f"区间含负数，无法转为位向量: {self}")
        return ((1 << len(self)) - 1) << self.lo


# ============ 运算 ============


def sumset(x: NatSet, y: NatSet, backend: Backend = DEFAULT_BACKEND) -> NatSet:
    """和集 X+Y = {x+y : x ∈ X, y ∈ Y}

    位向量内核的结果超过 BITSET_MAX 时改用有序内核，两者结果相同。
    """
    if backend is Backend.BITSET and x.max + y.max > BITSET_MAX:
        logger.debug(f"max = {x.max + y.max} 超过 BITSET_MAX，改用有序内核")
        backend = Backend.SORTED
    if backend is Backend.SORTED:
        return NatSet._from_sorted(_sumset_sorted(x.elements, y.elements))
    return NatSet.from_bits(_sumset_bits(x.bits, y.bits))


def kfold(x: NatSet, k: int, backend: Backend = DEFAULT_BACKEND) -> NatSet:
    """k 重和 kX，二进制倍增，只需 O(log k) 次和集

    Raises:
        ValueError: k 为负
    """
    if k < 0:
        raise ValueError(f"k 必须非负: {k}")
    result = ZERO
    power = x
    while k:
        if k & 1:
            result = sumset(result, power, backend)
        k >>= 1
        if k:
            power = sumset(power, power, backend)
    return result


def kfold_naive(x: NatSet, k: int) -> NatSet:
    """逐次相加的 k 重和（倍增算法的对照）"""
    if k < 0:
        raise ValueError(f"k 必须非负: {k}")
    result = ZERO
    for _ in range(k):
        result = sumset(result, x, Backend.SORTED)
    return result


def reflect(x: NatSet) -> NatSet:
    """反射 max X − X"""
    if x._bits is None:
        top = x.max
        return NatSet._from_sorted(tuple(top - e for e in reversed(x.elements)))
    return NatSet.from_bits(int(format(x.bits, "b")[::-1], 2))


def gcd_of(x: NatSet) -> int:
    """全部元素的最大公约数，约定 gcd{0} = 0"""
    return math.gcd(*x.elements)


def divide_exact(x: NatSet, q: int) -> NatSet:
    """1/q 伸缩 X/q

    Raises:
        ValueError: q 非正或有元素不能被 q 整除
    """
    if q <= 0:
        raise ValueError(f"除数必须为正: {q}")
    for element in x.elements:
        if element % q:
            raise ValueError(f"元素 {element} 不能被 {q} 整除")
    return NatSet(element // q for element in x.elements)


def scale(x: NatSet, m: int) -> NatSet:
    """m 倍伸缩 m·X"""
    if m <= 0:
        raise ValueError(f"倍数必须为正: {m}")
    if m == 1:
        return x
    return NatSet(element * m for element in x.elements)
