"""非负有理数有限集合

QSet 以 (分母, NatSet) 表示 {x/den : x ∈ num}，始终约化到最小公分母，
因此结构相等就是逐字段比较。全程精确有理运算，不使用浮点。
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator

from sumsetkit.models import ParseError
from sumsetkit.natset import (
    Backend,
    DEFAULT_BACKEND,
    NatSet,
    ZERO,
    divide_exact,
    gcd_of,
    kfold,
    scale,
    sumset,
)

_TOKEN_PATTERN = re.compile(r"(\d+)(?:/(\d+))?")

Rational = Fraction | int | str


@dataclass(frozen=True)
class QSet:
    """含 0 的有限 ℚ≥0 子集，规范形式"""

    den: int
    num: NatSet

    def __post_init__(self) -> None:
        if self.den <= 0:
            raise ValueError(f"分母必须为正: {self.den}")
        if math.gcd(self.den, gcd_of(self.num)) != 1 and not (
            self.num.is_zero and self.den == 1
        ):
            raise ValueError(f"未约化: den={self.den}, num={self.num}")

    @classmethod
    def of(cls, den: int, num: NatSet) -> QSet:
        """由整数模型构造并约化"""
        if den <= 0:
            raise ValueError(f"分母必须为正: {den}")
        if num.is_zero:
            return cls(1, num)
        g = math.gcd(den, gcd_of(num))
        if g == 1:
            return cls(den, num)
        return cls(den // g, divide_exact(num, g))

    @classmethod
    def parse(cls, literal: str, strict: bool = False) -> QSet:
        """解析 `0,1/2,2/3` 形式的字面量

        Raises:
            ParseError: 记号不是整数或 p/q，或分母为 0
        """
        values: list[Fraction] = []
        for position, raw in enumerate(literal.split(",")):
            token = raw.strip()
            match = _TOKEN_PATTERN.fullmatch(token)
            if not match:
                raise ParseError("非法的有理数", position, raw)
            numerator, denominator = match.group(1), match.group(2)
            if denominator is not None and int(denominator) == 0:
                raise ParseError("分母为 0", position, raw)
            values.append(Fraction(int(numerator), int(denominator or 1)))
        try:
            return q_make(values, strict=strict)
        except ValueError as e:
            raise ParseError(str(e), 0, literal) from e

    @property
    def elements(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(x, self.den) for x in self.num.elements)

    @property
    def max(self) -> Fraction:
        return Fraction(self.num.max, self.den)

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    def scaled(self, q: Rational) -> QSet:
        """q·X（q 为正有理数）"""
        q = Fraction(q)
        if q <= 0:
            raise ValueError(f"伸缩因子必须为正: {q}")
        return QSet.of(self.den * q.denominator, scale(self.num, q.numerator))

    def __contains__(self, x: object) -> bool:
        try:
            value = Fraction(x)  # type: ignore[arg-type]
        except (TypeError, ValueError):
            return False
        scaled = value * self.den
        return scaled.denominator == 1 and scaled.numerator in self.num

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.num)

    def __add__(self, other: QSet) -> QSet:
        return q_sumset(self, other)

    def __str__(self) -> str:
        return ",".join(str(x) for x in self.elements)


Q_ZERO = QSet(1, ZERO)


def q_make(values: Iterable[Rational], strict: bool = False) -> QSet:
    """由有理数构造规范 QSet

    Args:
        values: 非负有理数（Fraction、int 或 "p/q" 字符串）
        strict: 为 True 时缺少 0 直接报错，否则自动补 0

    Raises:
        ValueError: 出现负数，或 strict 模式下缺少 0
    """
    fractions = {Fraction(v) for v in values}
    for value in fractions:
        if value < 0:
            raise ValueError(f"元素必须非负: {value}")
    if 0 not in fractions:
        if strict:
            raise ValueError("集合必须包含 0")
        fractions.add(Fraction(0))
    den = math.lcm(*(v.denominator for v in fractions))
    num = NatSet(int(v * den) for v in fractions)
    return QSet.of(den, num)


def q_sumset(x: QSet, y: QSet, backend: Backend = DEFAULT_BACKEND) -> QSet:
    """有理和集，通分后在整数模型上相加"""
    den = math.lcm(x.den, y.den)
    xs = scale(x.num, den // x.den)
    ys = scale(y.num, den // y.den)
    return QSet.of(den, sumset(xs, ys, backend))


def q_kfold(x: QSet, k: int, backend: Backend = DEFAULT_BACKEND) -> QSet:
    """k 重和：kA = kA′/d"""
    return QSet.of(x.den, kfold(x.num, k, backend))
