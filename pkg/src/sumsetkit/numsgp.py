"""数值幺半群与有限生成 Puiseux 幺半群

成员判定采用前向动态规划筛（硬币问题），先用粗上界 min·max 筛出 Frobenius 数，
再把成员表截断到 ⟦0, frobenius + max generator⟧。
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, count
from typing import Iterable, Iterator

from sumsetkit.models import MonoidReport, exact, exact_list
from sumsetkit.natset import NatSet, gcd_of

logger = logging.getLogger(__name__)


def _sieve(generators: tuple[int, ...], limit: int) -> bytearray:
    """table[x] == 1 当且仅当 x 是生成元的非负整数组合（x ≤ limit）"""
    table = bytearray(limit + 1)
    table[0] = 1
    for x in range(1, limit + 1):
        for g in generators:
            if g > x:
                break
            if table[x - g]:
                table[x] = 1
                break
    return table


@dataclass(frozen=True)
class NumericalMonoid:
    """数值幺半群 S ⊆ ℕ，ℕ ∖ S 有限"""

    generators: tuple[int, ...]
    frobenius: int
    gaps: tuple[int, ...]
    table: bytes = field(repr=False)  # ⟦0, frobenius + max generator⟧ 上的成员表

    def __contains__(self, x: object) -> bool:
        if not isinstance(x, int) or x < 0:
            return False
        if x > self.frobenius:
            return True
        return bool(self.table[x])

    @property
    def multiplicity(self) -> int:
        """最小非零元素"""
        return next(x for x in count(1) if x in self)

    def members_upto(self, bound: int) -> tuple[int, ...]:
        """S ∩ ⟦0, bound⟧"""
        return tuple(x for x in range(bound + 1) if x in self)

    def is_decomposable(self, x: int) -> bool:
        """x 是否为两个非零成员之和"""
        return any(s in self and (x - s) in self for s in range(1, x // 2 + 1))

    @property
    def minimal_generators(self) -> tuple[int, ...]:
        """极小生成元集（原子）"""
        return tuple(g for g in self.generators if not self.is_decomposable(g))

    def to_report(self) -> MonoidReport:
        return MonoidReport(
            generators=list(self.generators),
            atoms=list(self.minimal_generators),
            frobenius=self.frobenius,
            gaps=list(self.gaps),
        )


def generate(gens: Iterable[int]) -> NumericalMonoid:
    """由生成元构造数值幺半群

    Raises:
        ValueError: 生成元为空、非正，或 gcd ≠ 1（补集无限）
    """
    generators = tuple(sorted(set(gens)))
    if not generators:
        raise ValueError("生成元不能为空")
    if generators[0] <= 0:
        raise ValueError(f"生成元必须为正: {generators[0]}")
    if math.gcd(*generators) != 1:
        raise ValueError(f"生成元 gcd ≠ 1，补集无限: {generators}")

    # 粗上界：Frobenius 数 < min·max
    bound = generators[0] * generators[-1]
    table = _sieve(generators, bound + generators[-1])
    gaps = tuple(x for x in range(bound + 1) if not table[x])
    frobenius = gaps[-1] if gaps else -1
    logger.debug(f"⟨{generators}⟩: frobenius={frobenius}, 间隙 {len(gaps)} 个")
    return NumericalMonoid(
        generators=generators,
        frobenius=frobenius,
        gaps=gaps,
        table=bytes(table[: frobenius + generators[-1] + 1]),
    )


def generated_by_set(a: NatSet) -> NumericalMonoid:
    """A 的非零元素生成的数值幺半群 ⟨A⟩

    Raises:
        ValueError: gcd(A) ≠ 1（包括 A = {0}）
    """
    if gcd_of(a) != 1:
        raise ValueError(f"gcd(A) = {gcd_of(a)} ≠ 1: {a}")
    return generate(a.nonzero)


def from_gaps(gaps: Iterable[int]) -> NumericalMonoid | None:
    """由间隙集还原数值幺半群；若补集不封闭于加法则返回 None"""
    gap_set = set(gaps)
    if not gap_set:
        return generate([1])
    frobenius = max(gap_set, default=-1)
    members = [x for x in range(frobenius + 1) if x not in gap_set]
    for x in members:
        for y in members:
            if x + y <= frobenius and x + y in gap_set:
                return None
    multiplicity = frobenius + 1 if not members[1:] else members[1]
    # 极小生成元都不超过 frobenius + multiplicity
    candidates = [
        x for x in range(1, frobenius + multiplicity + 1) if x not in gap_set
    ]
    return generate(candidates)


def numerical_monoids_upto(frobenius_max: int) -> list[NumericalMonoid]:
    """枚举 Frobenius 数 ≤ frobenius_max 的全部数值幺半群（按间隙集排序）"""
    monoids: list[NumericalMonoid] = []
    pool = range(1, frobenius_max + 1)
    for size in range(len(pool) + 1):
        for gaps in combinations(pool, size):
            monoid = from_gaps(gaps)
            if monoid is not None:
                monoids.append(monoid)
    return monoids


# ============ 有限生成 Puiseux 幺半群 ============


@dataclass(frozen=True)
class PuiseuxFG:
    """有限生成 Puiseux 幺半群

    整数模型：原子乘以公分母 den 得到 integer_model，其 gcd 记为 scale；
    integer_model/scale 生成的数值幺半群即 monoid。
    """

    atoms: tuple[Fraction, ...]
    den: int
    integer_model: tuple[int, ...]
    scale: int
    monoid: NumericalMonoid = field(repr=False)

    @property
    def frobenius(self) -> Fraction:
        """最大非成员（在 scale/den 的格点上计；无间隙时为 -1）"""
        if self.monoid.frobenius < 0:
            return Fraction(-1)
        return Fraction(self.monoid.frobenius * self.scale, self.den)

    def scaled(self, q: Fraction | int | str) -> PuiseuxFG:
        """q·S"""
        q = Fraction(q)
        return atoms_of(a * q for a in self.atoms)

    def __contains__(self, x: object) -> bool:
        return pm_contains(self, x)  # type: ignore[arg-type]

    def to_report(self, generators: Iterable[Fraction] | None = None) -> MonoidReport:
        return MonoidReport(
            generators=exact_list(generators if generators is not None else self.atoms),
            atoms=exact_list(self.atoms),
            frobenius=exact(self.frobenius),
            gaps=[exact(Fraction(g * self.scale, self.den)) for g in self.monoid.gaps],
        )


def atoms_of(gens: Iterable[Fraction | int | str]) -> PuiseuxFG:
    """极小生成元集：冗余生成元（可写成其余生成元之和）被剔除

    Raises:
        ValueError: 生成元为空或非正
    """
    values = sorted({Fraction(g) for g in gens})
    if not values:
        raise ValueError("生成元不能为空")
    if values[0] <= 0:
        raise ValueError(f"生成元必须为正: {values[0]}")

    den = math.lcm(*(v.denominator for v in values))
    integers = [int(v * den) for v in values]
    g = math.gcd(*integers)
    monoid = generate(x // g for x in integers)
    atoms = tuple(Fraction(x * g, den) for x in monoid.minimal_generators)
    return PuiseuxFG(
        atoms=atoms,
        den=den,
        integer_model=tuple(int(a * den) for a in atoms),
        scale=g,
        monoid=monoid,
    )


def pm_contains(s: PuiseuxFG, x: Fraction | int | str) -> bool:
    """x 是否为原子的非负整数组合：清分母、除以 gcd、再查数值幺半群"""
    value = Fraction(x)
    if value < 0:
        return False
    scaled = value * s.den
    if scaled.denominator != 1:
        return False
    n = scaled.numerator
    if n % s.scale:
        return False
    return (n // s.scale) in s.monoid


def iter_members(s: PuiseuxFG, limit: int) -> Iterator[Fraction]:
    """按升序给出 S 的前 limit 个元素"""
    x = 0
    produced = 0
    while produced < limit:
        if x in s.monoid:
            yield Fraction(x * s.scale, s.den)
            produced += 1
        x += 1
