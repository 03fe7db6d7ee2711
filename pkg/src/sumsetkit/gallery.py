"""有限幺半群反例展示

以乘法表表示小型有限幺半群：左零半群的单位化、对偶幺半群、二元幺半群，
以及它们的约化有限幂幺半群 P_fin,1(M)。可破幺半群（xy ∈ {x, y}）的
P_fin,1 运算就是并集，因此 H 与 H^op 不同构却有相同的 P_fin,1。
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import permutations, product

from sumsetkit.models import GalleryRow, GuardError

logger = logging.getLogger(__name__)

# 子集枚举 2^(|M|-1)，同构搜索 (|M|-1)!
FPM_SIZE_GUARD = 16
ISO_SIZE_GUARD = 8

Table = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class FiniteMonoidTable:
    """有限幺半群的乘法表，table[x][y] = x·y"""

    size: int
    identity: int
    table: Table
    labels: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        if self.size <= 0:
            raise ValueError(f"幺半群至少一个元素: {self.size}")
        if len(self.table) != self.size or any(len(row) != self.size for row in self.table):
            raise ValueError(f"乘法表必须是 {self.size}×{self.size}")
        if any(not 0 <= z < self.size for row in self.table for z in row):
            raise ValueError("乘法表元素越界")
        if not self.labels:
            object.__setattr__(self, "labels", tuple(str(i) for i in range(self.size)))
        e = self.identity
        for x in range(self.size):
            if self.table[e][x] != x or self.table[x][e] != x:
                raise ValueError(f"{self.labels[e]} 不是单位元")

    def mul(self, x: int, y: int) -> int:
        return self.table[x][y]

    def is_associative(self) -> bool:
        t = self.table
        return all(
            t[t[x][y]][z] == t[x][t[y][z]]
            for x, y, z in product(range(self.size), repeat=3)
        )

    def is_commutative(self) -> bool:
        return all(
            self.table[x][y] == self.table[y][x]
            for x, y in product(range(self.size), repeat=2)
        )

    def element(self, label: str) -> int:
        return self.labels.index(label)


def checked(m: FiniteMonoidTable) -> FiniteMonoidTable:
    """校验结合律后原样返回"""
    if not m.is_associative():
        raise ValueError("乘法表不满足结合律")
    return m


# ============ 构造 ============


def left_zero_unitization(v: int) -> FiniteMonoidTable:
    """V = {v1..vv} 上 xy = x，再添单位元 e（下标 0）"""
    if v < 1:
        raise ValueError(f"v 必须 ≥ 1: {v}")
    size = v + 1
    table = tuple(
        tuple(y if x == 0 else x for y in range(size)) for x in range(size)
    )
    labels = ("e", *(f"v{i}" for i in range(1, size)))
    return checked(FiniteMonoidTable(size=size, identity=0, table=table, labels=labels))


def opposite(m: FiniteMonoidTable) -> FiniteMonoidTable:
    """对偶幺半群：x ∘ y = y·x"""
    checked(m)
    table = tuple(
        tuple(m.table[y][x] for y in range(m.size)) for x in range(m.size)
    )
    return FiniteMonoidTable(size=m.size, identity=m.identity, table=table, labels=m.labels)


def cyclic_group(n: int) -> FiniteMonoidTable:
    """模 n 加法群"""
    if n < 1:
        raise ValueError(f"n 必须 ≥ 1: {n}")
    table = tuple(tuple((x + y) % n for y in range(n)) for x in range(n))
    return FiniteMonoidTable(size=n, identity=0, table=table)


def two_element_idempotent() -> FiniteMonoidTable:
    """E = {0, 1} 在乘法下，单位元为 1"""
    return FiniteMonoidTable(
        size=2, identity=1, table=((0, 0), (0, 1)), labels=("0", "1")
    )


def trivial_monoid() -> FiniteMonoidTable:
    return FiniteMonoidTable(size=1, identity=0, table=((0,),), labels=("e",))


# ============ 约化有限幂幺半群 ============


def _fpm_subsets(m: FiniteMonoidTable) -> list[int]:
    """含单位元的子集（按位掩码升序）"""
    if m.size > FPM_SIZE_GUARD:
        raise GuardError("FPM_SIZE_GUARD", FPM_SIZE_GUARD, m.size)
    checked(m)
    others = [x for x in range(m.size) if x != m.identity]
    subsets = []
    for choice in range(1 << len(others)):
        mask = 1 << m.identity
        for i, x in enumerate(others):
            if choice >> i & 1:
                mask |= 1 << x
        subsets.append(mask)
    return sorted(subsets)


def _members(mask: int) -> list[int]:
    return [x for x in range(mask.bit_length()) if mask >> x & 1]


def _subset_label(m: FiniteMonoidTable, mask: int) -> str:
    return "{" + ",".join(m.labels[x] for x in _members(mask)) + "}"


def _subset_table(m: FiniteMonoidTable, combine) -> FiniteMonoidTable:
    subsets = _fpm_subsets(m)
    index = {mask: i for i, mask in enumerate(subsets)}
    table = tuple(tuple(index[combine(x, y)] for y in subsets) for x in subsets)
    return FiniteMonoidTable(
        size=len(subsets),
        identity=index[1 << m.identity],
        table=table,
        labels=tuple(_subset_label(m, mask) for mask in subsets),
    )


def reduced_fpm_table(m: FiniteMonoidTable) -> FiniteMonoidTable:
    """P_fin,1(M)：含单位元的子集，运算为集合乘积，单位元为 {1_M}

    Raises:
        GuardError: |M| > FPM_SIZE_GUARD
        ValueError: 乘法表不满足结合律
    """

    def setwise_product(x: int, y: int) -> int:
        mask = 0
        for a in _members(x):
            for b in _members(y):
                mask |= 1 << m.table[a][b]
        return mask

    return _subset_table(m, setwise_product)


def subset_union_table(m: FiniteMonoidTable) -> FiniteMonoidTable:
    """与 reduced_fpm_table 同一编号下的并集运算表"""
    return _subset_table(m, lambda x, y: x | y)


# ============ 判定 ============


def tables_isomorphic(m1: FiniteMonoidTable, m2: FiniteMonoidTable) -> bool:
    """是否存在保单位元的双射把 m1 的乘法表搬到 m2

    Raises:
        GuardError: 规模超过 ISO_SIZE_GUARD
        ValueError: 乘法表不满足结合律
    """
    for m in (m1, m2):
        if m.size > ISO_SIZE_GUARD:
            raise GuardError("ISO_SIZE_GUARD", ISO_SIZE_GUARD, m.size)
        checked(m)
    if m1.size != m2.size:
        return False

    rest1 = [x for x in range(m1.size) if x != m1.identity]
    rest2 = [x for x in range(m2.size) if x != m2.identity]
    elements = range(m1.size)
    for perm in permutations(rest2):
        sigma = [0] * m1.size
        sigma[m1.identity] = m2.identity
        for x, y in zip(rest1, perm):
            sigma[x] = y
        if all(
            sigma[m1.table[x][y]] == m2.table[sigma[x]][sigma[y]]
            for x, y in product(elements, repeat=2)
        ):
            return True
    return False


def is_breakable(m: FiniteMonoidTable) -> bool:
    """xy ∈ {x, y} 对所有 x, y 成立"""
    checked(m)
    return all(
        m.table[x][y] in (x, y) for x, y in product(range(m.size), repeat=2)
    )


def is_idempotent(m: FiniteMonoidTable) -> bool:
    checked(m)
    return all(m.table[x][x] == x for x in range(m.size))


def gallery_report(v: int) -> GalleryRow:
    """H = left_zero_unitization(v) 与 H^op 的对比"""
    h = left_zero_unitization(v)
    h_op = opposite(h)
    fpm = reduced_fpm_table(h)
    row = GalleryRow(
        v=v,
        fpm_equal=fpm == reduced_fpm_table(h_op),
        isomorphic=tables_isomorphic(h, h_op),
        breakable=is_breakable(h) and is_breakable(h_op),
        union_table=fpm == subset_union_table(h),
    )
    logger.info(f"v={v}: {row.to_json()}")
    return row
