"""k 重和集的最终结构

对 0 ∈ A、gcd A = 1 的有限集，kA 最终形如 B ∪ ⟦b, ka−c⟧ ∪ (ka − C)。
这里取规范选择：b = Frobenius(⟨A⟩) + 1，B = ⟨A⟩ ∩ ⟦0, b−2⟧；
c、C 对反射集 max A − A 同样处理。k_star 在 ⟦k_star, a²n⟧ 上逐个 k 穷举验证。
"""

from __future__ import annotations

import logging
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import chain, combinations
from typing import Iterator

from sumsetkit.models import ScanRow, VerificationError
from sumsetkit.natset import Interval, NatSet, gcd_of, kfold, reflect, sumset
from sumsetkit.numsgp import generated_by_set

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class NathansonStructure:
    """kA 的最终结构 (a, n, b, c, B, C, k_star)"""

    a: int
    n: int
    b: int
    c: int
    B: tuple[int, ...]
    C: tuple[int, ...]
    k_star: int
    bound_a2n: int
    bound_gw: int

    @property
    def gw_ok(self) -> bool:
        """k_star ≤ a − n + 1（经验比较，不是断言）"""
        return self.k_star <= self.bound_gw

    def reconstruct_bits(self, k: int) -> int | None:
        """B ∪ ⟦b, ka−c⟧ ∪ (ka − C) 的位向量；ka − C 出现负数时返回 None"""
        top = k * self.a
        bits = Interval(self.b, top - self.c).bits()
        for x in self.B:
            bits |= 1 << x
        for x in self.C:
            if top - x < 0:
                return None
            bits |= 1 << (top - x)
        return bits

    def to_row(self, a_set: NatSet) -> ScanRow:
        return ScanRow(
            set=list(a_set.elements),
            b=self.b,
            c=self.c,
            B=list(self.B),
            C=list(self.C),
            k_star=self.k_star,
            gw_bound=self.bound_gw,
            a2n_bound=self.bound_a2n,
            gw_ok=self.gw_ok,
        )


def _low_end(a_set: NatSet) -> tuple[int, tuple[int, ...]]:
    """(Frobenius(⟨A⟩) + 1, ⟨A⟩ ∩ ⟦0, b−2⟧)"""
    monoid = generated_by_set(a_set)
    b = monoid.frobenius + 1
    return b, monoid.members_upto(b - 2)


def canonical_structure(a_set: NatSet) -> NathansonStructure:
    """计算规范结构并确定 k_star

    Raises:
        ValueError: A = {0} 或 gcd(A) ≠ 1
        VerificationError: 分解在 k = a²n 处仍不成立
    """
    if a_set.is_zero:
        raise ValueError("A = {0} 没有最终结构")
    if gcd_of(a_set) != 1:
        raise ValueError(f"gcd(A) = {gcd_of(a_set)} ≠ 1，请先用 divide_exact 约化: {a_set}")

    a = a_set.max
    n = len(a_set) - 1
    b, low = _low_end(a_set)
    c, high = _low_end(reflect(a_set))
    bound = a * a * n
    shape = NathansonStructure(
        a=a, n=n, b=b, c=c, B=low, C=high, k_star=0,
        bound_a2n=bound, bound_gw=a - n + 1,
    )

    # 逐个 k 比较，k_star 为最后一次失败的下一个
    last_failure = -1
    current = NatSet.from_bits(1)
    for k in range(bound + 1):
        if current.bits != shape.reconstruct_bits(k):
            last_failure = k
        current = sumset(current, a_set)

    if last_failure == bound:
        logger.error(f"{a_set}: 分解在 k = a²n = {bound} 处不成立")
        raise VerificationError(f"{a_set}: k_star > a²n = {bound}")

    return NathansonStructure(
        a=a, n=n, b=b, c=c, B=low, C=high, k_star=last_failure + 1,
        bound_a2n=bound, bound_gw=a - n + 1,
    )


def verify_decomposition(a_set: NatSet, k: int, s: NathansonStructure) -> bool:
    """kA 是否恰好等于 B ∪ ⟦b, ka−c⟧ ∪ (ka − C)"""
    return kfold(a_set, k).bits == s.reconstruct_bits(k)


# ============ 语料扫描 ============


def iter_corpus(
    max_a: int, a_from: int | None = None, a_to: int | None = None
) -> Iterator[NatSet]:
    """所有 0 ∈ A、gcd 1、max A ∈ ⟦a_from, a_to⟧ ∩ ⟦1, max_a⟧ 的集合

    先按 max A 升序，再按元素序列字典序。
    """
    lo = max(1, a_from or 1)
    hi = min(max_a, a_to or max_a)
    for a in range(lo, hi + 1):
        inner = range(1, a)
        subsets = sorted(
            chain.from_iterable(combinations(inner, r) for r in range(len(inner) + 1))
        )
        for subset in subsets:
            elements = (0, *subset, a)
            if math.gcd(*elements) == 1:
                yield NatSet(elements)


def _scan_one(a_set: NatSet) -> ScanRow:
    return canonical_structure(a_set).to_row(a_set)


def iter_bound_scan(
    max_a: int,
    a_from: int | None = None,
    a_to: int | None = None,
    workers: int = 1,
) -> Iterator[ScanRow]:
    """逐行产出扫描结果（多进程时按输入顺序合并）

    Raises:
        ValueError: max_a < 1
        VerificationError: 出现 k_star > a²n
    """
    if max_a < 1:
        raise ValueError(f"max_a 必须 ≥ 1: {max_a}")

    corpus = iter_corpus(max_a, a_from, a_to)
    if workers > 1:
        pool = ProcessPoolExecutor(max_workers=workers)
        finished = False
        try:
            for row in pool.map(_scan_one, corpus, chunksize=16):
                _note(row)
                yield row
            finished = True
        finally:
            # 出错或提前关闭时丢弃尚未开始的任务
            pool.shutdown(wait=finished, cancel_futures=not finished)
    else:
        for a_set in corpus:
            row = _scan_one(a_set)
            _note(row)
            yield row


def _note(row: ScanRow) -> None:
    if not row.gw_ok:
        logger.warning(
            f"{row.set_}: k_star = {row.k_star} 超过 a − n + 1 = {row.gw_bound}"
        )


@dataclass
class ScanSummary:
    """扫描汇总"""

    rows: list[ScanRow] = field(default_factory=list)

    @property
    def anomalies(self) -> list[ScanRow]:
        """k_star > a − n + 1 的行"""
        return [row for row in self.rows if not row.gw_ok]


def bound_scan(max_a: int, workers: int = 1) -> ScanSummary:
    """扫描 max A ≤ max_a 的全部集合"""
    summary = ScanSummary(rows=list(iter_bound_scan(max_a, workers=workers)))
    logger.info(
        f"扫描完成: {len(summary.rows)} 个集合, 异常 {len(summary.anomalies)} 个"
    )
    return summary
