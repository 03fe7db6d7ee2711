"""和集稳定化：(k+1)A = kA + {0, max A} 对充分大的 k 成立

在整数模型上先除去 gcd，再用最终结构给出的阈值
max{k_star, ⌈1 + (b+c)/a⌉} 校验找到的最小 h。
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

from sumsetkit.models import Lemma22Row, VerificationError, exact_list
from sumsetkit.nathanson import canonical_structure
from sumsetkit.natset import NatSet, divide_exact, gcd_of, sumset
from sumsetkit.qset import QSet

logger = logging.getLogger(__name__)

DEFAULT_WINDOW = 50


@dataclass(frozen=True)
class Lemma22Report:
    """稳定化结果"""

    input: QSet
    h_min: int
    threshold: int
    window_checked: int

    def to_row(self) -> Lemma22Row:
        return Lemma22Row(
            set=exact_list(self.input.elements),
            h_min=self.h_min,
            threshold=self.threshold,
            window=self.window_checked,
        )


def stabilization_threshold(reduced: NatSet) -> int:
    """max{k_star, ⌈1 + (b+c)/a⌉}，reduced 须满足 gcd = 1"""
    s = canonical_structure(reduced)
    return max(s.k_star, 1 + -(-(s.b + s.c) // s.a))


def identity_holds(k_sets: list[NatSet], k: int, top: int) -> bool:
    """(k+1)A == kA + {0, top}"""
    bits = k_sets[k].bits
    return k_sets[k + 1].bits == bits | bits << top


def lemma22_minimal_h(a_set: QSet, window: int = DEFAULT_WINDOW) -> Lemma22Report:
    """最小的 h，使恒等式对 ⟦h, h + window⟧ 中每个 k 成立

    Raises:
        ValueError: window 非正
        VerificationError: 阈值以内找不到这样的 h
    """
    if window <= 0:
        raise ValueError(f"window 必须为正: {window}")
    if a_set.is_zero:
        # kA = {0} 对所有 k 成立
        return Lemma22Report(input=a_set, h_min=0, threshold=0, window_checked=window)

    # 伸缩不改变恒等式成立与否，只在 gcd 1 的整数模型上计算
    reduced = divide_exact(a_set.num, gcd_of(a_set.num))
    threshold = stabilization_threshold(reduced)
    top = reduced.max

    k_sets = [NatSet.from_bits(1)]
    for _ in range(threshold + window + 1):
        k_sets.append(sumset(k_sets[-1], reduced))
    holds = [identity_holds(k_sets, k, top) for k in range(threshold + window + 1)]

    for h in range(threshold + 1):
        if all(holds[h : h + window + 1]):
            logger.debug(f"{a_set}: h_min={h}, threshold={threshold}")
            return Lemma22Report(
                input=a_set, h_min=h, threshold=threshold, window_checked=window
            )

    logger.error(f"{a_set}: 阈值 {threshold} 以内没有稳定的 h")
    raise VerificationError(f"{a_set}: 在 h ≤ {threshold} 内恒等式未稳定")
