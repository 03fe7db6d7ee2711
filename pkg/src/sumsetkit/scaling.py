"""伸缩同态及其在约化幂幺半群上的提升

子幺半群 S ⊆ ℚ≥0 之间的同态都是 x ↦ qx。提升 F(X) = {qx : x ∈ X}
是 P_fin,0 之间的同态；反过来可由二元集的像 φ({0,a}) = {0,b} 恢复 q。
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import partial
from itertools import combinations_with_replacement
from typing import Callable, Iterable, NamedTuple

from sumsetkit.models import NotInMonoidError, VerificationError
from sumsetkit.numsgp import NumericalMonoid, PuiseuxFG, atoms_of, pm_contains
from sumsetkit.qset import QSet, q_make

logger = logging.getLogger(__name__)

SetMap = Callable[[QSet], QSet]


@dataclass(frozen=True)
class ScalingHom:
    """伸缩同态 f: source → target, x ↦ q·x"""

    q: Fraction
    source: PuiseuxFG
    target: PuiseuxFG

    def __post_init__(self) -> None:
        object.__setattr__(self, "q", Fraction(self.q))
        if self.q <= 0:
            raise ValueError(f"伸缩因子必须为正: {self.q}")
        for atom in self.source.atoms:
            if not pm_contains(self.target, self.q * atom):
                raise ValueError(f"{self.q}·{atom} 不在目标幺半群中")

    @classmethod
    def onto(cls, source: PuiseuxFG, q: Fraction | int | str) -> ScalingHom:
        """以 q·source 为目标的伸缩（同构）"""
        return cls(Fraction(q), source, source.scaled(q))

    @classmethod
    def identity(cls, source: PuiseuxFG) -> ScalingHom:
        return cls(Fraction(1), source, source)

    def __call__(self, x: Fraction) -> Fraction:
        return self.q * x

    def compose(self, inner: ScalingHom) -> ScalingHom:
        """self ∘ inner"""
        return ScalingHom(self.q * inner.q, inner.source, self.target)


def _check_in_source(f: ScalingHom, x: QSet) -> None:
    for element in x.elements:
        if not pm_contains(f.source, element):
            raise NotInMonoidError(f"{element} 不属于源幺半群")


def lift_apply(f: ScalingHom, x: QSet) -> QSet:
    """F(X) = f(X)

    Raises:
        NotInMonoidError: X 不包含于源幺半群
    """
    _check_in_source(f, x)
    return x.scaled(f.q)


def lift(f: ScalingHom) -> SetMap:
    """提升为集合映射"""
    return partial(lift_apply, f)


def lift_preimage(f: ScalingHom, y: QSet) -> QSet:
    """f⁻¹(Y)；要求 f 为同构且 Y 包含于目标幺半群"""
    inverse = ScalingHom(1 / f.q, f.target, f.source)
    return lift_apply(inverse, y)


def lift_is_homomorphism(f: ScalingHom, samples: Iterable[tuple[QSet, QSet]]) -> bool:
    """F(X+Y) == F(X) + F(Y) 对全部样本成立"""
    for x, y in samples:
        if lift_apply(f, x + y) != lift_apply(f, x) + lift_apply(f, y):
            logger.warning(f"同态性失败: X={x}, Y={y}")
            return False
    return True


def lift_is_injective(f: ScalingHom, samples: Iterable[QSet]) -> bool:
    """不同样本的像互不相同"""
    images: dict[QSet, QSet] = {}
    for x in samples:
        image = lift_apply(f, x)
        if images.setdefault(image, x) != x:
            return False
    return True


# ============ 由集合映射恢复伸缩因子 ============


class ViolationType(str, Enum):
    """恢复失败的类型"""

    TWO_ELEMENT_SHAPE = "two_element_shape"  # φ({0,a}) 不是二元集
    RATIO = "ratio"  # b/a 随探针变化
    ADDITIVITY = "additivity"  # φ({0,a₁+a₂}) ≠ {0, b₁+b₂}


@dataclass
class RecoveryViolation:
    """单个探针的失败记录"""

    type: ViolationType
    probe: Fraction | tuple[Fraction, Fraction]
    message: str


@dataclass
class RecoveryResult:
    """恢复结果：成功时 ratio 为公共比值"""

    ratio: Fraction | None
    violations: list[RecoveryViolation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.ratio is not None and not self.violations


def recover_scaling(phi: SetMap, probe_atoms: Iterable[Fraction | int | str]) -> RecoveryResult:
    """由 Φ(a) = max φ({0,a}) 恢复伸缩因子

    依次检查：每个二元集的像仍是二元集；b/a 与探针无关；
    φ({0, a₁+a₂}) = {0, b₁+b₂}。
    """
    probes = sorted({Fraction(p) for p in probe_atoms})
    if not probes or probes[0] <= 0:
        raise ValueError("探针必须是非空的正有理数")

    violations: list[RecoveryViolation] = []
    images: dict[Fraction, Fraction] = {}

    def image_of(a: Fraction) -> Fraction | None:
        img = phi(q_make([0, a]))
        if len(img) != 2:
            violations.append(
                RecoveryViolation(
                    ViolationType.TWO_ELEMENT_SHAPE, a, f"φ({{0,{a}}}) = {{{img}}}"
                )
            )
            return None
        return img.max

    for a in probes:
        b = image_of(a)
        if b is not None:
            images[a] = b

    ratios = {a: b / a for a, b in images.items()}
    ratio = ratios[probes[0]] if probes[0] in ratios else None
    for a, r in ratios.items():
        if ratio is not None and r != ratio:
            violations.append(
                RecoveryViolation(
                    ViolationType.RATIO, a, f"比值 {r} ≠ {ratio}（探针 {probes[0]}）"
                )
            )

    for a1, a2 in combinations_with_replacement(probes, 2):
        if a1 not in images or a2 not in images:
            continue
        expected = q_make([0, images[a1] + images[a2]])
        actual = phi(q_make([0, a1 + a2]))
        if actual != expected:
            violations.append(
                RecoveryViolation(
                    ViolationType.ADDITIVITY,
                    (a1, a2),
                    f"φ({{0,{a1 + a2}}}) = {{{actual}}} ≠ {{{expected}}}",
                )
            )

    if violations:
        for v in violations:
            logger.info(f"恢复失败 [{v.type.value}] {v.message}")
        return RecoveryResult(ratio=None, violations=violations)
    return RecoveryResult(ratio=ratio)


# ============ 同构判定 ============


def find_scaling_iso(s1: PuiseuxFG, s2: PuiseuxFG) -> Fraction | None:
    """寻找 q 使 q·S1 = S2

    伸缩严格单调，必须把最小原子映到最小原子，因此只有一个候选；
    再双向校验原子的归属。
    """
    q = s2.atoms[0] / s1.atoms[0]
    forward = all(pm_contains(s2, q * x) for x in s1.atoms)
    backward = all(pm_contains(s1, y / q) for y in s2.atoms)
    if forward and backward:
        return q
    return None


class IsoCheck(NamedTuple):
    isomorphic: bool
    equal: bool


def numerical_iso_is_equality(s1: NumericalMonoid, s2: NumericalMonoid) -> IsoCheck:
    """数值幺半群：同构当且仅当相等

    Raises:
        VerificationError: 两个判断不一致
    """
    isomorphic = (
        find_scaling_iso(atoms_of(s1.generators), atoms_of(s2.generators)) is not None
    )
    equal = s1.gaps == s2.gaps
    if isomorphic != equal:
        logger.error(f"同构 {isomorphic} 与相等 {equal} 不一致: {s1.generators}, {s2.generators}")
        raise VerificationError(f"同构与相等不一致: {s1.generators} vs {s2.generators}")
    return IsoCheck(isomorphic, equal)
