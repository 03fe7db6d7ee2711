"""sumsetkit - 精确和集运算工具

ℕ 与 ℚ≥0 上含 0 的有限集合的和集、k 重和的最终结构、和集稳定化、
数值/Puiseux 幺半群，以及约化幂幺半群上的同态提升与反例展示。
"""

__version__ = "0.1.0"

from sumsetkit.natset import (
    Backend,
    Interval,
    NatSet,
    divide_exact,
    gcd_of,
    kfold,
    reflect,
    sumset,
)
from sumsetkit.qset import QSet, q_kfold, q_make, q_sumset

__all__ = [
    "Backend",
    "Interval",
    "NatSet",
    "divide_exact",
    "gcd_of",
    "kfold",
    "reflect",
    "sumset",
    "QSet",
    "q_kfold",
    "q_make",
    "q_sumset",
]
