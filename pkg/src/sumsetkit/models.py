"""sumsetkit 数据模型

报告结构使用 Pydantic 实现 JSON 校验与序列化；领域错误类型也集中在这里。
"""

from __future__ import annotations

from enum import Enum
from fractions import Fraction
from typing import Iterable

from pydantic import BaseModel, ConfigDict, Field

# 精确数：整数或 "p/q" 字符串，JSON 中绝不出现浮点数
Exact = int | str


def exact(value: Fraction | int) -> Exact:
    """把有理数转成 JSON 友好的精确表示"""
    value = Fraction(value)
    if value.denominator == 1:
        return value.numerator
    return f"{value.numerator}/{value.denominator}"


def exact_list(values: Iterable[Fraction | int]) -> list[Exact]:
    return [exact(v) for v in values]


# ============ 错误类型 ============


class ParseError(ValueError):
    """字面量解析错误（记录出错位置和记号）"""

    def __init__(self, message: str, position: int, token: str):
        super().__init__(f"{message} (位置 {position}, 记号 {token!r})")
        self.position = position
        self.token = token


class GuardError(ValueError):
    """规模保护触发（指数/阶乘爆炸前主动失败）"""

    def __init__(self, name: str, limit: int, actual: int):
        super().__init__(f"超出规模保护 {name}: {actual} > {limit}")
        self.name = name
        self.limit = limit
        self.actual = actual


class NotInMonoidError(ValueError):
    """元素不属于给定的 Puiseux 幺半群"""


class VerificationError(RuntimeError):
    """计算结果与定理矛盾"""


# ============ 报告模型 ============


class Report(BaseModel):
    model_config = ConfigDict(populate_by_name=True, frozen=True)

    def to_json(self) -> str:
        return self.model_dump_json(by_alias=True)


class ScanRow(Report):
    """bounds-scan / nathanson 的单行结果"""

    set_: list[int] = Field(alias="set")
    b: int
    c: int
    B: list[int]
    C: list[int]
    k_star: int
    gw_bound: int
    a2n_bound: int
    gw_ok: bool


class Lemma22Row(Report):
    """稳定化报告"""

    set_: list[Exact] = Field(alias="set")
    h_min: int
    threshold: int
    window: int


class MonoidReport(Report):
    """幺半群报告（数值幺半群或有限生成 Puiseux 幺半群）"""

    generators: list[Exact]
    atoms: list[Exact]
    frobenius: Exact
    gaps: list[Exact]
    contains: dict[str, bool] = {}  # 成员查询


class GalleryRow(Report):
    """有限幺半群反例展示的单行结果"""

    v: int
    fpm_equal: bool
    isomorphic: bool
    breakable: bool
    union_table: bool


class SetReport(Report):
    """sumset / kfold 的结果"""

    set_: list[Exact] = Field(alias="set")
    size: int
    max: Exact


class IsoReport(Report):
    """iso 命令的结果"""

    scale: Exact | None
    equal: bool | None = None  # 两个数值幺半群是否相等


class RecoverReport(Report):
    """recover 命令的结果"""

    q: Exact
    recovered: Exact | None
    violations: list[str]
    homomorphism: bool


# ============ 运行配置 ============


class OutputFormat(str, Enum):
    """输出格式"""

    TEXT = "text"
    JSON = "json"
    CSV = "csv"


class Command(str, Enum):
    """CLI 子命令"""

    SUMSET = "sumset"
    KFOLD = "kfold"
    NATHANSON = "nathanson"
    BOUNDS_SCAN = "bounds-scan"
    STABILIZE = "stabilize"
    MONOID = "monoid"
    ISO = "iso"
    RECOVER = "recover"
    GALLERY = "gallery"


class RunConfig(BaseModel):
    """一次运行的完整配置；相同配置必须产生逐字节相同的输出"""

    model_config = ConfigDict(frozen=True)

    command: Command
    format: OutputFormat = OutputFormat.TEXT
    window: int = Field(default=50, ge=1)
    strict: bool = False
    seed: int = Field(default=0, ge=-(2**63), lt=2**63)
    max_a: int | None = Field(default=None, ge=1)
    a_from: int | None = Field(default=None, ge=1)
    a_to: int | None = Field(default=None, ge=1)
    workers: int = Field(default=1, ge=1)
