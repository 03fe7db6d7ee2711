"""sumsetkit CLI

使用 typer 实现命令行界面。退出码：0 成功，1 验证失败，2 输入错误。
"""

from __future__ import annotations

import logging
import math
import random
import re
from contextlib import contextmanager
from fractions import Fraction
from typing import Annotated, Iterator, Optional

import typer
from rich.console import Console
from rich.logging import RichHandler

from sumsetkit.gallery import gallery_report
from sumsetkit.models import (
    Command,
    IsoReport,
    MonoidReport,
    OutputFormat,
    ParseError,
    RecoverReport,
    RunConfig,
    ScanRow,
    SetReport,
    VerificationError,
    exact,
    exact_list,
)
from sumsetkit.nathanson import canonical_structure, iter_bound_scan, verify_decomposition
from sumsetkit.natset import Backend, NatSet, kfold, sumset
from sumsetkit.numsgp import atoms_of, generate, iter_members
from sumsetkit.qset import QSet, q_kfold, q_make, q_sumset
from sumsetkit.report import ReportWriter, braces
from sumsetkit.scaling import (
    ScalingHom,
    find_scaling_iso,
    lift,
    lift_is_homomorphism,
    numerical_iso_is_equality,
    recover_scaling,
)
from sumsetkit.stabilizer import DEFAULT_WINDOW, lemma22_minimal_h

app = typer.Typer(
    name="sumsetkit",
    help="ℕ 与 ℚ≥0 上的精确和集运算：k 重和结构、稳定化、数值/Puiseux 幺半群与幂幺半群",
    no_args_is_help=True,
)
console = Console(soft_wrap=True, highlight=False)
err_console = Console(stderr=True)

logger = logging.getLogger(__name__)

_RATIONAL_PATTERN = re.compile(r"(\d+)(?:/(\d+))?")

FormatOption = Annotated[
    OutputFormat,
    typer.Option("-f", "--format", help="输出格式"),
]
SeedOption = Annotated[
    int,
    typer.Option("--seed", help="随机抽样种子（64 位整数）"),
]


@app.callback()
def main(
    verbose: Annotated[
        bool,
        typer.Option("-v", "--verbose", help="在 stderr 输出日志"),
    ] = False,
) -> None:
    """sumsetkit 命令行"""
    if verbose:
        logging.basicConfig(
            level=logging.INFO,
            format="%(message)s",
            handlers=[RichHandler(console=err_console, show_path=False)],
            force=True,
        )


@contextmanager
def guarded() -> Iterator[None]:
    """把库异常映射为退出码"""
    try:
        yield
    except VerificationError as e:
        err_console.print(f"[red]验证失败:[/red] {e}")
        raise typer.Exit(1)
    except ParseError as e:
        err_console.print(f"[red]解析错误:[/red] {e}")
        raise typer.Exit(2)
    except ValueError as e:
        err_console.print(f"[red]错误:[/red] {e}")
        raise typer.Exit(2)
    except MemoryError:
        err_console.print("[red]错误:[/red] 输入规模过大，内存不足")
        raise typer.Exit(2)


def parse_rationals(literal: str) -> list[Fraction]:
    """解析 `2,3` 或 `1/2,1/3` 形式的生成元字面量

    Raises:
        ParseError: 记号不是正整数或 p/q
    """
    values: list[Fraction] = []
    for position, raw in enumerate(literal.split(",")):
        match = _RATIONAL_PATTERN.fullmatch(raw.strip())
        if not match or int(match.group(2) or 1) == 0:
            raise ParseError("非法的有理数", position, raw)
        value = Fraction(int(match.group(1)), int(match.group(2) or 1))
        if value <= 0:
            raise ParseError("生成元必须为正", position, raw)
        values.append(value)
    return values


def _is_rational_literal(*literals: str) -> bool:
    return any("/" in literal for literal in literals)


def _set_report(elements: list[Fraction] | tuple[int, ...]) -> SetReport:
    return SetReport(set=exact_list(elements), size=len(elements), max=exact(max(elements)))


def _set_text(row: SetReport) -> str:
    return ",".join(map(str, row.set_))


def _scan_text(row: ScanRow) -> str:
    status = "ok" if row.gw_ok else "ANOMALY"
    return (
        f"{','.join(map(str, row.set_))}  b={row.b} B={braces(row.B)} "
        f"c={row.c} C={braces(row.C)} k*={row.k_star} "
        f"gw={row.gw_bound} a2n={row.a2n_bound} {status}"
    )


# ============ 命令 ============


@app.command(name=Command.SUMSET.value)
def sumset_command(
    x: Annotated[str, typer.Argument(help="集合 X，如 0,2,3 或 0,1/2")],
    y: Annotated[str, typer.Argument(help="集合 Y")],
    fmt: FormatOption = OutputFormat.TEXT,
    backend: Annotated[
        Backend, typer.Option("--backend", help="和集内核")
    ] = Backend.BITSET,
) -> None:
    """和集 X+Y"""
    with guarded():
        config = RunConfig(command=Command.SUMSET, format=fmt)
        if _is_rational_literal(x, y):
            result = q_sumset(QSet.parse(x, strict=True), QSet.parse(y, strict=True), backend)
            row = _set_report(list(result.elements))
        else:
            row = _set_report(sumset(NatSet.parse(x), NatSet.parse(y), backend).elements)
        ReportWriter(console, config.format, _set_text).emit(row)


@app.command(name=Command.KFOLD.value)
def kfold_command(
    x: Annotated[str, typer.Argument(help="集合 X")],
    k: Annotated[int, typer.Argument(min=0, help="重数 k")],
    fmt: FormatOption = OutputFormat.TEXT,
    backend: Annotated[
        Backend, typer.Option("--backend", help="和集内核")
    ] = Backend.BITSET,
) -> None:
    """k 重和 kX（二进制倍增）"""
    with guarded():
        config = RunConfig(command=Command.KFOLD, format=fmt)
        if _is_rational_literal(x):
            row = _set_report(list(q_kfold(QSet.parse(x, strict=True), k, backend).elements))
        else:
            row = _set_report(kfold(NatSet.parse(x), k, backend).elements)
        ReportWriter(console, config.format, _set_text).emit(row)


@app.command(name=Command.NATHANSON.value)
def nathanson_command(
    a: Annotated[str, typer.Argument(help="集合 A（0 ∈ A，gcd 1）")],
    fmt: FormatOption = OutputFormat.TEXT,
    verify: Annotated[
        Optional[list[int]],
        typer.Option("--verify", help="额外校验指定 k 的分解（可重复）"),
    ] = None,
) -> None:
    """kA 的最终结构 (b, c, B, C, k*)"""
    with guarded():
        config = RunConfig(command=Command.NATHANSON, format=fmt)
        a_set = NatSet.parse(a)
        structure = canonical_structure(a_set)
        ReportWriter(console, config.format, _scan_text).emit(structure.to_row(a_set))

        failed = [k for k in verify or [] if not verify_decomposition(a_set, k, structure)]
        for k in verify or []:
            logger.info(f"k={k}: {'不成立' if k in failed else '成立'}")
        if failed:
            err_console.print(f"[yellow]分解不成立的 k:[/yellow] {failed}")
            raise typer.Exit(1)


@app.command(name=Command.BOUNDS_SCAN.value)
def bounds_scan_command(
    max_a: Annotated[int, typer.Option("--max-a", min=1, help="扫描 max A ≤ N 的全部集合")],
    a_from: Annotated[
        Optional[int], typer.Option("--from", min=1, help="只扫描 max A ≥ N")
    ] = None,
    a_to: Annotated[
        Optional[int], typer.Option("--to", min=1, help="只扫描 max A ≤ N")
    ] = None,
    fmt: FormatOption = OutputFormat.TEXT,
    strict: Annotated[
        bool, typer.Option("--strict", help="k* > a−n+1 视为失败")
    ] = False,
    workers: Annotated[
        int, typer.Option("-j", "--workers", min=1, help="并行进程数")
    ] = 1,
) -> None:
    """扫描语料，比较 k* 与 a−n+1、a²n"""
    with guarded():
        config = RunConfig(
            command=Command.BOUNDS_SCAN, format=fmt, strict=strict,
            max_a=max_a, a_from=a_from, a_to=a_to, workers=workers,
        )
        writer = ReportWriter(console, config.format, _scan_text)
        total = 0
        anomalies: list[ScanRow] = []
        for row in iter_bound_scan(config.max_a, config.a_from, config.a_to, config.workers):
            writer.emit(row)
            total += 1
            if not row.gw_ok:
                anomalies.append(row)

        if config.format is OutputFormat.TEXT:
            console.out(f"总计: {total} 个集合, 异常: {len(anomalies)}")
        if anomalies:
            err_console.print(f"[yellow]k* > a−n+1 的集合:[/yellow] {len(anomalies)} 个")
            if config.strict:
                raise typer.Exit(1)


@app.command(name=Command.STABILIZE.value)
def stabilize_command(
    a: Annotated[str, typer.Argument(help="集合 A，如 0,1,3/2")],
    fmt: FormatOption = OutputFormat.TEXT,
    window: Annotated[
        int, typer.Option("--window", min=1, help="恒等式需持续成立的 k 个数")
    ] = DEFAULT_WINDOW,
) -> None:
    """(k+1)A = kA + {0, max A} 的最小起点 h"""
    with guarded():
        config = RunConfig(command=Command.STABILIZE, format=fmt, window=window)
        report = lemma22_minimal_h(QSet.parse(a, strict=True), config.window)
        ReportWriter(
            console,
            config.format,
            lambda row: f"h_min={row.h_min} threshold={row.threshold} window={row.window}",
        ).emit(report.to_row())


@app.command(name=Command.MONOID.value)
def monoid_command(
    gens: Annotated[str, typer.Argument(help="生成元，如 2,3 或 1/2,1/3")],
    fmt: FormatOption = OutputFormat.TEXT,
    member: Annotated[
        Optional[list[str]],
        typer.Option("--member", help="判定该有理数是否属于幺半群（可重复）"),
    ] = None,
) -> None:
    """数值幺半群 / Puiseux 幺半群的原子、Frobenius 数与间隙"""
    with guarded():
        config = RunConfig(command=Command.MONOID, format=fmt)
        values = parse_rationals(gens)
        if all(v.denominator == 1 for v in values) and math.gcd(*map(int, values)) == 1:
            report = generate(int(v) for v in values).to_report()
        else:
            report = atoms_of(values).to_report(generators=values)
        s = atoms_of(values)
        queries = {q: Fraction(q) in s for q in member or []}
        report = report.model_copy(update={"contains": queries})

        def text(row: MonoidReport) -> str:
            lines = [
                f"generators: {','.join(map(str, row.generators))}",
                f"atoms: {','.join(map(str, row.atoms))}",
                f"frobenius: {row.frobenius}",
                f"gaps: {braces(row.gaps)}",
            ]
            lines += [f"{q} ∈ S: {str(ok).lower()}" for q, ok in row.contains.items()]
            return "\n".join(lines)

        ReportWriter(console, config.format, text).emit(report)


@app.command(name=Command.ISO.value)
def iso_command(
    s1: Annotated[str, typer.Argument(help="S1 的生成元")],
    s2: Annotated[str, typer.Argument(help="S2 的生成元")],
    fmt: FormatOption = OutputFormat.TEXT,
) -> None:
    """寻找伸缩同构 q·S1 = S2"""
    with guarded():
        config = RunConfig(command=Command.ISO, format=fmt)
        g1, g2 = parse_rationals(s1), parse_rationals(s2)
        q = find_scaling_iso(atoms_of(g1), atoms_of(g2))

        equal = None
        if all(v.denominator == 1 for v in g1 + g2):
            n1 = _numerical_or_none(g1)
            n2 = _numerical_or_none(g2)
            if n1 is not None and n2 is not None:
                equal = numerical_iso_is_equality(n1, n2).equal

        ReportWriter(
            console,
            config.format,
            lambda row: "none" if row.scale is None else str(row.scale),
        ).emit(IsoReport(scale=None if q is None else exact(q), equal=equal))


def _numerical_or_none(values: list[Fraction]):
    try:
        return generate(int(v) for v in values)
    except ValueError:
        return None


@app.command(name=Command.RECOVER.value)
def recover_command(
    q: Annotated[str, typer.Argument(help="伸缩因子，如 3/2")],
    gens: Annotated[str, typer.Argument(help="源幺半群的生成元")],
    fmt: FormatOption = OutputFormat.TEXT,
    seed: SeedOption = 0,
    probes: Annotated[int, typer.Option("--probes", min=1, help="探针个数")] = 5,
    samples: Annotated[int, typer.Option("--samples", min=1, help="同态性样本对个数")] = 20,
) -> None:
    """对提升 lift(×q) 恢复 q，并抽样检查同态性"""
    with guarded():
        config = RunConfig(command=Command.RECOVER, format=fmt, seed=seed)
        (ratio,) = parse_rationals(q)
        source = atoms_of(parse_rationals(gens))
        f = ScalingHom.onto(source, ratio)
        rng = random.Random(config.seed)

        pool = list(iter_members(source, 4 * probes + 1))[1:]
        chosen = sorted(rng.sample(pool, probes))
        result = recover_scaling(lift(f), chosen)

        def random_set() -> QSet:
            return q_make([0, *rng.sample(pool, rng.randint(1, 3))])

        pairs = [(random_set(), random_set()) for _ in range(samples)]
        report = RecoverReport(
            q=exact(ratio),
            recovered=None if result.ratio is None else exact(result.ratio),
            violations=[v.message for v in result.violations],
            homomorphism=lift_is_homomorphism(f, pairs),
        )
        ReportWriter(
            console,
            config.format,
            lambda row: f"q={row.q} recovered={row.recovered if row.recovered is not None else 'none'} "
            f"homomorphism={str(row.homomorphism).lower()}",
        ).emit(report)
        if not result.ok or not report.homomorphism:
            raise typer.Exit(1)


@app.command(name=Command.GALLERY.value)
def gallery_command(
    v_max: Annotated[int, typer.Option("--v-max", min=1, help="|V| 的上限")] = 3,
    fmt: FormatOption = OutputFormat.TEXT,
) -> None:
    """左零半群单位化 H 与 H^op：P_fin,1 相同但不同构"""
    with guarded():
        config = RunConfig(command=Command.GALLERY, format=fmt)
        writer = ReportWriter(
            console,
            config.format,
            lambda row: (
                f"v={row.v} fpm_equal={str(row.fpm_equal).lower()} "
                f"isomorphic={str(row.isomorphic).lower()} "
                f"breakable={str(row.breakable).lower()} "
                f"union_table={str(row.union_table).lower()}"
            ),
        )
        for v in range(1, v_max + 1):
            writer.emit(gallery_report(v))


if __name__ == "__main__":
    app()
