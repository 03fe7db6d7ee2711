"""报告输出

text / json / csv 三种格式。json 每个报告一行（扫描时即 JSON Lines），
csv 与 json 同列，列表单元以空格连接。只写 stdout，保证输出可逐字节复现。
"""

from __future__ import annotations

import csv
import io
from typing import Callable, Generic, TypeVar

from rich.console import Console

from sumsetkit.models import OutputFormat, Report

R = TypeVar("R", bound=Report)


def _cell(value: object) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if value is None:
        return ""
    if isinstance(value, list):
        return " ".join(_cell(v) for v in value)
    if isinstance(value, dict):
        return " ".join(f"{k}={_cell(v)}" for k, v in value.items())
    return str(value)


def csv_line(cells: list[str]) -> str:
    buffer = io.StringIO()
    csv.writer(buffer, lineterminator="").writerow(cells)
    return buffer.getvalue()


def csv_header(row: Report) -> str:
    return csv_line(list(row.model_dump(by_alias=True)))


def csv_row(row: Report) -> str:
    return csv_line([_cell(v) for v in row.model_dump(by_alias=True).values()])


class ReportWriter(Generic[R]):
    """按格式逐行输出报告"""

    def __init__(
        self,
        console: Console,
        fmt: OutputFormat,
        text: Callable[[R], str],
    ):
        """初始化输出器

        Args:
            console: 输出控制台（stdout）
            fmt: 输出格式
            text: text 格式下单行报告的渲染函数
        """
        self.console = console
        self.fmt = fmt
        self.text = text
        self._header_written = False

    def emit(self, row: R) -> None:
        if self.fmt is OutputFormat.JSON:
            self.console.out(row.to_json(), highlight=False)
        elif self.fmt is OutputFormat.CSV:
            if not self._header_written:
                self.console.out(csv_header(row), highlight=False)
                self._header_written = True
            self.console.out(csv_row(row), highlight=False)
        else:
            self.console.out(self.text(row), highlight=False)


def braces(values: list) -> str:
    return "{" + ",".join(map(str, values)) + "}"
