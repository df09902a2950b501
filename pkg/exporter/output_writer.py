"""
结果导出
========
把命令结果写成 CSV 或 JSON

CSV：逗号分隔，LF 换行，必有表头；整数原样输出，实数保留12位有效数字。
JSON：对象列表，键顺序与列顺序一致，数值与 CSV 相同。
"""

import csv
import io
import os
import sys
from dataclasses import dataclass, field
from typing import Any, List, Sequence

import orjson

from config import OUTPUT_CONFIG
from utils.helpers import format_real, round_real


@dataclass
class OutputTable:
    """列名 + 行"""
    columns: List[str]
    rows: List[Sequence[Any]] = field(default_factory=list)

    def add(self, *values):
        if len(values) != len(self.columns):
            raise ValueError(f"列数不符: 期望{len(self.columns)}，实际{len(values)}")
        self.rows.append(values)


def _csv_cell(value, digits: int) -> str:
    if isinstance(value, bool):
        return "1" if value else "0"
    if isinstance(value, float):
        return format_real(value, digits)
    return str(value)


def _json_cell(value, digits: int):
    if isinstance(value, bool):
        return int(value)
    if isinstance(value, float):
        return round_real(value, digits)
    if isinstance(value, int):
        return int(value)
    return value


def render_csv(table: OutputTable, digits: int = None) -> str:
    """渲染为 CSV 文本"""
    digits = digits or OUTPUT_CONFIG['significant_digits']
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(table.columns)
    for row in table.rows:
        writer.writerow([_csv_cell(v, digits) for v in row])
    return buffer.getvalue()


def render_json(table: OutputTable, digits: int = None) -> str:
    """渲染为 JSON 文本"""
    digits = digits or OUTPUT_CONFIG['significant_digits']
    records = [
        {col: _json_cell(v, digits) for col, v in zip(table.columns, row)}
        for row in table.rows
    ]
    option = orjson.OPT_APPEND_NEWLINE | orjson.OPT_SERIALIZE_NUMPY
    if OUTPUT_CONFIG.get('json_indent'):
        option |= orjson.OPT_INDENT_2
    return orjson.dumps(records, option=option).decode("utf-8")


def render(table: OutputTable, fmt: str = "csv") -> str:
    if fmt == "csv":
        return render_csv(table)
    if fmt == "json":
        return render_json(table)
    raise ValueError(f"未知的输出格式 '{fmt}'")


def write_output(table: OutputTable, fmt: str = "csv", out_path: str = None, stream=None) -> str:
    """
    输出结果

    Args:
        table: 结果表
        fmt: csv / json
        out_path: 输出文件，None 时写入 stream
        stream: 输出流（默认标准输出）

    Returns:
        渲染后的文本
    """
    text = render(table, fmt)
    if out_path:
        directory = os.path.dirname(os.path.abspath(out_path))
        os.makedirs(directory, exist_ok=True)
        # newline="" 保证 Windows 下也是 LF
        with open(out_path, "w", encoding="utf-8", newline="") as f:
            f.write(text)
    else:
        (stream or sys.stdout).write(text)
    return text
