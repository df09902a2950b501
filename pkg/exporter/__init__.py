"""导出模块"""

from .output_writer import (
    OutputTable,
    render,
    render_csv,
    render_json,
    write_output,
)

__all__ = [
    'OutputTable',
    'render',
    'render_csv',
    'render_json',
    'write_output',
]
