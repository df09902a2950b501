import logging

import orjson
import pytest
from pydantic import ValidationError

from exporter import OutputTable, render, render_csv, render_json, write_output
from settings import ToolkitSettings
from utils import (
    InvalidArgumentError,
    GoldbachError,
    require_even,
    parse_int_list,
    format_real,
    round_real,
    log_elapsed,
    split_chunks,
    parallel_map_chunks,
    parallel_reduce_chunks,
)


# ============================================================================
# 工具函数
# ============================================================================

def test_require_even():
    assert require_even(10) == 10
    assert require_even("12") == 12
    with pytest.raises(InvalidArgumentError):
        require_even(7)
    with pytest.raises(InvalidArgumentError, match="n_min"):
        require_even(2, 4, "n_min")


def test_parse_int_list():
    assert parse_int_list("-10,-8,8,10") == [-10, -8, 8, 10]
    assert parse_int_list("-4:4:2") == [-4, -2, 0, 2, 4]
    assert parse_int_list(" 1, 2 ,3 ") == [1, 2, 3]
    assert parse_int_list("") == []
    assert parse_int_list(None) == []
    for bad in ("a,b", "1:5", "1:5:0"):
        with pytest.raises(InvalidArgumentError):
            parse_int_list(bad)


def test_real_formatting():
    assert format_real(1 / 3) == "0.333333333333"
    assert format_real(1.0) == "1"
    assert format_real(123456789.123456) == "123456789.123"
    assert round_real(1 / 3) == 0.333333333333
    assert format_real(2 / 3, digits=3) == "0.667"


def test_errors_are_also_builtin_types():
    assert issubclass(InvalidArgumentError, ValueError)
    assert issubclass(InvalidArgumentError, GoldbachError)


def test_log_elapsed(caplog):
    with caplog.at_level(logging.INFO):
        with log_elapsed("测试步骤"):
            pass
    assert "测试步骤 用时" in caplog.text


# ============================================================================
# 并行
# ============================================================================

def test_split_chunks():
    assert split_chunks([], 4) == []
    chunks = split_chunks(list(range(1000)), 4, min_chunk=100)
    assert len(chunks) == 10
    assert [x for c in chunks for x in c] == list(range(1000))
    assert split_chunks(list(range(10)), 8, min_chunk=256) == [list(range(10))]


def test_parallel_map_keeps_order():
    items = list(range(5000))
    square = lambda chunk: [x * x for x in chunk]  # noqa: E731
    assert parallel_map_chunks(square, items, workers=1) == [x * x for x in items]
    assert parallel_map_chunks(square, items, workers=8, min_chunk=10) == [x * x for x in items]
    with pytest.raises(ValueError):
        parallel_map_chunks(square, items, workers=-1)


def test_parallel_reduce():
    items = list(range(1, 1001))
    total = parallel_reduce_chunks(sum, lambda a, b: a + b, items, workers=4, min_chunk=50)
    assert total == 500500
    with pytest.raises(ValueError):
        parallel_reduce_chunks(sum, lambda a, b: a + b, [], workers=2)


# ============================================================================
# 运行配置
# ============================================================================

def test_settings_defaults():
    settings = ToolkitSettings()
    assert settings.output_format == "csv"
    assert settings.workers == 1
    assert settings.sieve_limit is None


@pytest.mark.parametrize("kwargs", [
    {'workers': 0},
    {'output_format': 'xml'},
    {'sieve_limit': 1},
])
def test_settings_validation(kwargs):
    with pytest.raises(ValidationError):
        ToolkitSettings(**kwargs)


# ============================================================================
# 导出
# ============================================================================

@pytest.fixture
def sample():
    table = OutputTable(["n", "value", "flag"])
    table.add(4, 1 / 3, True)
    table.add(6, 2.0, False)
    return table


def test_render_csv(sample):
    assert render_csv(sample) == "n,value,flag\n4,0.333333333333,1\n6,2,0\n"


def test_render_json(sample):
    records = orjson.loads(render_json(sample))
    assert records == [
        {'n': 4, 'value': 0.333333333333, 'flag': 1},
        {'n': 6, 'value': 2.0, 'flag': 0},
    ]
    assert list(records[0]) == ["n", "value", "flag"]
    assert render_json(sample).endswith("\n")


def test_empty_table_keeps_header():
    assert render_csv(OutputTable(["n", "q"])) == "n,q\n"
    assert orjson.loads(render_json(OutputTable(["n", "q"]))) == []


def test_row_width_is_checked(sample):
    with pytest.raises(ValueError):
        sample.add(1, 2)


def test_unknown_format(sample):
    with pytest.raises(ValueError):
        render(sample, "xml")


def test_write_output_to_file(sample, tmp_path):
    path = tmp_path / "out" / "result.csv"
    text = write_output(sample, "csv", str(path))
    assert path.read_bytes() == text.encode("utf-8")
    assert b"\r\n" not in path.read_bytes()
