"""
工具函数
"""

import math
import time
import logging
from contextlib import contextmanager
from typing import List, Optional

from .errors import InvalidArgumentError

logger = logging.getLogger(__name__)


def require_even(n: int, minimum: int = 4, name: str = "n") -> int:
    """校验偶数参数，返回 int(n)"""
    n = int(n)
    if n % 2 != 0:
        raise InvalidArgumentError(f"{name}={n} 必须是偶数")
    if n < minimum:
        raise InvalidArgumentError(f"{name}={n} 必须不小于 {minimum}")
    return n


def parse_int_list(value: str) -> List[int]:
    """
    解析逗号分隔的整数列表

    - '-10,-8,8,10' -> [-10, -8, 8, 10]
    - '-10:10:2'    -> [-10, -8, ..., 10]  (起:止:步长，含两端)
    """
    if value is None:
        return []

    s = str(value).strip()
    if not s:
        return []

    if ":" in s:
        try:
            start, stop, step = (int(x) for x in s.split(":"))
        except ValueError:
            raise InvalidArgumentError(f"无法解析区间 '{s}'，格式应为 起:止:步长")
        if step <= 0:
            raise InvalidArgumentError(f"步长必须为正: '{s}'")
        return list(range(start, stop + 1, step))

    try:
        return [int(x.strip()) for x in s.split(",") if x.strip()]
    except ValueError:
        raise InvalidArgumentError(f"无法解析整数列表 '{s}'")


def format_real(value: float, digits: int = 12) -> str:
    """实数按有效数字位数输出"""
    return format(float(value), f".{digits}g")


def round_real(value: float, digits: int = 12) -> float:
    """与 format_real 一致的舍入，JSON 与 CSV 取值相同"""
    return float(format_real(value, digits))


def ln_squared(x: float) -> float:
    """ln²x"""
    lx = math.log(x)
    return lx * lx


@contextmanager
def log_elapsed(message: str, level: int = logging.INFO, log: Optional[logging.Logger] = None):
    """记录一个步骤的耗时"""
    log = log or logger
    start = time.perf_counter()
    try:
        yield
    finally:
        log.log(level, "%s 用时 %.3fs", message, time.perf_counter() - start)
