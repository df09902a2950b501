"""
哥德巴赫半径
============
2n = p + q，p ≤ n ≤ q，半径为最小的 n − p；n 为素数时半径为0
"""

from dataclasses import dataclass
from typing import List

from primes import PrimeTable
from utils.errors import ConjectureViolationError, InvalidArgumentError, OutOfRangeError


@dataclass(frozen=True)
class RadiusRecord:
    """半径及对应的素数对"""
    n: int
    radius: int
    p: int
    q: int


def _radius_record(n: int, table: PrimeTable) -> RadiusRecord:
    n = int(n)
    if n < 2:
        raise InvalidArgumentError(f"n={n} 必须不小于2")
    if 2 * n > table.limit:
        raise OutOfRangeError(f"2n={2 * n} 超出素数表上限 {table.limit}")

    lower = table.primes_upto(n)
    hits = lower[table.membership[2 * n - lower]]
    if hits.size == 0:
        raise ConjectureViolationError(f"2n={2 * n} 没有找到任何分拆")

    p = int(hits[-1])
    return RadiusRecord(n=n, radius=n - p, p=p, q=2 * n - p)


def goldbach_radius(n: int, table: PrimeTable) -> int:
    """
    n 的哥德巴赫半径

    Args:
        n: n ≥ 2，且 2n ≤ table.limit

    Raises:
        ConjectureViolationError: 2n 没有分拆
    """
    return _radius_record(n, table).radius


def radius_series(n_min: int, n_max: int, table: PrimeTable) -> List[RadiusRecord]:
    """区间 [n_min, n_max] 内每个整数的半径"""
    if n_min > n_max:
        raise InvalidArgumentError(f"n_min={n_min} 大于 n_max={n_max}")
    return [_radius_record(n, table) for n in range(int(n_min), int(n_max) + 1)]
