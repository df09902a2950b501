"""
哥德巴赫分拆计数
================
g(n) 按无序对 p ≤ q 计数，(5, 5) 对 10 只算一次
"""

import logging
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

import numpy as np

from primes import PrimeTable
from utils.errors import ConjectureViolationError, InvalidArgumentError, OutOfRangeError
from utils.helpers import require_even, log_elapsed
from utils.parallel import parallel_map_chunks

logger = logging.getLogger(__name__)


@dataclass
class PartitionRecord:
    """偶数 n 的分拆数及（可选）分拆列表"""
    n: int
    count: int
    pairs: Optional[List[Tuple[int, int]]] = field(default=None)

    def to_dict(self) -> dict:
        data = {'n': self.n, 'g': self.count}
        if self.pairs is not None:
            data['pairs'] = [list(pair) for pair in self.pairs]
        return data


def _check_n(n: int, table: PrimeTable) -> int:
    n = require_even(n, 4)
    if n > table.limit:
        raise OutOfRangeError(f"n={n} 超出素数表上限 {table.limit}")
    return n


def _partner_mask(n: int, table: PrimeTable) -> Tuple[np.ndarray, np.ndarray]:
    """返回 p ≤ n/2 的素数及 n-p 是否为素数的掩码"""
    small = table.primes_upto(n // 2)
    return small, table.membership[n - small]


def count_partitions(n: int, table: PrimeTable) -> PartitionRecord:
    """
    计算 g(n)

    Args:
        n: 偶数，4 ≤ n ≤ table.limit
        table: 素数表

    Returns:
        PartitionRecord（不含 pairs）
    """
    n = _check_n(n, table)
    _, mask = _partner_mask(n, table)
    count = int(np.count_nonzero(mask))
    if count == 0:
        raise ConjectureViolationError(f"n={n} 没有找到任何分拆")
    return PartitionRecord(n=n, count=count)


def list_partitions(n: int, table: PrimeTable) -> PartitionRecord:
    """列出 n 的全部分拆，按 p 升序"""
    n = _check_n(n, table)
    small, mask = _partner_mask(n, table)
    pairs = [(p, n - p) for p in small[mask].tolist()]
    if not pairs:
        raise ConjectureViolationError(f"n={n} 没有找到任何分拆")
    return PartitionRecord(n=n, count=len(pairs), pairs=pairs)


def partition_series(n_min: int, n_max: int, table: PrimeTable,
                     workers: int = 1) -> List[PartitionRecord]:
    """
    区间内每个偶数的 g(n)

    Args:
        n_min, n_max: 偶数，4 ≤ n_min ≤ n_max ≤ table.limit
        table: 素数表
        workers: 线程数，不影响结果顺序

    Returns:
        按 n 升序的 PartitionRecord 列表
    """
    n_min = require_even(n_min, 4, "n_min")
    n_max = require_even(n_max, 4, "n_max")
    if n_min > n_max:
        raise InvalidArgumentError(f"n_min={n_min} 大于 n_max={n_max}")
    if n_max > table.limit:
        raise OutOfRangeError(f"n_max={n_max} 超出素数表上限 {table.limit}")

    def run(chunk):
        return [count_partitions(n, table) for n in chunk]

    with log_elapsed(f"分拆序列 [{n_min}, {n_max}]", log=logger):
        return parallel_map_chunks(run, range(n_min, n_max + 1, 2), workers=workers)


def brute_force_counts(n_max: int, table: PrimeTable) -> dict:
    """
    双重循环枚举所有 p ≤ q、p + q ≤ n_max 的素数对

    仅用于校验，复杂度 O(π(n_max)²)
    """
    primes = table.primes_upto(n_max).tolist()
    counts = {}
    for i, p in enumerate(primes):
        for q in primes[i:]:
            s = p + q
            if s > n_max:
                break
            counts[s] = counts.get(s, 0) + 1
    return counts
