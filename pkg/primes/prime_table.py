"""
素数表
======
埃拉托斯特尼筛法，超过阈值时改用只筛奇数的分段筛。
PrimeTable 构造后只读，可被多个线程同时查询。
"""

import math
import logging
from dataclasses import dataclass
from typing import Dict, List

import numpy as np

from config import SIEVE_CONFIG
from utils.errors import InvalidArgumentError, OutOfRangeError
from utils.helpers import log_elapsed

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class PrimeTable:
    """
    筛法结果

    Attributes:
        limit: 上限（含）
        membership: 长度 limit+1 的布尔数组，membership[x] 为真当且仅当 x 是素数
        ordered_primes: 不超过 limit 的全部素数（升序，int64）
    """
    limit: int
    membership: np.ndarray
    ordered_primes: np.ndarray

    def __post_init__(self):
        self.membership.flags.writeable = False
        self.ordered_primes.flags.writeable = False

    def __len__(self) -> int:
        return int(self.ordered_primes.size)

    def __repr__(self) -> str:
        return f"PrimeTable(limit={self.limit}, primes={len(self)})"

    def _check(self, x: int) -> int:
        x = int(x)
        if x < 0:
            raise InvalidArgumentError(f"x={x} 不能为负数")
        if x > self.limit:
            raise OutOfRangeError(f"x={x} 超出素数表上限 {self.limit}")
        return x

    def is_prime(self, x: int) -> bool:
        """查询 x 是否为素数，超出上限直接报错"""
        return bool(self.membership[self._check(x)])

    def prime_count(self, x: int) -> int:
        """π(x)"""
        x = self._check(x)
        return int(np.searchsorted(self.ordered_primes, x, side='right'))

    def primes_upto(self, x: int) -> np.ndarray:
        """不超过 x 的素数"""
        return self.ordered_primes[:self.prime_count(x)]

    def primes_between(self, lo: int, hi: int) -> np.ndarray:
        """闭区间 [lo, hi] 内的素数"""
        hi = self._check(hi)
        lo = max(int(lo), 0)
        if lo > hi:
            return self.ordered_primes[:0]
        start = int(np.searchsorted(self.ordered_primes, lo, side='left'))
        stop = int(np.searchsorted(self.ordered_primes, hi, side='right'))
        return self.ordered_primes[start:stop]

    def to_list(self) -> List[int]:
        return self.ordered_primes.tolist()


# ============================================================================
# 筛法
# ============================================================================

def _simple_sieve(limit: int) -> np.ndarray:
    """整段筛，返回 membership 数组"""
    flags = np.ones(limit + 1, dtype=bool)
    flags[:2] = False
    for p in range(2, math.isqrt(limit) + 1):
        if flags[p]:
            flags[p * p::p] = False
    return flags


def _segmented_sieve(limit: int, segment_size: int) -> np.ndarray:
    """
    只筛奇数的分段筛

    基础素数取到 √limit，每段只保存奇数标记，结果写回稠密的 membership。
    """
    flags = np.zeros(limit + 1, dtype=bool)
    flags[2] = True

    base = np.flatnonzero(_simple_sieve(math.isqrt(limit) + 1))
    base = base[base > 2]

    span = max(2, 2 * (segment_size // 2))
    low = 3
    while low <= limit:
        high = min(low + span, limit + 1)       # 不含 high
        odd_count = (high - low + 1) // 2
        mask = np.ones(odd_count, dtype=bool)

        for p in base:
            p = int(p)
            p2 = p * p
            if p2 >= high:
                break
            start = max(p2, ((low + p - 1) // p) * p)
            if start % 2 == 0:
                start += p
            if start >= high:
                continue
            mask[(start - low) // 2::p] = False

        flags[low:high:2] = mask
        low += span

    return flags


def sieve_upto(limit: int, config: Dict = None) -> PrimeTable:
    """
    构造素数表

    Args:
        limit: 上限（含），至少为2
        config: 筛法配置，默认 SIEVE_CONFIG

    Returns:
        PrimeTable
    """
    config = config or SIEVE_CONFIG
    try:
        limit = int(limit)
    except (TypeError, ValueError):
        raise InvalidArgumentError(f"limit={limit!r} 不是整数")
    if limit < 2:
        raise InvalidArgumentError(f"limit={limit} 必须不小于2")
    max_limit = config.get('max_limit', SIEVE_CONFIG['max_limit'])
    if limit > max_limit:
        raise OutOfRangeError(f"limit={limit} 超出允许的素数表上限 {max_limit}")

    threshold = config.get('segment_threshold', SIEVE_CONFIG['segment_threshold'])
    with log_elapsed(f"筛法 limit={limit}", log=logger):
        if limit > threshold:
            segment_size = config.get('segment_size', SIEVE_CONFIG['segment_size'])
            membership = _segmented_sieve(limit, segment_size)
        else:
            membership = _simple_sieve(limit)

    ordered = np.flatnonzero(membership).astype(np.int64)
    return PrimeTable(limit=limit, membership=membership, ordered_primes=ordered)


def is_prime(x: int, table: PrimeTable) -> bool:
    """x 是否为素数（0 ≤ x ≤ table.limit）"""
    return table.is_prime(x)


def odd_prime_factors(n: int, table: PrimeTable) -> List[int]:
    """
    n 的不同奇素因子（升序），用素数表试除到 √n

    Args:
        n: 正整数
        table: 素数表，上限不小于 ⌊√n⌋
    """
    n = int(n)
    if n < 1:
        raise InvalidArgumentError(f"n={n} 必须为正整数")

    root = math.isqrt(n)
    if root > table.limit:
        raise OutOfRangeError(f"分解 n={n} 需要素数表上限至少 {root}，当前 {table.limit}")

    while n % 2 == 0:
        n //= 2

    factors = []
    for p in table.primes_upto(root):
        p = int(p)
        if p == 2:
            continue
        if p * p > n:
            break
        if n % p == 0:
            factors.append(p)
            while n % p == 0:
                n //= p
    if n > 1:
        factors.append(n)
    return factors
