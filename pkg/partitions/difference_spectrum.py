"""
素数差谱
========
对素数上界 P，统计 p₂ < p₁ ≤ P 的素数对按差 p₁ − p₂ 的分布。
含素数2的对产生奇数差，按实际奇数键记录。
"""

import logging
from dataclasses import dataclass, field
from typing import Dict

import numpy as np

from primes import PrimeTable
from utils.errors import InvalidArgumentError
from utils.helpers import log_elapsed
from utils.parallel import parallel_reduce_chunks

logger = logging.getLogger(__name__)


@dataclass
class DiffSpectrum:
    """差谱，counts 只保存非零项"""
    prime_bound: int
    counts: Dict[int, int] = field(default_factory=dict)

    def count(self, n: int) -> int:
        return self.counts.get(int(n), 0)

    def even_only(self) -> "DiffSpectrum":
        """只保留偶数差"""
        return DiffSpectrum(
            prime_bound=self.prime_bound,
            counts={n: c for n, c in self.counts.items() if n % 2 == 0},
        )

    def items(self):
        return sorted(self.counts.items())


def difference_spectrum(prime_bound: int, table: PrimeTable, workers: int = 1) -> DiffSpectrum:
    """
    计算差谱

    Args:
        prime_bound: 素数 P，P ≤ table.limit
        table: 素数表
        workers: 线程数

    Returns:
        DiffSpectrum
    """
    prime_bound = int(prime_bound)
    if prime_bound < 2 or prime_bound > table.limit:
        raise InvalidArgumentError(f"P={prime_bound} 不在素数表范围 [2, {table.limit}] 内")
    if not table.is_prime(prime_bound):
        raise InvalidArgumentError(f"P={prime_bound} 不是素数")

    primes = table.primes_upto(prime_bound)

    def run(rows):
        hist = np.zeros(prime_bound + 1, dtype=np.int64)
        for i in rows:
            if i > 0:
                # 同一行内的差互不相同，可直接按下标累加
                hist[primes[i] - primes[:i]] += 1
        return hist

    with log_elapsed(f"差谱 P={prime_bound}", log=logger):
        hist = parallel_reduce_chunks(run, np.add, range(primes.size), workers=workers)

    keys = np.flatnonzero(hist)
    return DiffSpectrum(
        prime_bound=prime_bound,
        counts={int(k): int(hist[k]) for k in keys},
    )
