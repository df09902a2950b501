"""
分拆数的解析估计
================
- 对数和估计：Σ_{m=3}^{⌊n/2⌋} 1/(ln m · ln(n−m))，对所有整数 m 求和
- Hardy-Littlewood 修正估计：2π₂ ∏_{p|n, p≥3} (p−1)/(p−2) · n/ln²n
  该式估计的是有序表示数，与 g(n) 比较时需除以2
"""

from dataclasses import dataclass

import numpy as np

from config import ESTIMATE_CONFIG
from primes import PrimeTable, odd_prime_factors
from utils.errors import InvalidArgumentError
from utils.helpers import require_even, ln_squared


@dataclass(frozen=True)
class EstimateParams:
    """估计参数"""
    twin_prime_constant: float = ESTIMATE_CONFIG['twin_prime_constant']


def estimate_logsum(n: int) -> float:
    """
    对数和估计

    Args:
        n: 偶数，n ≥ 6
    """
    n = require_even(n, 6)
    m = np.arange(3, n // 2 + 1, dtype=np.float64)
    terms = 1.0 / (np.log(m) * np.log(n - m))
    return float(np.sum(terms))


def singular_series(n: int, table: PrimeTable) -> float:
    """∏_{p|n, p 奇素数} (p−1)/(p−2)，n 为2的幂时为1"""
    factor = 1.0
    for p in odd_prime_factors(n, table):
        factor *= (p - 1) / (p - 2)
    return factor


def estimate_hardy_littlewood(n: int, table: PrimeTable, params: EstimateParams = None) -> float:
    """
    Hardy-Littlewood 修正估计（有序表示数）

    Args:
        n: 偶数，n ≥ 6
        table: 用于试除分解的素数表，上限不小于 √n
        params: 估计参数
    """
    params = params or EstimateParams()
    n = require_even(n, 6)
    return 2.0 * params.twin_prime_constant * singular_series(n, table) * n / ln_squared(n)


def twin_prime_constant(table: PrimeTable) -> float:
    """
    截断乘积 ∏_{3 ≤ p ≤ limit} (1 − 1/(p−1)²)

    截断误差约为 1/(limit · ln limit)
    """
    primes = table.ordered_primes
    odd = primes[primes > 2].astype(np.float64)
    if odd.size == 0:
        raise InvalidArgumentError(f"素数表上限 {table.limit} 内没有奇素数")
    return float(np.exp(np.sum(np.log1p(-1.0 / (odd - 1.0) ** 2))))
