"""
素数阶乘
========
前 i 个素数之积：2, 6, 30, 210, 2310, 30030, ...
"""

import math

import numpy as np

from utils.errors import InvalidArgumentError, PrimorialOverflowError
from .prime_table import sieve_upto

WORD_MAX = int(np.iinfo(np.int64).max)


def _nth_prime_bound(i: int) -> int:
    """第 i 个素数的上界（Rosser 定理）"""
    if i < 6:
        return 13
    return int(i * (math.log(i) + math.log(math.log(i)))) + 1


def primorial(i: int) -> int:
    """
    前 i 个素数之积

    Args:
        i: 素数个数，至少为1

    Raises:
        PrimorialOverflowError: 结果超出 int64
    """
    i = int(i)
    if i < 1:
        raise InvalidArgumentError(f"i={i} 必须不小于1")

    # int64 最多容纳前15个素数之积，再大就不必筛了
    if i > 15:
        raise PrimorialOverflowError(f"primorial({i}) 超出机器字长")

    primes = sieve_upto(_nth_prime_bound(i)).ordered_primes[:i]
    result = 1
    for p in primes.tolist():
        result *= p
        if result > WORD_MAX:
            raise PrimorialOverflowError(f"primorial({i}) 超出机器字长 {WORD_MAX}")
    return result
