"""
分拆覆盖检查
============
区间 [n/2, n−2] 内的素数 q 是否都作为较大分量出现在某个分拆中
"""

from typing import List

from primes import PrimeTable
from utils.errors import OutOfRangeError
from utils.helpers import require_even


def coverage_exceptions(n: int, table: PrimeTable) -> List[int]:
    """
    返回 [n/2, n−2] 内使 n−q 不是素数的素数 q（升序）

    Args:
        n: 偶数，n ≥ 6
        table: 素数表
    """
    n = require_even(n, 6)
    if n > table.limit:
        raise OutOfRangeError(f"n={n} 超出素数表上限 {table.limit}")

    candidates = table.primes_between(n // 2, n - 2)
    missing = candidates[~table.membership[n - candidates]]
    return missing.tolist()
