"""
哥德巴赫椭圆
============
给定偶数 2n 和奇数 k，求最小的奇数 m 使 2n−m 与 2n+km 同为素数。
特征数为 2n, 2n−m, 2n+km, 4n+(k−1)m；k=1 时退化为圆（两素数之和为 2·2n）。

gcd(2n, k) > 1 时 2n+km 恒含公因子，椭圆无定义。
"""

import math
import logging
from dataclasses import dataclass
from enum import Enum
from typing import List, Optional

from config import ELLIPSE_CONFIG
from primes import PrimeTable
from utils.errors import InvalidArgumentError, OutOfRangeError
from utils.helpers import require_even, ln_squared
from utils.parallel import parallel_map_chunks

logger = logging.getLogger(__name__)


class EllipseStatus(Enum):
    """搜索状态"""
    FOUND = "found"
    UNDEFINED = "undefined"      # gcd(2n, k) > 1
    EXHAUSTED = "exhausted"      # m_max 内无解


@dataclass(frozen=True)
class EllipseParams:
    """
    搜索参数

    Attributes:
        m_max: m 的上限，None 时取 ⌈m_max_factor·k·ln²(2n)⌉
        m_max_factor: 默认上限的系数
        coprime_m: 是否跳过 gcd(m, k) > 1 的候选
    """
    m_max: Optional[int] = None
    m_max_factor: float = ELLIPSE_CONFIG['m_max_factor']
    coprime_m: bool = ELLIPSE_CONFIG['coprime_m']


@dataclass(frozen=True)
class EllipsePoint:
    """椭圆上的一个解"""
    two_n: int
    k: int
    m: int
    p: int
    q: int
    s: int

    def to_dict(self) -> dict:
        return {
            'two_n': self.two_n,
            'k': self.k,
            'm': self.m,
            'p': self.p,
            'q': self.q,
            's': self.s,
        }


@dataclass(frozen=True)
class EllipseOutcome:
    """单个 2n 的搜索结果"""
    two_n: int
    k: int
    status: EllipseStatus
    point: Optional[EllipsePoint] = None


def default_m_max(two_n: int, k: int, factor: float = None) -> int:
    """⌈factor·k·ln²(2n)⌉"""
    factor = ELLIPSE_CONFIG['m_max_factor'] if factor is None else factor
    return int(math.ceil(factor * k * ln_squared(two_n)))


def _check_k(k: int) -> int:
    k = int(k)
    if k < 1:
        raise InvalidArgumentError(f"k={k} 必须为正奇数")
    if k % 2 == 0:
        raise InvalidArgumentError(f"k={k} 是偶数，2n+km 永远是偶数")
    return k


def _effective_m_max(two_n: int, k: int, params: EllipseParams) -> int:
    m_max = params.m_max if params.m_max is not None else default_m_max(two_n, k, params.m_max_factor)
    if m_max < 1:
        raise InvalidArgumentError(f"m_max={m_max} 必须不小于1")
    # p = 2n − m ≥ 3
    return min(int(m_max), two_n - 3)


def required_limit(two_n: int, k: int, params: EllipseParams = None) -> int:
    """搜索 2n 所需的素数表上限"""
    params = params or EllipseParams()
    return two_n + k * max(_effective_m_max(two_n, k, params), 1)


def solve_ellipse(two_n: int, k: int, table: PrimeTable, params: EllipseParams = None) -> EllipseOutcome:
    """
    求最小 m

    Args:
        two_n: 偶数，2n ≥ 4
        k: 奇数，k ≥ 1
        table: 素数表，上限不小于 2n + k·m_max
        params: 搜索参数

    Returns:
        EllipseOutcome
    """
    params = params or EllipseParams()
    two_n = require_even(two_n, 4, "two_n")
    k = _check_k(k)

    if math.gcd(two_n, k) > 1:
        return EllipseOutcome(two_n=two_n, k=k, status=EllipseStatus.UNDEFINED)

    m_max = _effective_m_max(two_n, k, params)
    needed = two_n + k * max(m_max, 1)
    if needed > table.limit:
        raise OutOfRangeError(f"2n={two_n}, k={k} 需要素数表上限至少 {needed}，当前 {table.limit}")

    membership = table.membership
    for m in range(1, m_max + 1, 2):
        if params.coprime_m and math.gcd(m, k) > 1:
            continue
        p = two_n - m
        q = two_n + k * m
        if membership[p] and membership[q]:
            point = EllipsePoint(two_n=two_n, k=k, m=m, p=p, q=q, s=2 * two_n + (k - 1) * m)
            return EllipseOutcome(two_n=two_n, k=k, status=EllipseStatus.FOUND, point=point)

    logger.debug("2n=%d, k=%d 在 m ≤ %d 内无解", two_n, k, m_max)
    return EllipseOutcome(two_n=two_n, k=k, status=EllipseStatus.EXHAUSTED)


def ellipse_point(two_n: int, k: int, table: PrimeTable, params: EllipseParams = None) -> Optional[EllipsePoint]:
    """最小 m 对应的椭圆点；无定义或搜索耗尽时返回 None"""
    return solve_ellipse(two_n, k, table, params).point


def ellipse_series(two_n_min: int, two_n_max: int, k: int, table: PrimeTable,
                   params: EllipseParams = None, workers: int = 1) -> List[EllipsePoint]:
    """
    区间内逐行生成椭圆点，跳过无定义和无解的 2n

    Returns:
        按 2n 升序的 EllipsePoint 列表
    """
    params = params or EllipseParams()
    two_n_min = require_even(two_n_min, 4, "two_n_min")
    two_n_max = require_even(two_n_max, 4, "two_n_max")
    k = _check_k(k)
    if two_n_min > two_n_max:
        raise InvalidArgumentError(f"two_n_min={two_n_min} 大于 two_n_max={two_n_max}")

    def run(chunk):
        return [solve_ellipse(two_n, k, table, params) for two_n in chunk]

    outcomes = parallel_map_chunks(run, range(two_n_min, two_n_max + 1, 2), workers=workers)

    exhausted = [o.two_n for o in outcomes if o.status is EllipseStatus.EXHAUSTED]
    if exhausted:
        logger.warning("k=%d 时以下 2n 搜索耗尽: %s", k, exhausted)

    return [o.point for o in outcomes if o.status is EllipseStatus.FOUND]
