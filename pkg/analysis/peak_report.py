"""
素数阶乘附近的峰值
==================
n 含的小素因子越多，g(n) 越大；素数阶乘的倍数处形成局部极大
"""

from dataclasses import dataclass, field
from typing import Iterable, List, Tuple

from primes import PrimeTable
from partitions import count_partitions
from utils.errors import InvalidArgumentError
from utils.helpers import require_even


@dataclass
class PeakReport:
    """中心值与邻居的对比"""
    center_n: int
    center_count: int
    neighbors: List[Tuple[int, int]] = field(default_factory=list)   # (offset, g)
    min_ratio: float = 0.0

    @property
    def max_neighbor(self) -> int:
        return max(g for _, g in self.neighbors)


def _normalize_offsets(offsets: Iterable[int]) -> List[int]:
    result = sorted({int(o) for o in offsets} - {0})
    odd = [o for o in result if o % 2]
    if odd:
        raise InvalidArgumentError(f"偏移量必须为偶数: {odd}")
    if not result:
        raise InvalidArgumentError("至少需要一个非零偏移量")
    return result


def primorial_peak_report(center_n: int, offsets: Iterable[int], table: PrimeTable) -> PeakReport:
    """
    计算中心与各偏移处的 g

    Args:
        center_n: 偶数中心
        offsets: 偶数偏移量，0 会被忽略
        table: 素数表，覆盖 center_n + max(offsets)

    Returns:
        PeakReport，min_ratio = g(center) / 邻居中的最大 g
    """
    center_n = require_even(center_n, 4, "center_n")
    offsets = _normalize_offsets(offsets)

    center_count = count_partitions(center_n, table).count
    neighbors = [(o, count_partitions(center_n + o, table).count) for o in offsets]

    report = PeakReport(center_n=center_n, center_count=center_count, neighbors=neighbors)
    report.min_ratio = center_count / report.max_neighbor
    return report
