"""
差谱峰值的周期性
================
差为6的倍数的素数对更多，差谱的局部极大应集中在6的倍数上。
只报告比例，不做断言；基线为偶数中6的倍数所占比例 1/3。
"""

from dataclasses import dataclass
from typing import List

from partitions import DiffSpectrum

BASELINE = 1 / 3


@dataclass(frozen=True)
class PeriodicityReport:
    local_maxima: List[int]
    at_multiples_of_6: int

    @property
    def fraction(self) -> float:
        return self.at_multiples_of_6 / len(self.local_maxima) if self.local_maxima else 0.0

    @property
    def baseline(self) -> float:
        return BASELINE


def spectrum_peak_periodicity(spectrum: DiffSpectrum) -> PeriodicityReport:
    """找出偶数差上的严格局部极大（两端除外）"""
    even = spectrum.even_only()
    if not even.counts:
        return PeriodicityReport(local_maxima=[], at_multiples_of_6=0)

    top = max(even.counts)
    maxima = [
        n for n in range(4, top - 1, 2)
        if even.count(n) > even.count(n - 2) and even.count(n) > even.count(n + 2)
    ]
    return PeriodicityReport(
        local_maxima=maxima,
        at_multiples_of_6=sum(1 for n in maxima if n % 6 == 0),
    )
