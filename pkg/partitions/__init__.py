"""
分拆模块
========
g(n) 计数、解析估计、哥德巴赫半径、覆盖检查与素数差谱
"""

from .partition_counter import (
    PartitionRecord,
    count_partitions,
    list_partitions,
    partition_series,
    brute_force_counts,
)
from .estimators import (
    EstimateParams,
    estimate_logsum,
    estimate_hardy_littlewood,
    singular_series,
    twin_prime_constant,
)
from .radius import (
    RadiusRecord,
    goldbach_radius,
    radius_series,
)
from .coverage import coverage_exceptions
from .difference_spectrum import (
    DiffSpectrum,
    difference_spectrum,
)

__all__ = [
    'PartitionRecord',
    'count_partitions',
    'list_partitions',
    'partition_series',
    'brute_force_counts',
    'EstimateParams',
    'estimate_logsum',
    'estimate_hardy_littlewood',
    'singular_series',
    'twin_prime_constant',
    'RadiusRecord',
    'goldbach_radius',
    'radius_series',
    'coverage_exceptions',
    'DiffSpectrum',
    'difference_spectrum',
]
