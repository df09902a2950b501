"""
分析模块
========
自相关、峰值报告、不等式统计、差谱周期性与复现报告
"""

from .autocorrelation import (
    AutocorrMode,
    AutocorrResult,
    PeakSidelobe,
    autocorrelation,
    peak_to_sidelobe,
)
from .peak_report import (
    PeakReport,
    primorial_peak_report,
)
from .census import (
    CensusRow,
    CensusResult,
    inequality_census,
)
from .periodicity import (
    PeriodicityReport,
    spectrum_peak_periodicity,
)
from .reproduction import (
    ReproductionCheck,
    ReproductionReport,
    ReproductionBuilder,
    build_reproduction_report,
    required_limit as reproduction_required_limit,
)

__all__ = [
    'AutocorrMode',
    'AutocorrResult',
    'PeakSidelobe',
    'autocorrelation',
    'peak_to_sidelobe',
    'PeakReport',
    'primorial_peak_report',
    'CensusRow',
    'CensusResult',
    'inequality_census',
    'PeriodicityReport',
    'spectrum_peak_periodicity',
    'ReproductionCheck',
    'ReproductionReport',
    'ReproductionBuilder',
    'build_reproduction_report',
    'reproduction_required_limit',
]
