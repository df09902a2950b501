"""
自相关分析
==========
C(k) = 1/n Σ a_j a_{j+k}

- cyclic：下标按模 n 取，C(k) = C(n−k)
- linear：只对重叠部分求和，除以 n−k
"""

from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple, Optional, Tuple

import numpy as np
from scipy import fft as sp_fft

from config import AUTOCORR_CONFIG
from sequences import SignedSequence
from utils.errors import InvalidArgumentError


class AutocorrMode(str, Enum):
    CYCLIC = "cyclic"
    LINEAR = "linear"


@dataclass(frozen=True)
class AutocorrResult:
    """自相关结果，values[k] 即 C(k)"""
    mode: AutocorrMode
    length: int
    values: Tuple[float, ...]

    def __len__(self) -> int:
        return len(self.values)


class PeakSidelobe(NamedTuple):
    peak: float
    max_sidelobe: float
    ratio: float


def _direct(a: np.ndarray, mode: AutocorrMode) -> np.ndarray:
    n = a.size
    if mode is AutocorrMode.CYCLIC:
        sums = np.array([np.dot(a, np.roll(a, -k)) for k in range(n)], dtype=np.float64)
        return sums / n
    sums = np.correlate(a, a, mode='full')[n - 1:].astype(np.float64)
    return sums / (n - np.arange(n))


def _fft(a: np.ndarray, mode: AutocorrMode) -> np.ndarray:
    n = a.size
    if mode is AutocorrMode.CYCLIC:
        spectrum = sp_fft.rfft(a)
        return sp_fft.irfft(spectrum * np.conj(spectrum), n) / n
    size = sp_fft.next_fast_len(2 * n - 1)
    spectrum = sp_fft.rfft(a, size)
    sums = sp_fft.irfft(spectrum * np.conj(spectrum), size)[:n]
    return sums / (n - np.arange(n))


def autocorrelation(seq: SignedSequence, mode: AutocorrMode = AutocorrMode.CYCLIC,
                    method: str = None) -> AutocorrResult:
    """
    计算 C(0..n−1)

    Args:
        seq: ±1 序列，长度至少为2
        mode: cyclic / linear
        method: direct / fft，None 时按长度选择

    Returns:
        AutocorrResult
    """
    mode = AutocorrMode(mode)
    n = len(seq)
    if n < 2:
        raise InvalidArgumentError(f"序列长度 {n} 小于2，无法计算自相关")

    if method is None:
        method = 'fft' if n > AUTOCORR_CONFIG['fft_threshold'] else 'direct'
    a = np.asarray(seq.values, dtype=np.float64)

    if method == 'direct':
        values = _direct(a, mode)
    elif method == 'fft':
        values = _fft(a, mode)
    else:
        raise InvalidArgumentError(f"未知的计算方法 '{method}'")

    return AutocorrResult(mode=mode, length=n, values=tuple(float(v) for v in values))


def peak_to_sidelobe(ac: AutocorrResult, max_lag: Optional[int] = None) -> PeakSidelobe:
    """
    峰值与最大旁瓣

    旁瓣窗口：cyclic 为 k ∈ [1, n−1]，linear 为 k ∈ [1, n−2]（最后一项只有一个乘积）；
    max_lag 可进一步收窄窗口。
    """
    if ac.length < 2:
        raise InvalidArgumentError(f"序列长度 {ac.length} 小于2")

    last = ac.length - 1 if ac.mode is AutocorrMode.CYCLIC else ac.length - 2
    if max_lag is not None:
        if int(max_lag) < 1:
            raise InvalidArgumentError(f"max_lag={max_lag} 必须不小于1")
        last = min(last, int(max_lag))

    peak = ac.values[0]
    window = np.abs(np.asarray(ac.values[1:last + 1]))
    max_sidelobe = float(window.max()) if window.size else 0.0
    return PeakSidelobe(peak=peak, max_sidelobe=max_sidelobe, ratio=max_sidelobe / peak)
