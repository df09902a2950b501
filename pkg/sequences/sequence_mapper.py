"""
序列映射
========
- parity_bits：偶数→0，奇数→1
- parity_bipolar：偶数→−1，奇数→+1
- mod4_bipolar：≡1 (mod 4)→+1，≡3 (mod 4)→−1

start_n/step 只用于输出时标注原始的 n，不参与计算；
位置不等距时（椭圆序列会跳过无定义的 2n）改用 positions 显式给出。
"""

from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple

from utils.errors import InvalidArgumentError


def _check_positions(values: Tuple[int, ...], positions: Optional[Tuple[int, ...]]):
    if positions is not None and len(positions) != len(values):
        raise InvalidArgumentError(f"positions 长度 {len(positions)} 与序列长度 {len(values)} 不一致")


@dataclass(frozen=True)
class BitSequence:
    """0/1 序列"""
    values: Tuple[int, ...]
    start_n: int = 0
    step: int = 2
    positions: Optional[Tuple[int, ...]] = None

    def __post_init__(self):
        if len(self.values) < 1:
            raise InvalidArgumentError("序列不能为空")
        if any(v not in (0, 1) for v in self.values):
            raise InvalidArgumentError("BitSequence 只能包含 0 和 1")
        _check_positions(self.values, self.positions)

    def __len__(self) -> int:
        return len(self.values)

    def labels(self) -> List[int]:
        if self.positions is not None:
            return list(self.positions)
        return [self.start_n + i * self.step for i in range(len(self.values))]

    def to_bipolar(self) -> "SignedSequence":
        return SignedSequence(tuple(2 * v - 1 for v in self.values), self.start_n, self.step, self.positions)


@dataclass(frozen=True)
class SignedSequence:
    """±1 序列，自相关的输入"""
    values: Tuple[int, ...]
    start_n: int = 0
    step: int = 2
    positions: Optional[Tuple[int, ...]] = None

    def __post_init__(self):
        if len(self.values) < 1:
            raise InvalidArgumentError("序列不能为空")
        if any(v not in (-1, 1) for v in self.values):
            raise InvalidArgumentError("SignedSequence 只能包含 -1 和 +1")
        _check_positions(self.values, self.positions)

    def __len__(self) -> int:
        return len(self.values)

    def labels(self) -> List[int]:
        if self.positions is not None:
            return list(self.positions)
        return [self.start_n + i * self.step for i in range(len(self.values))]

    def to_bits(self) -> BitSequence:
        return BitSequence(tuple((v + 1) // 2 for v in self.values), self.start_n, self.step, self.positions)


def _as_ints(series: Iterable[int]) -> List[int]:
    values = [int(x) for x in series]
    if not values:
        raise InvalidArgumentError("输入序列为空")
    return values


def parity_bits(series: Sequence[int], start_n: int = 0, step: int = 2) -> BitSequence:
    """按奇偶映射为 0/1"""
    values = _as_ints(series)
    if any(x < 0 for x in values):
        raise InvalidArgumentError("输入序列含负数")
    return BitSequence(tuple(x % 2 for x in values), start_n, step)


def parity_bipolar(series: Sequence[int], start_n: int = 0, step: int = 2) -> SignedSequence:
    """按奇偶映射为 ±1"""
    return parity_bits(series, start_n, step).to_bipolar()


def mod4_bipolar(m_series: Sequence[int], start_n: int = 0, step: int = 2,
                 positions: Optional[Sequence[int]] = None) -> SignedSequence:
    """
    按模4余数映射为 ±1

    Args:
        m_series: 奇数序列
        positions: 每一项对应的 2n，给出时覆盖 start_n/step

    Raises:
        InvalidArgumentError: 含偶数（映射无定义）
    """
    values = _as_ints(m_series)
    evens = [x for x in values if x % 2 == 0]
    if evens:
        raise InvalidArgumentError(f"模4映射要求奇数输入，发现偶数 {evens[0]}")
    if positions is not None:
        positions = tuple(int(x) for x in positions)
    return SignedSequence(tuple(1 if x % 4 == 1 else -1 for x in values), start_n, step, positions)
