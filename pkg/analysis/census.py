"""
不等式统计
==========
统计 g(mk) > g(mk+2) 对多少个 k 成立。小 n 时该不等式并不总成立（如 g(12)=1 < g(14)=2），
因此只报告违例，不做断言。
"""

import logging
from dataclasses import dataclass, field
from typing import List, Tuple

from primes import PrimeTable
from partitions import count_partitions
from utils.errors import InvalidArgumentError, OutOfRangeError
from utils.helpers import log_elapsed
from utils.parallel import parallel_map_chunks

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CensusRow:
    k: int
    n: int
    g_n: int
    g_n_plus_2: int

    @property
    def holds(self) -> bool:
        return self.g_n > self.g_n_plus_2


@dataclass
class CensusResult:
    """统计结果"""
    modulus: int
    holds: int
    total: int
    violations: List[int] = field(default_factory=list)
    rows: List[CensusRow] = field(default_factory=list)

    @property
    def fraction(self) -> float:
        return self.holds / self.total if self.total else 0.0


def inequality_census(modulus: int, k_range: Tuple[int, int], table: PrimeTable,
                      workers: int = 1) -> CensusResult:
    """
    统计 g(m·k) > g(m·k+2)

    Args:
        modulus: 偶数 m（6, 30, 210, ...）
        k_range: 闭区间 (k_min, k_max)
        table: 素数表，上限不小于 m·k_max + 2
        workers: 线程数
    """
    modulus = int(modulus)
    k_min, k_max = (int(x) for x in k_range)
    if modulus < 2 or modulus % 2:
        raise InvalidArgumentError(f"modulus={modulus} 必须为正偶数")
    if k_min < 1 or k_min > k_max:
        raise InvalidArgumentError(f"k 区间 [{k_min}, {k_max}] 不合法")
    if modulus * k_min < 4:
        raise InvalidArgumentError(f"m·k_min={modulus * k_min} 小于4")
    if modulus * k_max + 2 > table.limit:
        raise OutOfRangeError(f"m·k_max+2={modulus * k_max + 2} 超出素数表上限 {table.limit}")

    def run(ks):
        rows = []
        for k in ks:
            n = modulus * k
            rows.append(CensusRow(
                k=k,
                n=n,
                g_n=count_partitions(n, table).count,
                g_n_plus_2=count_partitions(n + 2, table).count,
            ))
        return rows

    with log_elapsed(f"不等式统计 m={modulus}, k∈[{k_min}, {k_max}]", log=logger):
        rows = parallel_map_chunks(run, range(k_min, k_max + 1), workers=workers, min_chunk=64)

    violations = [row.k for row in rows if not row.holds]
    return CensusResult(
        modulus=modulus,
        holds=len(rows) - len(violations),
        total=len(rows),
        violations=violations,
        rows=rows,
    )
