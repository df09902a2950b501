"""
复现报告
========
逐项对比计算结果与参考数值。已知笔误只标记为 erratum，不做静默修正；
无法确定计数口径的数值标记为 unresolved。
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List

from primes import PrimeTable
from partitions import (
    count_partitions,
    list_partitions,
    partition_series,
    coverage_exceptions,
    difference_spectrum,
    twin_prime_constant,
    EstimateParams,
)
from ellipse import EllipseParams, EllipseStatus, solve_ellipse
from sequences import parity_bipolar, mod4_bipolar
from utils.errors import OutOfRangeError
from . import reference_values as ref
from .autocorrelation import AutocorrMode, autocorrelation, peak_to_sidelobe
from .peak_report import primorial_peak_report

logger = logging.getLogger(__name__)

MATCH = "match"
MISMATCH = "mismatch"
ERRATUM = "erratum"
UNRESOLVED = "unresolved"
DERIVED = "derived"


@dataclass
class ReproductionCheck:
    """单项对比"""
    name: str
    item: str
    expected: str
    actual: str
    status: str

    def to_row(self) -> list:
        return [self.name, self.item, self.expected, self.actual, self.status]


@dataclass
class ReproductionReport:
    """复现报告"""
    checks: List[ReproductionCheck] = field(default_factory=list)
    summary: str = ""

    def by_status(self) -> Dict[str, int]:
        counts: Dict[str, int] = {}
        for check in self.checks:
            counts[check.status] = counts.get(check.status, 0) + 1
        return counts

    def find(self, name: str, item: str = None) -> List[ReproductionCheck]:
        return [c for c in self.checks if c.name == name and (item is None or c.item == item)]


def required_limit(include_large: bool = True) -> int:
    """生成报告所需的素数表上限"""
    largest = max(ref.PRIMORIAL_NEIGHBOURHOODS) if include_large else 90090
    return max(largest + max(ref.NEIGHBOURHOOD_OFFSETS), 2 * ref.SIDELOBE_SEQUENCE_LENGTH + 2)


def _row_text(values) -> str:
    return " ".join(str(v) for v in values)


def _compare(name: str, item: str, expected, actual) -> ReproductionCheck:
    status = MATCH if expected == actual else MISMATCH
    return ReproductionCheck(name, item, str(expected), str(actual), status)


class ReproductionBuilder:
    """报告生成器"""

    def __init__(self, table: PrimeTable, include_large: bool = True, workers: int = 1):
        """
        Args:
            table: 素数表
            include_large: 是否包含 1021020 附近的数值（需要约 1.03×10⁶ 的素数表）
            workers: 线程数
        """
        needed = required_limit(include_large)
        if table.limit < needed:
            raise OutOfRangeError(f"复现报告需要素数表上限至少 {needed}，当前 {table.limit}")
        self.table = table
        self.include_large = include_large
        self.workers = workers
        self.checks: List[ReproductionCheck] = []

    def build(self) -> ReproductionReport:
        self._check_counts()
        self._check_neighbourhoods()
        self._check_maximum()
        self._check_sidelobes()
        self._check_ellipses()
        self._check_coverage()
        self._check_partition_lists()
        self._check_differences()
        self._check_twin_constant()

        report = ReproductionReport(checks=self.checks)
        counts = report.by_status()
        report.summary = (
            f"共{len(self.checks)}项：一致{counts.get(MATCH, 0)}，不一致{counts.get(MISMATCH, 0)}，"
            f"笔误{counts.get(ERRATUM, 0)}，未解决{counts.get(UNRESOLVED, 0)}，推导{counts.get(DERIVED, 0)}"
        )
        logger.info(report.summary)
        return report

    # ========================================================================
    # g(n) 数表
    # ========================================================================

    def _check_counts(self):
        series = partition_series(4, 188, self.table)
        computed = {r.n: r.count for r in series}
        for n, g in ref.COUNTS_TO_188.items():
            name = "small_counts" if n in ref.SMALL_COUNTS else "counts_to_188"
            self.checks.append(_compare(name, f"n={n}", g, computed[n]))

    def _check_neighbourhoods(self):
        for center, values in ref.PRIMORIAL_NEIGHBOURHOODS.items():
            if center > 90090 and not self.include_large:
                continue
            report = primorial_peak_report(center, ref.NEIGHBOURHOOD_OFFSETS, self.table)
            computed = {center: report.center_count}
            computed.update({center + o: g for o, g in report.neighbors})
            for n, g in values.items():
                self.checks.append(_compare("primorial_neighbourhood", f"n={n}", g, computed[n]))
            self.checks.append(ReproductionCheck(
                "primorial_peak_ratio", f"center={center}", "> 1",
                f"{report.min_ratio:.4f}", MATCH if report.min_ratio > 1 else MISMATCH,
            ))

    def _check_maximum(self):
        series = partition_series(4, 1998, self.table, workers=self.workers)
        best = max(series, key=lambda r: (r.count, -r.n))
        self.checks.append(_compare(
            "max_below_2000", "argmax",
            _row_text([ref.MAX_BELOW_2000['n'], ref.MAX_BELOW_2000['g']]),
            _row_text([best.n, best.count]),
        ))

    # ========================================================================
    # 自相关
    # ========================================================================

    def _sidelobe_check(self, item: str, n_max: int, mode: AutocorrMode, half_lags: bool = False):
        series = partition_series(4, n_max, self.table, workers=self.workers)
        seq = parity_bipolar([r.count for r in series], start_n=4)
        ac = autocorrelation(seq, mode)
        result = peak_to_sidelobe(ac, max_lag=len(seq) // 2 if half_lags else None)
        ok = result.ratio < ref.SIDELOBE_THRESHOLD
        self.checks.append(ReproductionCheck(
            "sidelobe", item, f"< {ref.SIDELOBE_THRESHOLD}", f"{result.ratio:.6f}",
            MATCH if ok else MISMATCH,
        ))

    def _check_sidelobes(self):
        range_end = ref.SIDELOBE_RANGE_END
        length_end = 2 * ref.SIDELOBE_SEQUENCE_LENGTH + 2
        self._sidelobe_check(f"range[4;{range_end}] cyclic", range_end, AutocorrMode.CYCLIC)
        self._sidelobe_check(f"range[4;{range_end}] linear k<=n/2", range_end, AutocorrMode.LINEAR, True)
        self._sidelobe_check(f"length{ref.SIDELOBE_SEQUENCE_LENGTH} cyclic", length_end, AutocorrMode.CYCLIC)
        self._sidelobe_check(
            f"length{ref.SIDELOBE_SEQUENCE_LENGTH} linear k<=n/2", length_end, AutocorrMode.LINEAR, True,
        )

    # ========================================================================
    # 椭圆
    # ========================================================================

    def _check_ellipse_table(self, name: str, k: int, rows):
        params = EllipseParams()
        for row in rows:
            two_n = row[0]
            outcome = solve_ellipse(two_n, k, self.table, params)
            if outcome.status is EllipseStatus.UNDEFINED:
                # 2n 是 k 的倍数，按规则不应出现在表中
                self.checks.append(ReproductionCheck(
                    name, f"2n={two_n}", _row_text(row[1:]), "undefined", ERRATUM,
                ))
                continue
            point = outcome.point
            actual = (point.p, point.q, point.m, point.s) if point else None
            self.checks.append(_compare(name, f"2n={two_n}", _row_text(row[1:]),
                                        _row_text(actual) if actual else outcome.status.value))

        # 表中缺失但有定义的 2n
        listed = {row[0] for row in rows}
        for two_n in range(4, max(listed) + 1, 2):
            if two_n in listed:
                continue
            outcome = solve_ellipse(two_n, k, self.table, params)
            if outcome.status is EllipseStatus.FOUND:
                p = outcome.point
                self.checks.append(ReproductionCheck(
                    name, f"2n={two_n}", "-", _row_text((p.p, p.q, p.m, p.s)), DERIVED,
                ))

    def _check_ellipses(self):
        self._check_ellipse_table("ellipse_k7", 7, ref.ELLIPSE_K7)
        self._check_ellipse_table("ellipse_k3", 3, ref.ELLIPSE_K3)

        m_column = [row[3] for row in ref.ELLIPSE_K7]
        seq = mod4_bipolar(m_column)
        self.checks.append(_compare("mod4_seed", "k=7", _row_text(ref.MOD4_SEED_K7), _row_text(seq.values)))

    # ========================================================================
    # 覆盖与分拆列表
    # ========================================================================

    def _check_coverage(self):
        for n, expected in ref.COVERAGE_EXCEPTIONS.items():
            actual = coverage_exceptions(n, self.table)
            if actual == expected:
                status = MATCH
            elif set(expected) <= set(actual):
                # 参考列表漏列了部分例外
                status = ERRATUM
            else:
                status = MISMATCH
            self.checks.append(ReproductionCheck(
                "coverage", f"n={n}", _row_text(expected) or "-", _row_text(actual) or "-", status,
            ))

    def _check_partition_lists(self):
        for n, published in ((30, ref.PARTITIONS_30), (210, ref.PARTITIONS_210)):
            computed = {(q, p) for p, q in list_partitions(n, self.table).pairs}
            for pair in published:
                if pair in computed:
                    self.checks.append(ReproductionCheck(
                        f"partitions_{n}", _row_text(pair), _row_text(pair), _row_text(pair), MATCH,
                    ))
                    continue
                larger = pair[0]
                fixed = next((c for c in computed if c[0] == larger), None)
                self.checks.append(ReproductionCheck(
                    f"partitions_{n}", _row_text(pair), _row_text(pair),
                    _row_text(fixed) if fixed else "-", ERRATUM if fixed else MISMATCH,
                ))
            self.checks.append(_compare(
                f"partitions_{n}", "count", len(published), count_partitions(n, self.table).count,
            ))

    # ========================================================================
    # 差谱与常数
    # ========================================================================

    def _check_differences(self):
        spectrum = difference_spectrum(ref.DIFFERENCE_BOUND, self.table, workers=self.workers)
        for diff, expected in ref.DIFFERENCE_COUNTS.items():
            actual = spectrum.count(diff)
            status = MATCH if actual == expected else UNRESOLVED
            self.checks.append(ReproductionCheck(
                "difference_counts", f"diff={diff}", str(expected), str(actual), status,
            ))

        ratio = spectrum.count(6) / spectrum.count(2)
        self.checks.append(ReproductionCheck(
            "difference_ratio", "diff6/diff2", "[1.5;2.5]", f"{ratio:.4f}",
            MATCH if 1.5 <= ratio <= 2.5 else MISMATCH,
        ))

    def _check_twin_constant(self):
        expected = EstimateParams().twin_prime_constant
        actual = twin_prime_constant(self.table)
        # 截断误差约 1/(limit·ln limit)
        tolerance = 1e-4
        self.checks.append(ReproductionCheck(
            "twin_prime_constant", f"limit={self.table.limit}", f"{expected:.10f}", f"{actual:.10f}",
            MATCH if abs(actual - expected) < tolerance else MISMATCH,
        ))


def build_reproduction_report(table: PrimeTable, include_large: bool = True,
                              workers: int = 1) -> ReproductionReport:
    """生成复现报告"""
    return ReproductionBuilder(table, include_large=include_large, workers=workers).build()
