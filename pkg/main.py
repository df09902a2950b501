"""
哥德巴赫序列工具
================

使用方式：
    # g(n)
    python main.py count --n 10

    # g(n) 序列（作图数据）
    python main.py series --from 4 --to 500

    # 椭圆表
    python main.py ellipse --k 7 --from 4 --to 34

    # 自相关
    python main.py autocorr --source parity --from 4 --to 2000 --mode cyclic

    # 复现报告
    python main.py reproduce
"""

import os
import sys
import logging
import argparse
from typing import Callable, Dict, List, Optional, Tuple

# 添加路径
sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from pydantic import ValidationError

from config import PEAK_CONFIG, CENSUS_CONFIG
from settings import ToolkitSettings
from primes import PrimeTable, sieve_upto
from partitions import (
    count_partitions,
    list_partitions,
    partition_series,
    estimate_logsum,
    estimate_hardy_littlewood,
    radius_series,
    coverage_exceptions,
    difference_spectrum,
    twin_prime_constant,
)
from ellipse import EllipseParams, ellipse_series, required_limit as ellipse_required_limit
from sequences import SignedSequence, parity_bits, parity_bipolar, mod4_bipolar
from analysis import (
    AutocorrMode,
    autocorrelation,
    peak_to_sidelobe,
    primorial_peak_report,
    inequality_census,
    spectrum_peak_periodicity,
    build_reproduction_report,
    reproduction_required_limit,
)
from exporter import OutputTable, write_output
from utils import GoldbachError, InvalidArgumentError, OutOfRangeError, parse_int_list, ln_squared

logger = logging.getLogger("goldbach")


class GoldbachToolkit:
    """哥德巴赫序列工具"""

    def __init__(self, settings: ToolkitSettings = None):
        """
        初始化

        Args:
            settings: 运行配置
        """
        self.settings = settings or ToolkitSettings()
        self._table: Optional[PrimeTable] = None

    def table(self, needed: int) -> PrimeTable:
        """
        获取覆盖 needed 的素数表

        指定 --sieve-limit 时按指定值筛，不够用直接报错；否则按需推断并缓存。
        """
        needed = max(int(needed), 2)
        override = self.settings.sieve_limit
        if override is not None:
            if override < needed:
                raise OutOfRangeError(f"--sieve-limit={override} 不足，本次计算需要至少 {needed}")
            needed = override

        if self._table is None or self._table.limit < needed:
            self._table = sieve_upto(needed)
        return self._table

    @property
    def workers(self) -> int:
        return self.settings.workers

    # ========================================================================
    # 分拆
    # ========================================================================

    def count(self, n: int) -> OutputTable:
        record = count_partitions(n, self.table(n))
        out = OutputTable(["n", "g"])
        out.add(record.n, record.count)
        return out

    def list(self, n: int) -> OutputTable:
        record = list_partitions(n, self.table(n))
        out = OutputTable(["n", "p", "q"])
        for p, q in record.pairs:
            out.add(record.n, p, q)
        return out

    def series(self, n_min: int, n_max: int) -> OutputTable:
        out = OutputTable(["n", "g"])
        for record in partition_series(n_min, n_max, self.table(n_max), workers=self.workers):
            out.add(record.n, record.count)
        return out

    def estimate(self, n_min: int, n_max: int) -> OutputTable:
        """对数和估计与 Hardy-Littlewood 估计并列，后者除以2后与 g(n) 比较"""
        table = self.table(n_max)
        out = OutputTable(["n", "g", "logsum", "hardy_littlewood", "hl_unordered", "hl_ratio", "logsum_ratio"])
        for record in partition_series(n_min, n_max, table, workers=self.workers):
            n = record.n
            logsum = estimate_logsum(n)
            hl = estimate_hardy_littlewood(n, table)
            out.add(n, record.count, logsum, hl, hl / 2, (hl / 2) / record.count,
                    logsum * 2 * ln_squared(n) / n)
        return out

    def radius(self, n_min: int, n_max: int) -> OutputTable:
        out = OutputTable(["n", "radius", "p", "q"])
        for record in radius_series(n_min, n_max, self.table(2 * n_max)):
            out.add(record.n, record.radius, record.p, record.q)
        return out

    def coverage(self, n: int) -> OutputTable:
        out = OutputTable(["n", "q"])
        for q in coverage_exceptions(n, self.table(n)):
            out.add(n, q)
        return out

    def diff(self, bound: int, include_odd: bool = False, periodicity: bool = False) -> OutputTable:
        spectrum = difference_spectrum(bound, self.table(bound), workers=self.workers)
        if periodicity:
            report = spectrum_peak_periodicity(spectrum)
            out = OutputTable(["local_maxima", "at_multiples_of_6", "fraction", "baseline"])
            out.add(len(report.local_maxima), report.at_multiples_of_6, report.fraction, report.baseline)
            return out
        if not include_odd:
            spectrum = spectrum.even_only()
        out = OutputTable(["n", "count"])
        for n, c in spectrum.items():
            out.add(n, c)
        return out

    def twin_constant(self, bound: int) -> OutputTable:
        out = OutputTable(["bound", "value"])
        out.add(bound, twin_prime_constant(self.table(bound)))
        return out

    # ========================================================================
    # 椭圆与序列
    # ========================================================================

    def _ellipse_points(self, k: int, lo: int, hi: int, params: EllipseParams):
        if k < 1 or k % 2 == 0:
            raise InvalidArgumentError(f"k={k} 必须为正奇数")
        needed = ellipse_required_limit(hi, k, params) if hi >= 4 else 2
        return ellipse_series(lo, hi, k, self.table(needed), params, workers=self.workers)

    def ellipse(self, k: int, lo: int, hi: int, params: EllipseParams) -> OutputTable:
        out = OutputTable(["two_n", "p", "q", "m", "s"])
        for point in self._ellipse_points(k, lo, hi, params):
            out.add(point.two_n, point.p, point.q, point.m, point.s)
        return out

    def _sequence(self, source: str, lo: int, hi: int, k: int, params: EllipseParams
                  ) -> Tuple[SignedSequence, OutputTable]:
        """构造 ±1 序列及其明细表"""
        if source == "parity":
            records = partition_series(lo, hi, self.table(hi), workers=self.workers)
            seq = parity_bipolar([r.count for r in records], start_n=lo)
            detail = OutputTable(["n", "g", "value"])
            for record, value in zip(records, seq.values):
                detail.add(record.n, record.count, value)
            return seq, detail

        points = self._ellipse_points(k, lo, hi, params)
        if not points:
            raise InvalidArgumentError(f"k={k} 在 [{lo}, {hi}] 内没有椭圆点")
        seq = mod4_bipolar([p.m for p in points], positions=[p.two_n for p in points])
        detail = OutputTable(["two_n", "m", "value"])
        for point, value in zip(points, seq.values):
            detail.add(point.two_n, point.m, value)
        return seq, detail

    def seq(self, source: str, lo: int, hi: int, k: int, params: EllipseParams,
            bits: bool = False) -> OutputTable:
        _, detail = self._sequence(source, lo, hi, k, params)
        if bits:
            if source != "parity":
                raise InvalidArgumentError("--bits 只适用于 parity 序列")
            values = parity_bits([row[1] for row in detail.rows]).values
            detail.rows = [(row[0], row[1], v) for row, v in zip(detail.rows, values)]
        return detail

    def autocorr(self, source: str, lo: int, hi: int, k: int, params: EllipseParams,
                 mode: str = "cyclic", method: str = None, summary: bool = False,
                 max_lag: int = None) -> OutputTable:
        if max_lag is not None and max_lag < 1:
            raise InvalidArgumentError(f"--max-lag={max_lag} 必须不小于1")
        seq, _ = self._sequence(source, lo, hi, k, params)
        ac = autocorrelation(seq, AutocorrMode(mode), method=method)
        if summary:
            result = peak_to_sidelobe(ac, max_lag=max_lag)
            out = OutputTable(["peak", "max_sidelobe", "ratio"])
            out.add(result.peak, result.max_sidelobe, result.ratio)
            return out

        out = OutputTable(["k_lag", "c_value"])
        last = len(ac.values) - 1 if max_lag is None else min(max_lag, len(ac.values) - 1)
        for lag in range(last + 1):
            out.add(lag, ac.values[lag])
        return out

    # ========================================================================
    # 峰值、统计与报告
    # ========================================================================

    def peaks(self, center: int, offsets: List[int]) -> OutputTable:
        needed = center + max(max(offsets), 0)
        report = primorial_peak_report(center, offsets, self.table(needed))
        rows = [(0, report.center_count)] + list(report.neighbors)
        out = OutputTable(["n", "offset", "g", "center_ratio"])
        for offset, g in sorted(rows):
            out.add(center + offset, offset, g, report.center_count / g)
        return out

    def census(self, modulus: int, k_from: int, k_to: int, summary: bool = False) -> OutputTable:
        result = inequality_census(modulus, (k_from, k_to), self.table(modulus * k_to + 2),
                                   workers=self.workers)
        if summary:
            out = OutputTable(["modulus", "holds", "total", "fraction"])
            out.add(result.modulus, result.holds, result.total, result.fraction)
            return out

        out = OutputTable(["k", "n", "g_n", "g_n_plus_2", "holds"])
        for row in result.rows:
            out.add(row.k, row.n, row.g_n, row.g_n_plus_2, row.holds)
        return out

    def reproduce(self, include_large: bool = True) -> OutputTable:
        table = self.table(reproduction_required_limit(include_large))
        report = build_reproduction_report(table, include_large=include_large, workers=self.workers)
        logger.info(report.summary)
        out = OutputTable(["check", "item", "expected", "actual", "status"])
        for check in report.checks:
            out.add(*check.to_row())
        return out


# ============================================================================
# 命令行接口
# ============================================================================

def _range_of(args) -> Tuple[int, int]:
    """--n 或 --from/--to"""
    if getattr(args, "n", None) is not None:
        return args.n, args.n
    if args.n_from is None or args.n_to is None:
        raise InvalidArgumentError("需要 --n 或同时指定 --from 与 --to")
    return args.n_from, args.n_to


def _ellipse_params(args) -> EllipseParams:
    return EllipseParams(m_max=args.m_max, coprime_m=args.coprime_m)


def _run_count(tk: GoldbachToolkit, args):
    return tk.count(args.n)


def _run_list(tk: GoldbachToolkit, args):
    return tk.list(args.n)


def _run_series(tk: GoldbachToolkit, args):
    return tk.series(args.n_from, args.n_to)


def _run_estimate(tk: GoldbachToolkit, args):
    return tk.estimate(*_range_of(args))


def _run_radius(tk: GoldbachToolkit, args):
    return tk.radius(*_range_of(args))


def _run_coverage(tk: GoldbachToolkit, args):
    return tk.coverage(args.n)


def _run_diff(tk: GoldbachToolkit, args):
    return tk.diff(args.bound, include_odd=args.include_odd, periodicity=args.periodicity)


def _run_ellipse(tk: GoldbachToolkit, args):
    return tk.ellipse(args.k, args.n_from, args.n_to, _ellipse_params(args))


def _run_seq(tk: GoldbachToolkit, args):
    return tk.seq(args.source, args.n_from, args.n_to, args.k, _ellipse_params(args), bits=args.bits)


def _run_autocorr(tk: GoldbachToolkit, args):
    return tk.autocorr(args.source, args.n_from, args.n_to, args.k, _ellipse_params(args),
                       mode=args.mode, method=args.method, summary=args.summary, max_lag=args.max_lag)


def _run_peaks(tk: GoldbachToolkit, args):
    offsets = parse_int_list(args.offsets)
    if not offsets:
        raise InvalidArgumentError("--offsets 不能为空")
    return tk.peaks(args.center, offsets)


def _run_census(tk: GoldbachToolkit, args):
    return tk.census(args.modulus, args.k_from, args.k_to, summary=args.summary)


def _run_reproduce(tk: GoldbachToolkit, args):
    return tk.reproduce(include_large=not args.skip_large)


def _run_twin_constant(tk: GoldbachToolkit, args):
    return tk.twin_constant(args.bound)


COMMANDS: Dict[str, Callable] = {
    'count': _run_count,
    'list': _run_list,
    'series': _run_series,
    'estimate': _run_estimate,
    'radius': _run_radius,
    'coverage': _run_coverage,
    'diff': _run_diff,
    'ellipse': _run_ellipse,
    'seq': _run_seq,
    'autocorr': _run_autocorr,
    'peaks': _run_peaks,
    'census': _run_census,
    'reproduce': _run_reproduce,
    'twin-constant': _run_twin_constant,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--format', choices=['csv', 'json'], default='csv', help='输出格式')
    common.add_argument('--out', default=None, help='输出文件（默认标准输出）')
    common.add_argument('--workers', type=int, default=1, help='线程数')
    common.add_argument('--sieve-limit', type=int, default=None, help='素数表上限（默认按参数推断）')
    common.add_argument('-v', '--verbose', action='store_true', help='输出调试日志')

    parser = argparse.ArgumentParser(
        prog='main.py',
        description='哥德巴赫分拆数、伪随机序列与自相关分析',
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
示例:
  python main.py count --n 10
  python main.py series --from 4 --to 500
  python main.py ellipse --k 7 --from 4 --to 34
  python main.py autocorr --source parity --from 4 --to 2000 --summary
  python main.py coverage --n 630
  python main.py reproduce --skip-large
        """,
    )
    sub = parser.add_subparsers(dest='command', required=True, metavar='command')

    def add(name: str, help_text: str) -> argparse.ArgumentParser:
        return sub.add_parser(name, parents=[common], help=help_text)

    def add_range(p: argparse.ArgumentParser, required: bool = True):
        p.add_argument('--from', dest='n_from', type=int, required=required, help='起点（偶数）')
        p.add_argument('--to', dest='n_to', type=int, required=required, help='终点（偶数，含）')

    def add_ellipse_options(p: argparse.ArgumentParser):
        p.add_argument('--m-max', type=int, default=None, help='m 的搜索上限')
        p.add_argument('--coprime-m', action='store_true', help='要求 gcd(m, k) = 1')

    p = add('count', '计算 g(n)')
    p.add_argument('--n', type=int, required=True)

    p = add('list', '列出 n 的全部分拆')
    p.add_argument('--n', type=int, required=True)

    p = add('series', 'g(n) 序列')
    add_range(p)

    p = add('estimate', '对数和估计与 Hardy-Littlewood 估计')
    p.add_argument('--n', type=int, default=None)
    add_range(p, required=False)

    p = add('radius', '哥德巴赫半径')
    p.add_argument('--n', type=int, default=None)
    add_range(p, required=False)

    p = add('coverage', '[n/2, n−2] 内未被分拆覆盖的素数')
    p.add_argument('--n', type=int, required=True)

    p = add('diff', '素数差谱')
    p.add_argument('--bound', type=int, required=True, help='最大素数 P')
    p.add_argument('--include-odd', action='store_true', help='同时输出含素数2的奇数差')
    p.add_argument('--periodicity', action='store_true', help='只输出局部极大落在6的倍数上的比例')

    p = add('ellipse', '哥德巴赫椭圆')
    p.add_argument('--k', type=int, required=True)
    add_range(p)
    add_ellipse_options(p)

    for name, help_text in (('seq', '±1 / 0-1 序列'), ('autocorr', '自相关函数')):
        p = add(name, help_text)
        p.add_argument('--source', choices=['parity', 'mod4'], default='parity',
                       help='parity: g(n) 奇偶；mod4: 椭圆 m 的模4余数')
        p.add_argument('--k', type=int, default=7, help='mod4 序列使用的 k')
        add_range(p)
        add_ellipse_options(p)
        if name == 'seq':
            p.add_argument('--bits', action='store_true', help='输出 0/1 而不是 ±1')
        else:
            p.add_argument('--mode', choices=['cyclic', 'linear'], default='cyclic')
            p.add_argument('--method', choices=['direct', 'fft'], default=None)
            p.add_argument('--summary', action='store_true', help='只输出峰值与最大旁瓣')
            p.add_argument('--max-lag', type=int, default=None, help='最大滞后')

    p = add('peaks', '素数阶乘附近的峰值')
    p.add_argument('--center', type=int, required=True)
    p.add_argument('--offsets', default=",".join(str(o) for o in PEAK_CONFIG['default_offsets']),
                   help="偏移量，如 '-10,-8,8,10' 或 '-10:10:2'")

    p = add('census', 'g(mk) > g(mk+2) 统计')
    p.add_argument('--modulus', type=int, default=CENSUS_CONFIG['default_modulus'])
    p.add_argument('--k-from', type=int, required=True)
    p.add_argument('--k-to', type=int, required=True)
    p.add_argument('--summary', action='store_true')

    p = add('reproduce', '复现报告')
    p.add_argument('--skip-large', action='store_true', help='跳过 1021020 附近的数值')

    p = add('twin-constant', '孪生素数常数的截断乘积')
    p.add_argument('--bound', type=int, required=True)

    return parser


def configure_logging(verbose: bool = False):
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )


def run(argv: List[str] = None, stream=None) -> int:
    """
    执行一条命令

    Returns:
        退出码：0 成功，1 领域错误，2 用法错误
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2

    try:
        settings = ToolkitSettings(
            output_format=args.format,
            out=args.out,
            workers=args.workers,
            sieve_limit=args.sieve_limit,
            verbose=args.verbose,
        )
    except ValidationError as e:
        err = e.errors()[0]
        field = ".".join(str(x) for x in err.get('loc', ()))
        print(f"用法错误: {field} {err.get('msg')}", file=sys.stderr)
        return 2

    configure_logging(settings.verbose)
    toolkit = GoldbachToolkit(settings)

    try:
        table = COMMANDS[args.command](toolkit, args)
    except GoldbachError as e:
        print(f"错误: {e}", file=sys.stderr)
        return 1
    except MemoryError:
        print("错误: 内存不足，请减小计算范围或 --sieve-limit", file=sys.stderr)
        return 1

    try:
        write_output(table, settings.output_format, settings.out, stream=stream)
    except OSError as e:
        print(f"错误: 无法写出结果 {settings.out}: {e.strerror or e}", file=sys.stderr)
        return 1
    return 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
