import tracemalloc
from collections import Counter

import pytest
import hypothesis.strategies as st
from hypothesis import given

from analysis import spectrum_peak_periodicity
from partitions import (
    DiffSpectrum,
    goldbach_radius,
    list_partitions,
    radius_series,
    coverage_exceptions,
    difference_spectrum,
)
from primes import sieve_upto
from utils import InvalidArgumentError, OutOfRangeError


# ============================================================================
# 半径
# ============================================================================

def test_radius_examples(table):
    assert goldbach_radius(14, table) == 3
    assert goldbach_radius(7, table) == 0
    assert goldbach_radius(4, table) == 1
    assert goldbach_radius(2, table) == 0
    assert goldbach_radius(10, table) == 3


@given(st.integers(min_value=2, max_value=20_000))
def test_radius_is_minimal(table, n):
    r = goldbach_radius(n, table)
    assert table.is_prime(n - r) and table.is_prime(n + r)
    for j in range(r):
        assert not (table.is_prime(n - j) and table.is_prime(n + j))


def test_radius_series(table):
    rows = radius_series(2, 20, table)
    assert [r.n for r in rows] == list(range(2, 21))
    for row in rows:
        assert row.p + row.q == 2 * row.n
        assert row.n - row.p == row.radius
    assert (rows[12].n, rows[12].radius, rows[12].p, rows[12].q) == (14, 3, 11, 17)


def test_radius_errors(table):
    with pytest.raises(InvalidArgumentError):
        goldbach_radius(1, table)
    with pytest.raises(OutOfRangeError):
        goldbach_radius(table.limit // 2 + 1, table)
    with pytest.raises(InvalidArgumentError):
        radius_series(10, 5, table)


# ============================================================================
# 覆盖
# ============================================================================

def test_coverage_examples(table):
    assert coverage_exceptions(6, table) == []
    assert coverage_exceptions(30, table) == []
    assert coverage_exceptions(210, table) == []
    assert coverage_exceptions(630, table) == [331, 383, 409, 421, 443, 461, 487, 509]


def test_coverage_420(table):
    """按定义 211 也是例外：420 − 211 = 209 = 11·19"""
    result = coverage_exceptions(420, table)
    assert result == [211, 233, 251, 277]
    assert {233, 251, 277} <= set(result)


def test_coverage_agrees_with_partition_lists(table):
    """n ≤ 2000：例外为空当且仅当 [n/2, n−2] 内每个素数都是某个分拆的较大项"""
    for n in range(6, 2001, 2):
        larger = {q for _, q in list_partitions(n, table).pairs}
        candidates = table.primes_between(n // 2, n - 2).tolist()
        exceptions = coverage_exceptions(n, table)
        assert exceptions == [q for q in candidates if q not in larger], n
        assert (exceptions == []) == (set(candidates) <= larger), n


def test_coverage_errors(table):
    with pytest.raises(InvalidArgumentError):
        coverage_exceptions(4, table)
    with pytest.raises(InvalidArgumentError):
        coverage_exceptions(31, table)
    with pytest.raises(OutOfRangeError):
        coverage_exceptions(200, sieve_upto(100))


# ============================================================================
# 差谱
# ============================================================================

def test_spectrum_for_13(table):
    spectrum = difference_spectrum(13, table)
    assert spectrum.even_only().counts == {2: 3, 4: 2, 6: 2, 8: 2, 10: 1}
    # 含素数2的对
    assert {n: c for n, c in spectrum.items() if n % 2} == {1: 1, 3: 1, 5: 1, 9: 1, 11: 1}
    assert spectrum.count(12) == 0


def test_spectrum_for_2003(table):
    spectrum = difference_spectrum(2003, table, workers=4)
    assert spectrum.count(2) == 61
    assert spectrum.count(4) == 65
    assert spectrum.count(6) == 129
    assert 1.5 <= spectrum.count(6) / spectrum.count(2) <= 2.5

    # 共 304 个素数，两两配对
    assert sum(spectrum.counts.values()) == 304 * 303 // 2


def test_spectrum_total_and_workers(table):
    one = difference_spectrum(997, table, workers=1)
    many = difference_spectrum(997, table, workers=6)
    assert one.counts == many.counts
    assert sum(one.counts.values()) == 168 * 167 // 2


def test_spectrum_matches_pair_enumeration(table):
    """P ≤ 997 的每个素数，逐键与双重循环比对"""
    all_primes = table.primes_upto(997).tolist()
    for idx, bound in enumerate(all_primes):
        ps = all_primes[:idx + 1]
        expected = Counter(p1 - p2 for i, p1 in enumerate(ps) for p2 in ps[:i])
        assert difference_spectrum(bound, table).counts == dict(expected), bound


def test_spectrum_memory_stays_linear():
    big = sieve_upto(200_003)
    tracemalloc.start()
    try:
        spectrum = difference_spectrum(200_003, big)
        _, peak = tracemalloc.get_traced_memory()
    finally:
        tracemalloc.stop()
    assert sum(spectrum.counts.values()) == 17985 * 17984 // 2
    assert peak < 64 * 1024 * 1024


def test_spectrum_errors(table):
    with pytest.raises(InvalidArgumentError):
        difference_spectrum(15, table)
    with pytest.raises(InvalidArgumentError):
        difference_spectrum(table.limit + 1, table)


def test_spectrum_trivial(table):
    assert difference_spectrum(2, table).counts == {}


def test_peak_periodicity(table):
    report = spectrum_peak_periodicity(difference_spectrum(2003, table))
    assert len(report.local_maxima) == 329
    assert report.at_multiples_of_6 == 329
    assert report.fraction == 1.0
    assert report.baseline == pytest.approx(1 / 3)


def test_peak_periodicity_empty():
    report = spectrum_peak_periodicity(DiffSpectrum(prime_bound=2))
    assert report.local_maxima == []
    assert report.fraction == 0.0
