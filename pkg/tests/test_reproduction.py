import pytest

from analysis import ReproductionBuilder, build_reproduction_report, reproduction_required_limit
from analysis.reproduction import MATCH, MISMATCH, ERRATUM, UNRESOLVED, DERIVED
from primes import sieve_upto
from utils import OutOfRangeError


@pytest.fixture(scope="module")
def report(table):
    return build_reproduction_report(table, include_large=False, workers=2)


def only(report, name, item):
    found = report.find(name, item)
    assert len(found) == 1, (name, item)
    return found[0]


def test_required_limit():
    assert reproduction_required_limit(include_large=False) == 90098
    assert reproduction_required_limit(include_large=True) == 1021028


def test_table_too_small():
    with pytest.raises(OutOfRangeError):
        ReproductionBuilder(sieve_upto(1000), include_large=False)


def test_count_tables(report):
    small = report.find("small_counts")
    rest = report.find("counts_to_188")
    assert len(small) == 27
    assert len(small) + len(rest) == 93
    assert all(c.status == MATCH for c in small + rest)


def test_neighbourhoods(report):
    checks = report.find("primorial_neighbourhood")
    assert len(checks) == 30
    assert all(c.status == MATCH for c in checks)
    assert [c.status for c in report.find("primorial_peak_ratio")] == [MATCH] * 3


def test_maximum(report):
    check = only(report, "max_below_2000", "argmax")
    assert check.actual == "1890 91"
    assert check.status == MATCH


def test_sidelobes(report):
    assert only(report, "sidelobe", "range[4;2000] cyclic").status == MISMATCH
    assert only(report, "sidelobe", "range[4;2000] cyclic").actual == "0.113113"
    assert only(report, "sidelobe", "range[4;2000] linear k<=n/2").status == MISMATCH
    assert only(report, "sidelobe", "length2000 cyclic").actual == "0.084000"
    assert only(report, "sidelobe", "length2000 cyclic").status == MATCH
    assert only(report, "sidelobe", "length2000 linear k<=n/2").status == MATCH


def test_ellipse_tables(report):
    k7 = report.find("ellipse_k7")
    assert len(k7) == 14
    assert all(c.status == MATCH for c in k7)

    row30 = only(report, "ellipse_k3", "2n=30")
    assert row30.status == ERRATUM
    assert row30.actual == "undefined"

    row28 = only(report, "ellipse_k3", "2n=28")
    assert row28.status == DERIVED
    assert row28.actual == "23 43 5 66"

    others = [c for c in report.find("ellipse_k3") if c.item not in ("2n=28", "2n=30")]
    assert len(others) == 10
    assert all(c.status == MATCH for c in others)

    assert only(report, "mod4_seed", "k=7").status == MATCH


def test_coverage(report):
    check = only(report, "coverage", "n=420")
    assert check.status == ERRATUM
    assert check.expected == "233 251 277"
    assert check.actual == "211 233 251 277"

    empty = only(report, "coverage", "n=210")
    assert (empty.expected, empty.actual, empty.status) == ("-", "-", MATCH)
    assert only(report, "coverage", "n=630").status == MATCH


def test_partition_lists(report):
    typo = only(report, "partitions_210", "157 54")
    assert typo.status == ERRATUM
    assert typo.actual == "157 53"
    assert only(report, "partitions_210", "count").status == MATCH
    assert all(c.status == MATCH for c in report.find("partitions_30"))


def test_differences(report):
    twin = only(report, "difference_counts", "diff=2")
    assert twin.status == UNRESOLVED
    assert (twin.expected, twin.actual) == ("35", "61")
    assert only(report, "difference_counts", "diff=4").status == MATCH
    assert only(report, "difference_counts", "diff=6").status == MATCH
    assert only(report, "difference_ratio", "diff6/diff2").status == MATCH


def test_twin_constant(report):
    assert report.find("twin_prime_constant")[0].status == MATCH


def test_summary(report):
    counts = report.by_status()
    assert counts[MISMATCH] == 2
    assert counts[ERRATUM] == 3
    assert counts[UNRESOLVED] == 1
    assert counts[DERIVED] == 1
    assert report.summary.startswith(f"共{len(report.checks)}项")
    assert report.checks[0].to_row()[0] == "small_counts"


@pytest.mark.slow
def test_full_report(large_table):
    full = build_reproduction_report(large_table, include_large=True)
    checks = full.find("primorial_neighbourhood")
    assert len(checks) == 40
    assert all(c.status == MATCH for c in checks)
