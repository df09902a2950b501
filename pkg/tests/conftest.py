import pytest

from primes import sieve_upto
from analysis import reproduction_required_limit


@pytest.fixture(scope="session")
def table():
    """覆盖 10⁵ 的素数表，绝大多数用例共用"""
    return sieve_upto(100_000)


@pytest.fixture(scope="session")
def large_table():
    """覆盖 1021020 附近的素数表"""
    return sieve_upto(reproduction_required_limit(include_large=True))
