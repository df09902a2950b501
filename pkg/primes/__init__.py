"""素数模块"""

from .prime_table import (
    PrimeTable,
    sieve_upto,
    is_prime,
    odd_prime_factors,
)
from .primorial import primorial

__all__ = [
    'PrimeTable',
    'sieve_upto',
    'is_prime',
    'odd_prime_factors',
    'primorial',
]
