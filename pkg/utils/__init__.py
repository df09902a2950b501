"""工具模块"""

from .errors import (
    GoldbachError,
    InvalidArgumentError,
    OutOfRangeError,
    PrimorialOverflowError,
    ConjectureViolationError,
)
from .helpers import (
    require_even,
    parse_int_list,
    format_real,
    round_real,
    ln_squared,
    log_elapsed,
)
from .parallel import (
    split_chunks,
    parallel_map_chunks,
    parallel_reduce_chunks,
)

__all__ = [
    'GoldbachError',
    'InvalidArgumentError',
    'OutOfRangeError',
    'PrimorialOverflowError',
    'ConjectureViolationError',
    'require_even',
    'parse_int_list',
    'format_real',
    'round_real',
    'ln_squared',
    'log_elapsed',
    'split_chunks',
    'parallel_map_chunks',
    'parallel_reduce_chunks',
]
