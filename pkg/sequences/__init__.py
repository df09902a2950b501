"""序列模块"""

from .sequence_mapper import (
    BitSequence,
    SignedSequence,
    parity_bits,
    parity_bipolar,
    mod4_bipolar,
)

__all__ = [
    'BitSequence',
    'SignedSequence',
    'parity_bits',
    'parity_bipolar',
    'mod4_bipolar',
]
