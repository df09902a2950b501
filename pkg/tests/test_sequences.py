import pytest
import hypothesis.strategies as st
from hypothesis import given

from analysis.reference_values import ELLIPSE_K7, MOD4_SEED_K7, SMALL_COUNTS
from sequences import BitSequence, SignedSequence, parity_bits, parity_bipolar, mod4_bipolar
from utils import InvalidArgumentError


def test_parity_bits_examples():
    assert parity_bits([1, 1, 1, 2, 1]).values == (1, 1, 1, 0, 1)
    assert parity_bits([2, 2, 2]).values == (0, 0, 0)

    counts = [SMALL_COUNTS[n] for n in sorted(SMALL_COUNTS)]
    bits = parity_bits(counts, start_n=4)
    assert len(bits) == 27
    assert bits.values == tuple(g % 2 for g in counts)
    assert bits.labels()[:3] == [4, 6, 8]
    assert bits.labels()[-1] == 56


def test_parity_bipolar_examples():
    assert parity_bipolar([1, 1, 1, 2, 1]).values == (1, 1, 1, -1, 1)
    assert parity_bipolar([0]).values == (-1,)


@given(st.lists(st.integers(min_value=0, max_value=10**6), min_size=1, max_size=200))
def test_bipolar_is_affine_image_of_bits(series):
    bits = parity_bits(series)
    signed = parity_bipolar(series)
    assert signed.values == tuple(2 * b - 1 for b in bits.values)
    # 对输出再映射一次结果不变
    assert parity_bits(bits.values).values == bits.values


def test_mod4_examples():
    m_column = [row[3] for row in ELLIPSE_K7]
    assert m_column == [1, 1, 3, 3, 1, 3, 5, 3, 3, 1, 3, 1, 3, 15]
    assert mod4_bipolar(m_column).values == MOD4_SEED_K7
    assert mod4_bipolar([1]).values == (1,)
    assert mod4_bipolar([3, 7, 11]).values == (-1, -1, -1)


def test_mod4_rejects_even():
    with pytest.raises(InvalidArgumentError):
        mod4_bipolar([1, 4, 5])


def test_empty_and_invalid_inputs():
    with pytest.raises(InvalidArgumentError):
        parity_bits([])
    with pytest.raises(InvalidArgumentError):
        parity_bits([1, -2])
    with pytest.raises(InvalidArgumentError):
        SignedSequence((1, 0, -1))
    with pytest.raises(InvalidArgumentError):
        BitSequence((0, 2))
    with pytest.raises(InvalidArgumentError):
        SignedSequence(())


def test_conversions_keep_labels():
    bits = BitSequence((1, 0, 1), start_n=10, step=2)
    signed = bits.to_bipolar()
    assert signed.values == (1, -1, 1)
    assert signed.labels() == [10, 12, 14]
    assert signed.to_bits() == bits


def test_explicit_positions():
    seq = mod4_bipolar([1, 3, 5], positions=[4, 8, 10])
    assert seq.labels() == [4, 8, 10]
    assert seq.to_bits().labels() == [4, 8, 10]
    assert seq.to_bits().to_bipolar() == seq

    with pytest.raises(InvalidArgumentError):
        mod4_bipolar([1, 3], positions=[4])
    with pytest.raises(InvalidArgumentError):
        BitSequence((0, 1), positions=(4, 6, 8))
