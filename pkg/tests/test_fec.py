import numpy as np
import pytest

from stxvote.bits import BitVector
from stxvote.fec import GEN0, GEN1, TAIL_BITS, conv_encode, viterbi_decode


def _reference_encode(bits, gen0=GEN0, gen1=GEN1):
    """Independent shift-register trace of the encoder."""
    memory = [0, 0, 0]
    out = []
    for b in list(bits) + [0] * TAIL_BITS:
        window = [b] + memory
        taps0 = [3 - i for i in range(4) if (gen0 >> i) & 1]
        taps1 = [3 - i for i in range(4) if (gen1 >> i) & 1]
        out.append(sum(window[t] for t in taps0) % 2)
        out.append(sum(window[t] for t in taps1) % 2)
        memory = [b] + memory[:-1]
    return out


def test_all_zero_input_stays_in_zero_state():
    out = conv_encode(BitVector.zeros(40))
    assert out == BitVector.zeros(2 * (40 + 3))


def test_output_length():
    assert len(conv_encode(BitVector([1, 0, 1]))) == 2 * (3 + 3)


def test_hand_traced_first_pairs():
    # impulse through generators G0=1111, G1=1101
    out = conv_encode(BitVector([1, 0, 0, 0]))
    assert list(out.array) == [1, 1, 1, 1, 1, 0, 1, 1, 0, 0, 0, 0, 0, 0]


def test_encoder_matches_independent_reference():
    rng = np.random.default_rng(7)
    for _ in range(20):
        msg = BitVector.random(int(rng.integers(1, 100)), rng)
        assert list(conv_encode(msg).array) == _reference_encode(msg)


def test_noiseless_roundtrip():
    rng = np.random.default_rng(8)
    for _ in range(20):
        msg = BitVector.random(int(rng.integers(1, 200)), rng)
        assert viterbi_decode(conv_encode(msg)) == msg


def test_single_flip_per_constraint_span_corrected():
    # exhaustive single-flip sweep on a 32-bit message
    msg = BitVector.random(32, np.random.default_rng(9))
    coded = conv_encode(msg)
    for i in range(len(coded)):
        assert viterbi_decode(coded.flip(i)) == msg


def test_two_spread_flips_corrected():
    msg = BitVector.random(64, np.random.default_rng(10))
    coded = conv_encode(msg)
    arr = coded.array.copy()
    arr[10] ^= 1
    arr[80] ^= 1
    assert viterbi_decode(BitVector(arr)) == msg


def test_burst_of_12_flips_usually_defeats_decoder():
    # contiguous bursts exceed the code's correction span most of the time;
    # this is why wide-beating bursts defeat the FEC alone
    rng = np.random.default_rng(11)
    msg = BitVector.random(128, rng)
    coded = conv_encode(msg)
    failures = 0
    trials = 100
    for _ in range(trials):
        start = int(rng.integers(0, len(coded) - 12))
        arr = coded.array.copy()
        arr[start:start + 12] ^= 1
        failures += viterbi_decode(BitVector(arr)) != msg
    assert failures > trials / 2


def test_odd_length_rejected():
    with pytest.raises(ValueError):
        viterbi_decode(BitVector.zeros(9))


def test_empty_input_rejected():
    with pytest.raises(ValueError):
        conv_encode(BitVector([]))
