"""Rate-1/2 convolutional code (constraint length 4) with hard-decision Viterbi.

Generator polynomials default to the Bluetooth LE Coded PHY pair,
G0 = 1 + x + x^2 + x^3 and G1 = 1 + x^2 + x^3 (taps over the current input
bit and three memory bits). The encoder is flushed with three zero tail
bits, so the trellis starts and ends in state 0.
"""

from __future__ import annotations

import numpy as np
from numba import njit

from .bits import BitVector

GEN0 = 0b1111
GEN1 = 0b1101
CONSTRAINT_LEN = 4
N_STATES = 8
TAIL_BITS = 3


def _branch_tables(gen0: int = GEN0, gen1: int = GEN1):
    nxt = np.zeros((N_STATES, 2), dtype=np.int64)
    out0 = np.zeros((N_STATES, 2), dtype=np.uint8)
    out1 = np.zeros((N_STATES, 2), dtype=np.uint8)
    for state in range(N_STATES):
        for bit in (0, 1):
            window = (bit << 3) | state
            out0[state, bit] = bin(window & gen0).count("1") & 1
            out1[state, bit] = bin(window & gen1).count("1") & 1
            nxt[state, bit] = window >> 1
    return nxt, out0, out1


_NEXT, _OUT0, _OUT1 = _branch_tables()


def conv_encode(bits: BitVector) -> BitVector:
    """Encode and terminate; output length is 2 * (len(bits) + 3)."""
    if len(bits) == 0:
        raise ValueError("empty input")
    data = np.concatenate([bits.array, np.zeros(TAIL_BITS, dtype=np.uint8)])
    out = np.empty(2 * data.size, dtype=np.uint8)
    state = 0
    for i, b in enumerate(data):
        out[2 * i] = _OUT0[state, b]
        out[2 * i + 1] = _OUT1[state, b]
        state = _NEXT[state, b]
    return BitVector(out)


@njit(cache=True)
def _viterbi(coded, nxt, out0, out1):  # pragma: no cover (numba)
    n_steps = coded.shape[0] // 2
    inf = 1 << 30
    pm = np.full(N_STATES, inf, dtype=np.int64)
    pm[0] = 0
    bp_state = np.zeros((n_steps, N_STATES), dtype=np.int8)
    bp_bit = np.zeros((n_steps, N_STATES), dtype=np.int8)
    for t in range(n_steps):
        r0 = coded[2 * t]
        r1 = coded[2 * t + 1]
        new_pm = np.full(N_STATES, inf, dtype=np.int64)
        for s in range(N_STATES):
            if pm[s] >= inf:
                continue
            for b in range(2):
                ns = nxt[s, b]
                cost = pm[s]
                if out0[s, b] != r0:
                    cost += 1
                if out1[s, b] != r1:
                    cost += 1
                if cost < new_pm[ns]:
                    new_pm[ns] = cost
                    bp_state[t, ns] = s
                    bp_bit[t, ns] = b
        pm = new_pm
    decoded = np.zeros(n_steps, dtype=np.uint8)
    state = 0  # terminated trellis
    for t in range(n_steps - 1, -1, -1):
        decoded[t] = bp_bit[t, state]
        state = bp_state[t, state]
    return decoded


def viterbi_decode(coded: BitVector) -> BitVector:
    """Minimum-Hamming-distance decoding; strips the 3 tail bits."""
    if len(coded) % 2 != 0:
        raise ValueError("coded length must be even")
    if len(coded) < 8:
        raise ValueError("coded stream too short")
    decoded = _viterbi(np.ascontiguousarray(coded.array), _NEXT, _OUT0, _OUT1)
    return BitVector(decoded[:-TAIL_BITS])
