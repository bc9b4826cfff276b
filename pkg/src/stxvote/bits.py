"""Immutable bit-sequence type used for payloads, coded streams and chips.

All serialization is MSB-first within each byte; this is the single
canonical bit order for the whole library.
"""

from __future__ import annotations

from typing import Iterable

import numpy as np


class BitVector:
    """Fixed-length, immutable sequence of 0/1 values backed by numpy."""

    __slots__ = ("_bits",)

    def __init__(self, bits: Iterable[int] | np.ndarray):
        arr = np.asarray(list(bits) if not isinstance(bits, np.ndarray) else bits,
                         dtype=np.uint8)
        if arr.ndim != 1:
            raise ValueError("bits must be one-dimensional")
        if arr.size and not np.all((arr == 0) | (arr == 1)):
            raise ValueError("every element must be 0 or 1")
        arr = arr.copy()
        arr.flags.writeable = False
        self._bits = arr

    # -- construction helpers -------------------------------------------------

    @classmethod
    def from_bytes(cls, data: bytes) -> "BitVector":
        return cls(np.unpackbits(np.frombuffer(data, dtype=np.uint8)))

    @classmethod
    def from_hex(cls, text: str) -> "BitVector":
        return cls.from_bytes(bytes.fromhex(text))

    @classmethod
    def zeros(cls, n: int) -> "BitVector":
        return cls(np.zeros(n, dtype=np.uint8))

    @classmethod
    def random(cls, n: int, rng: np.random.Generator) -> "BitVector":
        return cls(rng.integers(0, 2, size=n, dtype=np.uint8))

    # -- views ----------------------------------------------------------------

    @property
    def array(self) -> np.ndarray:
        """Read-only numpy view of the bits."""
        return self._bits

    def to_bytes(self) -> bytes:
        if len(self) % 8 != 0:
            raise ValueError("length must be a multiple of 8 to serialize bytes")
        return np.packbits(self._bits).tobytes()

    def to_hex(self) -> str:
        return self.to_bytes().hex()

    # -- sequence protocol ----------------------------------------------------

    def __len__(self) -> int:
        return self._bits.size

    def __getitem__(self, idx):
        if isinstance(idx, slice):
            return BitVector(self._bits[idx])
        return int(self._bits[idx])

    def __iter__(self):
        return iter(int(b) for b in self._bits)

    def __eq__(self, other) -> bool:
        if not isinstance(other, BitVector):
            return NotImplemented
        return self._bits.shape == other._bits.shape and bool(
            np.all(self._bits == other._bits))

    def __hash__(self) -> int:
        return hash(self._bits.tobytes())

    def __add__(self, other: "BitVector") -> "BitVector":
        return BitVector(np.concatenate([self._bits, other._bits]))

    def __xor__(self, other: "BitVector") -> "BitVector":
        if len(self) != len(other):
            raise ValueError("length mismatch")
        return BitVector(self._bits ^ other._bits)

    def flip(self, index: int) -> "BitVector":
        """Return a copy with one bit inverted."""
        arr = self._bits.copy()
        arr[index] ^= 1
        return BitVector(arr)

    def __repr__(self) -> str:
        if len(self) <= 32:
            return f"BitVector({''.join(str(b) for b in self._bits)})"
        return f"BitVector(len={len(self)})"
