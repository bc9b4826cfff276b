"""Packet model: payload bits, sender-side 16-bit CRC, and identity.

The CRC defaults to CRC-16/CCITT-FALSE (poly 0x1021, init 0xFFFF, no
reflection, no final XOR) computed MSB-first. The polynomial and init are
configurable; the well-known check value of ASCII "123456789" is 0x29B1.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .bits import BitVector

PacketId = int

CRC_POLY = 0x1021
CRC_INIT = 0xFFFF


def _build_table(poly: int) -> np.ndarray:
    table = np.zeros(256, dtype=np.uint32)
    for byte in range(256):
        crc = byte << 8
        for _ in range(8):
            crc = ((crc << 1) ^ poly) if crc & 0x8000 else (crc << 1)
            crc &= 0xFFFF
        table[byte] = crc
    return table


_TABLES: dict[int, np.ndarray] = {}


def crc16(bits: BitVector, poly: int = CRC_POLY, init: int = CRC_INIT) -> BitVector:
    """16-bit CRC of a bit sequence, returned as a 16-bit BitVector."""
    n = len(bits)
    if n == 0:
        raise ValueError("empty message")
    if poly not in _TABLES:
        _TABLES[poly] = _build_table(poly)
    crc = init
    if n % 8 == 0:
        table = _TABLES[poly]
        for byte in bits.to_bytes():
            crc = ((crc << 8) ^ int(table[(crc >> 8) ^ byte])) & 0xFFFF
    else:
        for b in bits.array:
            fb = (crc >> 15) ^ int(b)
            crc = (crc << 1) & 0xFFFF
            if fb:
                crc ^= poly
    return BitVector((crc >> np.arange(15, -1, -1)) & 1)


@dataclass(frozen=True)
class Packet:
    """A logical payload plus its appended 2-byte CRC."""

    id: PacketId
    body: BitVector
    crc: BitVector = field(repr=False)

    @property
    def on_air(self) -> BitVector:
        """Body followed by the 16 CRC bits; what actually goes over the air."""
        return self.body + self.crc


def make_packet(packet_id: PacketId, body: BitVector) -> Packet:
    if len(body) < 8 or len(body) % 8 != 0:
        raise ValueError("body must be byte-aligned and at least one byte")
    return Packet(id=packet_id, body=body, crc=crc16(body))


def verify_packet(on_air: BitVector) -> bool:
    """True iff the trailing 16 bits equal the CRC of everything before them."""
    if len(on_air) < 24:
        raise ValueError("on-air packet shorter than one byte of body plus CRC")
    return crc16(on_air[:-16]) == on_air[-16:]
