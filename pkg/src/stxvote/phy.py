"""Five PHY chains mapping packet bits to air symbols and back.

BLE 1M / 2M send bits uncoded. The coded BLE PHYs run the rate-1/2
convolutional code, then a pattern mapper (P=1 for 500K, P=4 for 125K).
IEEE 802.15.4 spreads 4-bit symbols to 32-chip DSSS sequences. Air symbols
are corrupted stochastically: each symbol flips with probability given by a
closed-form BER curve evaluated at the mean instantaneous SNR over its
eight channel samples.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from importlib import resources

import numpy as np
from scipy.special import erfc

from . import fec
from .bits import BitVector
from .channel import ChannelRealization

SAMPLES_PER_SYMBOL = 8

# Pattern mapper symbols for the P=4 coded PHY: one coded bit -> 4 air symbols.
_P4_PATTERNS = np.array([[0, 0, 1, 1],
                         [1, 1, 0, 0]], dtype=np.uint8)


class PhyKind(enum.Enum):
    BLE_1M = "ble-1m"
    BLE_2M = "ble-2m"
    BLE_125K = "ble-125k"
    BLE_500K = "ble-500k"
    IEEE_802154 = "ieee-802154"

    def __str__(self) -> str:
        return self.value


def _load_chip_table(path=None) -> np.ndarray:
    """16 rows of 32 chips; line index == 4-bit symbol value."""
    if path is None:
        text = (resources.files("stxvote") / "data/ieee802154_chips.txt").read_text()
    else:
        with open(path) as f:
            text = f.read()
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if len(lines) != 16 or any(len(ln) != 32 or set(ln) - {"0", "1"} for ln in lines):
        raise ValueError("chip table must be 16 lines of 32 characters from {0,1}")
    table = np.array([[int(c) for c in ln] for ln in lines], dtype=np.uint8)
    if len({row.tobytes() for row in table}) != 16:
        raise ValueError("chip table rows must be distinct")
    return table


CHIP_TABLE = _load_chip_table()


def chip_table_min_distance(table: np.ndarray = CHIP_TABLE) -> int:
    d = (table[:, None, :] != table[None, :, :]).sum(-1)
    np.fill_diagonal(d, table.shape[1] + 1)
    return int(d.min())


def dsss_correction_radius(table: np.ndarray = CHIP_TABLE) -> int:
    """Guaranteed per-symbol chip-error correction radius of the table."""
    return (chip_table_min_distance(table) - 1) // 2


# -- coding layers -----------------------------------------------------------

def pattern_map(coded: BitVector, p: int) -> BitVector:
    if p not in (1, 4):
        raise ValueError("pattern P must be 1 or 4")
    if p == 1:
        return coded
    return BitVector(_P4_PATTERNS[coded.array].ravel())


def pattern_demap(symbols: BitVector, p: int) -> BitVector:
    if p not in (1, 4):
        raise ValueError("pattern P must be 1 or 4")
    if p == 1:
        return symbols
    if len(symbols) % 4 != 0:
        raise ValueError("symbol count must be a multiple of 4")
    groups = symbols.array.reshape(-1, 4)
    d0 = (groups != _P4_PATTERNS[0]).sum(axis=1)
    d1 = (groups != _P4_PATTERNS[1]).sum(axis=1)
    # ties resolve to symbol value 0
    return BitVector((d1 < d0).astype(np.uint8))


def dsss_spread(bits: BitVector, table: np.ndarray = CHIP_TABLE) -> BitVector:
    if len(bits) % 4 != 0:
        raise ValueError("input length must be a multiple of 4")
    nibbles = bits.array.reshape(-1, 4)
    values = nibbles @ np.array([8, 4, 2, 1], dtype=np.uint8)
    return BitVector(table[values].ravel())


def dsss_despread(chips: BitVector, table: np.ndarray = CHIP_TABLE) -> BitVector:
    if len(chips) % 32 != 0:
        raise ValueError("input length must be a multiple of 32")
    received = chips.array.reshape(-1, 32)
    dist = (received[:, None, :] != table[None, :, :]).sum(-1)
    values = dist.argmin(axis=1)  # argmin breaks ties toward the lowest index
    bits = ((values[:, None] >> np.array([3, 2, 1, 0])) & 1).astype(np.uint8)
    return BitVector(bits.ravel())


# -- error model -------------------------------------------------------------

def ber(model: str, snr_linear):
    """Symbol/chip error probability at mean linear SNR, clamped to [0, 0.5]."""
    g = np.asarray(snr_linear, dtype=np.float64)
    if np.any(g < 0):
        raise ValueError("SNR must be nonnegative")
    if model == "noncoherent-fsk":
        p = 0.5 * np.exp(-g / 2.0)
    elif model == "coherent-oqpsk-chip":
        p = 0.5 * erfc(np.sqrt(g))  # Q(sqrt(2*g))
    else:
        raise ValueError(f"unknown BER model: {model}")
    p = np.clip(p, 0.0, 0.5)
    return float(p) if p.ndim == 0 else p


# -- PHY configuration -------------------------------------------------------

@dataclass(frozen=True)
class PhyConfig:
    kind: PhyKind
    symbol_rate_hz: float
    coding: str               # "none" | "conv" | "dsss"
    pattern_p: int = 1
    ber_model: str = "noncoherent-fsk"
    samples_per_symbol: int = SAMPLES_PER_SYMBOL

    @property
    def sample_rate_hz(self) -> float:
        return self.symbol_rate_hz * self.samples_per_symbol

    def num_air_symbols(self, packet_bits: int) -> int:
        if self.coding == "none":
            return packet_bits
        if self.coding == "conv":
            return 2 * (packet_bits + fec.TAIL_BITS) * self.pattern_p
        if self.coding == "dsss":
            if packet_bits % 4 != 0:
                raise ValueError("DSSS input must be a multiple of 4 bits")
            return packet_bits // 4 * 32
        raise ValueError(f"unknown coding: {self.coding}")

    def encode(self, bits: BitVector) -> BitVector:
        if self.coding == "none":
            return bits
        if self.coding == "conv":
            return pattern_map(fec.conv_encode(bits), self.pattern_p)
        return dsss_spread(bits)

    def decode(self, symbols: BitVector) -> BitVector:
        if self.coding == "none":
            return symbols
        if self.coding == "conv":
            return fec.viterbi_decode(pattern_demap(symbols, self.pattern_p))
        return dsss_despread(symbols)


PHYS: dict[PhyKind, PhyConfig] = {
    PhyKind.BLE_1M: PhyConfig(PhyKind.BLE_1M, 1e6, "none"),
    PhyKind.BLE_2M: PhyConfig(PhyKind.BLE_2M, 2e6, "none"),
    PhyKind.BLE_125K: PhyConfig(PhyKind.BLE_125K, 1e6, "conv", pattern_p=4),
    PhyKind.BLE_500K: PhyConfig(PhyKind.BLE_500K, 1e6, "conv", pattern_p=1),
    PhyKind.IEEE_802154: PhyConfig(PhyKind.IEEE_802154, 2e6, "dsss",
                                   ber_model="coherent-oqpsk-chip"),
}


def get_phy(kind) -> PhyConfig:
    if isinstance(kind, str):
        kind = PhyKind(kind)
    return PHYS[kind]


def airtime(phy: PhyConfig, payload_bytes: int) -> float:
    """On-air duration in seconds of a payload of the given total byte count."""
    if payload_bytes < 1:
        raise ValueError("payload_bytes must be at least 1")
    return phy.num_air_symbols(payload_bytes * 8) / phy.symbol_rate_hz


# -- channel-facing operations ----------------------------------------------

def transmit_symbols(phy: PhyConfig, symbols: BitVector, ch: ChannelRealization,
                     rng_seed) -> BitVector:
    """Corrupt an already-encoded symbol stream through the channel."""
    needed = len(symbols) * phy.samples_per_symbol
    if ch.snr_per_sample.size < needed:
        raise ValueError("channel realization too short for this packet")
    mean_snr = ch.snr_per_sample[:needed].reshape(-1, phy.samples_per_symbol).mean(axis=1)
    p_flip = ber(phy.ber_model, mean_snr)
    rng = np.random.default_rng(rng_seed)
    flips = (rng.random(len(symbols)) < p_flip).astype(np.uint8)
    return BitVector(symbols.array ^ flips)


def transmit(phy: PhyConfig, packet_on_air: BitVector, ch: ChannelRealization,
             rng_seed) -> BitVector:
    """Push packet bits through the PHY encoder and the beating channel.

    Returns the received (possibly corrupted) air-symbol stream, before
    decoding. Each symbol flips independently with probability
    ber(mean SNR over its eight samples).
    """
    return transmit_symbols(phy, phy.encode(packet_on_air), ch, rng_seed)


def receive(phy: PhyConfig, received_air: BitVector) -> BitVector:
    """Inverse chain; returns candidate on-air packet bits for CRC checking."""
    return phy.decode(received_air)
