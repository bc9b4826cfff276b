"""Beating channel: superposition of frequency-offset identical transmissions.

Because synchronous transmitters send identical payloads, the composite
channel reduces to a multiplicative envelope on a single data waveform.
The envelope of K offset carriers at sample n is

    E[n] = | sum_k A_k * exp(j * (2*pi*cfo_k*n/fs + phase0_k)) |

and additive white Gaussian noise of power sigma^2 gives the instantaneous
per-sample linear SNR  gamma[n] = E[n]^2 / sigma^2, with sigma^2 chosen so
that sum_k A_k^2 / sigma^2 matches the nominal SNR.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, replace

import numpy as np

from .bits import BitVector  # noqa: F401  (re-exported convenience)


class BeatingClass(enum.Enum):
    WIDE_STRONG = "wide-strong"
    WIDE_WEAK = "wide-weak"
    NARROW_STRONG = "narrow-strong"
    NARROW_WEAK = "narrow-weak"

    def __str__(self) -> str:
        return self.value


# A scenario is Wide when the beat period is at least 1/WIDE_THRESHOLD of the
# packet airtime. Strong when the dominant pair differs by at most
# STRONG_THRESHOLD_DB; differences above CAPTURE_THRESHOLD_DB are out of scope
# (capture-effect demodulation is not modeled).
WIDE_THRESHOLD = 4.0
STRONG_THRESHOLD_DB = 3.0
CAPTURE_THRESHOLD_DB = 9.0


@dataclass(frozen=True)
class TransmitterProfile:
    amplitude: float          # linear voltage gain (1.0 == 0 dBm reference)
    cfo_hz: float             # carrier frequency offset relative to the receiver
    phase0_rad: float = 0.0   # phase at the first sample

    def __post_init__(self):
        if self.amplitude <= 0:
            raise ValueError("amplitude must be positive")
        if not 0.0 <= self.phase0_rad < 2 * np.pi:
            raise ValueError("phase0_rad must lie in [0, 2*pi)")

    @classmethod
    def from_power_dbm(cls, power_dbm: float, cfo_hz: float,
                       phase0_rad: float = 0.0) -> "TransmitterProfile":
        return cls(amplitude=10.0 ** (power_dbm / 20.0), cfo_hz=cfo_hz,
                   phase0_rad=phase0_rad)

    def with_phase(self, phase0_rad: float) -> "TransmitterProfile":
        return replace(self, phase0_rad=phase0_rad)

    @property
    def power_dbm(self) -> float:
        return 20.0 * np.log10(self.amplitude)


@dataclass(frozen=True)
class BeatingScenario:
    transmitters: tuple[TransmitterProfile, ...]
    snr_db: float
    beating_class: BeatingClass

    def __post_init__(self):
        if len(self.transmitters) < 2:
            raise ValueError("a beating scenario needs at least two transmitters")

    @classmethod
    def for_pair(cls, cfo_hz: float, power_delta_db: float, snr_db: float,
                 beating_class: BeatingClass,
                 phases: tuple[float, float] = (0.0, 0.0)) -> "BeatingScenario":
        """Two transmitters: a 0 dBm reference and one offset by cfo_hz and
        attenuated by power_delta_db."""
        tx0 = TransmitterProfile(1.0, 0.0, phases[0])
        tx1 = TransmitterProfile(10.0 ** (-power_delta_db / 20.0), cfo_hz, phases[1])
        return cls((tx0, tx1), snr_db, beating_class)

    def with_phases(self, phases) -> "BeatingScenario":
        txs = tuple(tx.with_phase(p % (2 * np.pi))
                    for tx, p in zip(self.transmitters, phases))
        return replace(self, transmitters=txs)

    @property
    def total_power(self) -> float:
        return float(sum(tx.amplitude ** 2 for tx in self.transmitters))


@dataclass(frozen=True)
class ChannelRealization:
    sample_rate_hz: float
    snr_per_sample: np.ndarray       # instantaneous linear SNR gamma[n]
    envelope_per_sample: np.ndarray  # linear amplitude E[n]


def envelope(transmitters, n, fs: float):
    """Composite amplitude at sample index n (scalar or array)."""
    transmitters = list(transmitters)
    if not transmitters:
        raise ValueError("transmitters must be nonempty")
    max_cfo = max(abs(tx.cfo_hz) for tx in transmitters)
    if fs <= 2 * max_cfo:
        raise ValueError("undersampled beating")
    n = np.asarray(n, dtype=np.float64)
    total = np.zeros(n.shape, dtype=np.complex128)
    for tx in transmitters:
        total += tx.amplitude * np.exp(
            1j * (2 * np.pi * tx.cfo_hz * n / fs + tx.phase0_rad))
    out = np.abs(total)
    return float(out) if out.ndim == 0 else out


# cos/sin of 2*pi*cfo*n/fs per (cfo, fs, length); CFOs are quasi-static for a
# whole experiment while phases are redrawn per slot, so caching the angle
# arrays makes per-slot realizations cheap.
_TRIG_CACHE: dict[tuple, tuple[np.ndarray, np.ndarray]] = {}


def _cos_sin(cfo_hz: float, fs: float, n: int):
    key = (cfo_hz, fs, n)
    if key not in _TRIG_CACHE:
        if len(_TRIG_CACHE) > 64:
            _TRIG_CACHE.clear()
        angle = 2 * np.pi * cfo_hz * np.arange(n) / fs
        _TRIG_CACHE[key] = (np.cos(angle), np.sin(angle))
    return _TRIG_CACHE[key]


def _fast_envelope(transmitters, num_samples: int, fs: float) -> np.ndarray:
    """Same composite amplitude as envelope(), using cached trig arrays and
    the angle-addition identity to fold in per-slot phases."""
    re = np.zeros(num_samples)
    im = np.zeros(num_samples)
    for tx in transmitters:
        c, s = _cos_sin(tx.cfo_hz, fs, num_samples)
        cp = tx.amplitude * np.cos(tx.phase0_rad)
        sp = tx.amplitude * np.sin(tx.phase0_rad)
        re += c * cp - s * sp
        im += s * cp + c * sp
    return np.sqrt(re * re + im * im)


def realize_channel(scenario: BeatingScenario, num_samples: int, fs: float,
                    rng_seed: int = 0) -> ChannelRealization:
    """Instantaneous-SNR series for a scenario.

    The amplitude-only model is analytic, so the series is fully determined
    by the scenario; rng_seed is accepted for interface stability (stochastic
    symbol decisions are seeded separately at the PHY).
    """
    if num_samples < 1:
        raise ValueError("num_samples must be at least 1")
    max_cfo = max(abs(tx.cfo_hz) for tx in scenario.transmitters)
    if fs <= 2 * max_cfo:
        raise ValueError("undersampled beating")
    env = _fast_envelope(scenario.transmitters, num_samples, fs)
    noise_power = scenario.total_power / 10.0 ** (scenario.snr_db / 10.0)
    snr = env ** 2 / noise_power
    snr.flags.writeable = False
    env.flags.writeable = False
    return ChannelRealization(fs, snr, env)


def classify_beating(scenario: BeatingScenario, phy, packet_bits: int) -> BeatingClass:
    """Classify the scenario for a given PHY and on-air packet length."""
    if len(scenario.transmitters) < 2:
        raise ValueError("no beating")
    amps = sorted((tx.amplitude for tx in scenario.transmitters), reverse=True)
    delta_db = 20.0 * np.log10(amps[0] / amps[-1])
    if delta_db > CAPTURE_THRESHOLD_DB:
        raise ValueError("power difference exceeds the capture threshold; "
                         "capture-effect demodulation is out of scope")
    # dominant pair: the two strongest transmitters
    by_amp = sorted(scenario.transmitters, key=lambda t: t.amplitude, reverse=True)
    delta_f = abs(by_amp[0].cfo_hz - by_amp[1].cfo_hz)
    airtime = phy.num_air_symbols(packet_bits) / phy.symbol_rate_hz
    wide = delta_f == 0.0 or (1.0 / delta_f) >= airtime / WIDE_THRESHOLD
    strong = delta_db <= STRONG_THRESHOLD_DB
    if wide:
        return BeatingClass.WIDE_STRONG if strong else BeatingClass.WIDE_WEAK
    return BeatingClass.NARROW_STRONG if strong else BeatingClass.NARROW_WEAK
