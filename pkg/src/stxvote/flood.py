"""Single-hop synchronous-flooding round simulator.

A source and a forwarder transmit the same packet synchronously toward one
destination over repeated slots (the Rx-Tx-Tx flooding pattern). The
destination CRC-checks every slot; failed receptions feed the bit-voting
state, and a reconstruction is attempted once the round ends without a
correct reception. The forwarder is ideal: it always retransmits the true
packet, which isolates receiver-side voting behavior.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

import numpy as np

from . import voting
from .bits import BitVector
from .channel import BeatingScenario, realize_channel
from .packet import Packet, make_packet, verify_packet
from .phy import PhyConfig, receive, transmit_symbols


def _seed_seq(seed) -> np.random.SeedSequence:
    if isinstance(seed, np.random.SeedSequence):
        return seed
    return np.random.SeedSequence(seed)


class SlotStatus(enum.Enum):
    CORRECT_CRC = "correct"
    ERROR_CRC = "error"


@dataclass(frozen=True)
class RoundConfig:
    slots_per_round: int
    scenario: BeatingScenario
    phy: PhyConfig
    voting_enabled: bool = True
    phase_randomization: bool = True  # redraw each transmitter phase per slot
    payload_bytes: int = 255          # body size for generated packets

    def __post_init__(self):
        if self.slots_per_round < 1:
            raise ValueError("slots_per_round must be at least 1")


@dataclass
class RoundOutcome:
    packet_id: int
    per_slot_status: list[SlotStatus]
    recovered_by_voting: bool
    delivered: bool
    receptions_voted: int
    accepted_on_air: BitVector | None = field(default=None, repr=False)


@dataclass(frozen=True)
class SweepMetrics:
    per: float
    pdr: float
    corrections: int
    false_accepts: int
    num_packets: int


def run_round(cfg: RoundConfig, packet: Packet, rng_seed) -> RoundOutcome:
    """Simulate one flooding round for a single packet.

    Slot randomness (phases and symbol decisions) is derived per slot from
    rng_seed, so a voting-on and voting-off run with the same seed see
    byte-identical channels. The receiver stops listening once a correct
    reception arrives.
    """
    on_air = packet.on_air
    symbols = cfg.phy.encode(on_air)  # identical in every slot
    num_samples = len(symbols) * cfg.phy.samples_per_symbol
    fs = cfg.phy.sample_rate_hz

    state = voting.new_state(packet.id, len(on_air))
    statuses: list[SlotStatus] = []
    delivered = False
    accepted: BitVector | None = None

    slot_seeds = _seed_seq(rng_seed).spawn(cfg.slots_per_round)
    for slot_seq in slot_seeds:
        slot_rng = np.random.default_rng(slot_seq)
        scenario = cfg.scenario
        if cfg.phase_randomization:
            phases = slot_rng.uniform(0.0, 2 * np.pi, len(scenario.transmitters))
            scenario = scenario.with_phases(phases)
        ch = realize_channel(scenario, num_samples, fs)
        received_air = transmit_symbols(cfg.phy, symbols, ch, slot_rng)
        candidate = receive(cfg.phy, received_air)
        if verify_packet(candidate):
            statuses.append(SlotStatus.CORRECT_CRC)
            delivered = True
            accepted = candidate
            voting.on_correct_reception(state)
            break
        statuses.append(SlotStatus.ERROR_CRC)
        if cfg.voting_enabled:
            voting.accumulate(state, candidate)

    recovered = False
    if (not delivered and cfg.voting_enabled
            and state.num_accumulated >= voting.MIN_RECEPTIONS):
        corrected = voting.try_correct(state)
        if corrected is not None:
            recovered = True
            delivered = True
            accepted = corrected.on_air

    return RoundOutcome(packet_id=packet.id,
                        per_slot_status=statuses,
                        recovered_by_voting=recovered,
                        delivered=delivered,
                        receptions_voted=state.num_accumulated,
                        accepted_on_air=accepted)


def run_experiment(cfg: RoundConfig, num_packets: int, master_seed) -> SweepMetrics:
    """Independent rounds over fresh packets; aggregates PER/PDR.

    A false accept is any CRC-accepted packet (direct or reconstructed) that
    differs from the transmitted bits; it still counts as delivered, which
    is what a real receiver would observe.
    """
    if num_packets < 1:
        raise ValueError("num_packets must be at least 1")
    root = _seed_seq(master_seed)
    delivered = 0
    corrections = 0
    false_accepts = 0
    for packet_id, seq in enumerate(root.spawn(num_packets)):
        body_seq, round_seq = seq.spawn(2)
        body = BitVector.random(cfg.payload_bytes * 8,
                                np.random.default_rng(body_seq))
        packet = make_packet(packet_id, body)
        outcome = run_round(cfg, packet, round_seq)
        if outcome.delivered:
            delivered += 1
            if outcome.accepted_on_air != packet.on_air:
                false_accepts += 1
        if outcome.recovered_by_voting:
            corrections += 1
    pdr = delivered / num_packets
    return SweepMetrics(per=1.0 - pdr, pdr=pdr, corrections=corrections,
                        false_accepts=false_accepts, num_packets=num_packets)
