"""Bit-voting error correction over repeated erroneous receptions.

The receiver keeps one signed counter per on-air bit. Every CRC-failed
reception of the current packet increments counters where the received bit
is 1 and decrements where it is 0. Reconstruction takes the sign of each
counter (positive -> 1, otherwise 0; ties deliberately bias toward 0) and
is accepted only if the reconstructed CRC checks out. A correct reception
suspends voting until the packet id changes.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .bits import BitVector
from .packet import Packet, PacketId, verify_packet

MIN_RECEPTIONS = 2

# Counters are int32; the bound is a contract check, not a physical limit.
MAX_RECEPTIONS = 2 ** 30


@dataclass
class VoteState:
    packet_id: PacketId
    votes: np.ndarray = field(repr=False)
    num_accumulated: int = 0
    suspended: bool = False

    def copy(self) -> "VoteState":
        return VoteState(self.packet_id, self.votes.copy(),
                         self.num_accumulated, self.suspended)


def new_state(packet_id: PacketId, on_air_bits: int) -> VoteState:
    if on_air_bits < 24:
        raise ValueError("on-air length must be at least 24 bits")
    return VoteState(packet_id=packet_id,
                     votes=np.zeros(on_air_bits, dtype=np.int32))


def accumulate(state: VoteState, received: BitVector) -> VoteState:
    """Fold one CRC-failed reception into the vote counters (in place)."""
    if state.suspended:
        raise ValueError("voting suspended")
    if len(received) != state.votes.size:
        raise ValueError("reception length does not match the vote array")
    if state.num_accumulated >= MAX_RECEPTIONS:
        raise ValueError("vote counters exhausted")
    state.votes += 2 * received.array.astype(np.int32) - 1
    state.num_accumulated += 1
    return state


def reconstruct(state: VoteState) -> BitVector:
    """Majority bit per index; a tied or empty counter yields 0."""
    return BitVector((state.votes > 0).astype(np.uint8))


def try_correct(state: VoteState) -> Packet | None:
    """CRC-gated reconstruction attempt.

    Returns the recovered packet, or None on CRC mismatch (the vote state is
    left intact so later receptions can keep voting). Fewer than two
    accumulated receptions is a contract violation, not a mismatch.
    """
    if state.num_accumulated < MIN_RECEPTIONS:
        raise ValueError("insufficient receptions")
    candidate = reconstruct(state)
    if not verify_packet(candidate):
        return None
    return Packet(id=state.packet_id, body=candidate[:-16], crc=candidate[-16:])


def on_correct_reception(state: VoteState) -> VoteState:
    """Suspend all correction activity after a CRC-valid reception."""
    state.suspended = True
    return state


def reset_for(state: VoteState, new_id: PacketId, on_air_bits: int) -> VoteState:
    if new_id == state.packet_id:
        raise ValueError("not a new packet")
    return new_state(new_id, on_air_bits)
