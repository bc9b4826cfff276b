"""Beating-effect simulator and bit-voting error correction for
synchronous-transmission wireless networks."""

from .bits import BitVector
from .channel import (BeatingClass, BeatingScenario, ChannelRealization,
                      TransmitterProfile, classify_beating, envelope,
                      realize_channel)
from .flood import (RoundConfig, RoundOutcome, SlotStatus, SweepMetrics,
                    run_experiment, run_round)
from .packet import Packet, PacketId, crc16, make_packet, verify_packet
from .phy import (PHYS, PhyConfig, PhyKind, airtime, ber, dsss_despread,
                  dsss_spread, get_phy, pattern_demap, pattern_map, receive,
                  transmit)
from .fec import conv_encode, viterbi_decode
from .sweep import PRESETS, SweepSpec, preset, run_sweep, write_csv
from .voting import (VoteState, accumulate, new_state, on_correct_reception,
                     reconstruct, reset_for, try_correct)

__version__ = "0.1.0"
