"""Where the bit errors land.

Under beating, errors are not independent: they cluster in the envelope
valleys. This script transmits one packet per PHY through a strong-beating
channel and prints an error map, showing (a) periodic error bursts for the
uncoded PHYs under narrow beating and (b) how the coded PHYs absorb the
same channel.
"""

import numpy as np

from stxvote import (BeatingClass, BeatingScenario, PhyKind, get_phy,
                     make_packet, realize_channel, receive, transmit,
                     BitVector)


def error_map(kind: PhyKind, cfo_hz: float, seed: int) -> str:
    phy = get_phy(kind)
    body = BitVector.random(32 * 8, np.random.default_rng(seed))
    pkt = make_packet(0, body)
    scenario = BeatingScenario.for_pair(cfo_hz, 0.0, 25.0,
                                        BeatingClass.NARROW_STRONG)
    n = phy.num_air_symbols(len(pkt.on_air)) * phy.samples_per_symbol
    ch = realize_channel(scenario, n, phy.sample_rate_hz)
    candidate = receive(phy, transmit(phy, pkt.on_air, ch, seed))
    errors = candidate.array ^ pkt.on_air.array
    # one character per 8 packet bits: '.' clean, digits = error count
    counts = errors.reshape(-1, 8).sum(axis=1)
    return "".join("." if c == 0 else str(c) for c in counts), int(errors.sum())


print("32-byte packet, 20 kHz CFO, equal powers, 25 dB SNR")
print("one character per byte of the on-air packet ('.' = error-free):\n")
for kind in PhyKind:
    row, total = error_map(kind, cfo_hz=20_000.0, seed=7)
    print(f"  {kind.value:<12} {total:3d} bit errors  {row}")

print("\nThe uncoded PHYs show periodic bursts -- one per envelope null --")
print("while the convolutional and DSSS PHYs correct or shrink them.")

print("\nsame packet under wide beating (1 kHz CFO): at most one null")
print("falls inside the packet, so errors come in a single clump:\n")
for kind in (PhyKind.BLE_1M, PhyKind.BLE_2M):
    row, total = error_map(kind, cfo_hz=1_000.0, seed=7)
    print(f"  {kind.value:<12} {total:3d} bit errors  {row}")
