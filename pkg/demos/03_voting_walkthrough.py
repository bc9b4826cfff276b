"""Bit voting, step by step.

A receiver that hears several CRC-failed copies of the same packet can
recover it without retransmission metadata: every reception casts a +1/-1
vote per bit position, the majority bit wins (ties go to 0), and the CRC of
the reconstruction is the accept/reject gate. This script corrupts three
copies of one packet with disjoint error masks and walks the voting state
through recovery.
"""

import numpy as np

from stxvote import (BitVector, accumulate, make_packet, new_state,
                     reconstruct, try_correct, verify_packet)

rng = np.random.default_rng(11)
pkt = make_packet(42, BitVector.from_hex("c0ffee00deadbeef"))
on_air = pkt.on_air
print(f"packet id {pkt.id}: body {pkt.body.to_hex()}, crc 0x{pkt.crc.to_hex()}, "
      f"{len(on_air)} bits on air\n")

# Three receptions, each wrong in its own 10 positions (disjoint by
# construction, so every position is correct in at least 2 of 3 copies).
positions = rng.choice(len(on_air), size=30, replace=False)
state = new_state(pkt.id, len(on_air))
for k in range(3):
    copy = on_air
    for p in positions[k * 10:(k + 1) * 10]:
        copy = copy.flip(int(p))
    assert not verify_packet(copy), "each copy alone fails its CRC"
    accumulate(state, copy)
    guess = reconstruct(state)
    wrong = int(np.sum(guess.array != on_air.array))
    print(f"after reception {k + 1}: majority guess has {wrong:2d} wrong bits, "
          f"counters in [{state.votes.min():+d}, {state.votes.max():+d}]")

recovered = try_correct(state)
assert recovered is not None and recovered.on_air == on_air
print(f"\ntry_correct: CRC matches -> packet recovered "
      f"(body {recovered.body.to_hex()})")

# The CRC gate is what keeps voting safe: a majority that is still wrong is
# rejected, not delivered.
bad = new_state(pkt.id, len(on_air))
for _ in range(2):
    accumulate(bad, on_air.flip(3).flip(40))  # same error twice -> majority wrong
assert try_correct(bad) is None
print("a consistent 2-of-2 error survives the vote but fails the CRC -> "
      "rejected (returns None)")
