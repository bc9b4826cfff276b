"""A small packet-error-rate sweep, end to end.

Runs a reduced version of the narrow-strong simulation preset (fewer
packets, two PHYs), prints the per-cell results and the aggregate summary,
and writes the CSV that downstream plotting tools consume. The full-size
presets are available from the command line:

    stx-vote presets
    stx-vote sweep --preset sim-narrow-strong --out results.csv
"""

import dataclasses
import tempfile
from pathlib import Path

from stxvote import PhyKind
from stxvote.sweep import preset, run_sweep, summarize, write_csv

spec = dataclasses.replace(preset("sim-narrow-strong"),
                           phys=(PhyKind.BLE_1M, PhyKind.BLE_2M),
                           num_packets=30)
rows = run_sweep(spec)

print("cell results (30 packets each):")
print(f"  {'phy':<10} {'cfo_hz':>8} {'voting':<6} {'per':>6} {'corrections':>11}")
for r in rows:
    print(f"  {r['phy']:<10} {float(r['cfo_hz']):>8.0f} {r['voting']:<6} "
          f"{float(r['per']):>6.3f} {r['corrections']:>11}")

print()
print(summarize(rows))

out = Path(tempfile.mkdtemp()) / "mini_sweep.csv"
write_csv(rows, out)
print(f"\nwrote {len(rows)} rows to {out}")
print("render it with the companion package: "
      f"stx-vote-plot plot --csv {out} --out-dir plots/")
