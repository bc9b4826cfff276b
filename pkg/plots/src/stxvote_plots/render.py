"""Figure rendering for sweep CSVs.

Two figure families:

* PER panels — one image per beating class, average packet error rate (%)
  against beating frequency (Hz, log scale), one series per (phy, voting)
  pair labeled "<phy> / voting-<on|off>".
* PDR bars — one grouped bar chart of mean packet delivery ratio per
  (phy, voting) pair across the whole CSV.

Output is deterministic: fixed styling, sorted groupings, and no embedded
timestamps, so rerunning on the same CSV reproduces identical files.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from pathlib import Path
from statistics import mean

import matplotlib

matplotlib.use("Agg")
matplotlib.rcParams["svg.hashsalt"] = "stx-vote-plots"

import matplotlib.pyplot as plt  # noqa: E402

from .schema import SweepRow, load_rows  # noqa: E402

FORMATS = ("png", "svg")

# stable, colorblind-friendly series colors keyed by series order
_CYCLE = ("#0173b2", "#de8f05", "#029e73", "#d55e00", "#cc78bc",
          "#ca9161", "#fbafe4", "#949494", "#ece133", "#56b4e9")


@dataclass(frozen=True)
class PlotSpec:
    input_csv: Path
    out_dir: Path
    image_format: str = "png"

    def __post_init__(self):
        object.__setattr__(self, "input_csv", Path(self.input_csv))
        object.__setattr__(self, "out_dir", Path(self.out_dir))
        if self.image_format not in FORMATS:
            raise ValueError(f"image format must be one of {FORMATS}")


def series_label(phy: str, voting: str) -> str:
    return f"{phy} / voting-{voting}"


def _per_series(rows: list[SweepRow]):
    """-> {beating_class: {(phy, voting): (sorted cfos, mean PER %)}}"""
    cells = defaultdict(lambda: defaultdict(list))
    for r in rows:
        cells[r.beating_class][(r.phy, r.voting)].append((r.cfo_hz, r.per))
    out = {}
    for cls in sorted(cells):
        out[cls] = {}
        for key in sorted(cells[cls]):
            by_cfo = defaultdict(list)
            for cfo, per in cells[cls][key]:
                by_cfo[cfo].append(per)
            cfos = sorted(by_cfo)
            out[cls][key] = (cfos, [100.0 * mean(by_cfo[c]) for c in cfos])
    return out


def build_per_figures(rows: list[SweepRow]) -> dict[str, plt.Figure]:
    """One figure per beating class present in the CSV."""
    figures = {}
    for cls, series in _per_series(rows).items():
        fig, ax = plt.subplots(figsize=(6.4, 4.2))
        for i, ((phy, voting), (cfos, pers)) in enumerate(series.items()):
            ax.plot(cfos, pers, marker="o", markersize=4,
                    linestyle="-" if voting == "on" else "--",
                    color=_CYCLE[i % len(_CYCLE)],
                    label=series_label(phy, voting))
        ax.set_xscale("log")
        ax.set_xlabel("beating frequency (Hz)")
        ax.set_ylabel("average PER (%)")
        ax.set_ylim(-2, 102)
        ax.set_title(f"average PER, {cls} beating")
        ax.grid(True, which="both", alpha=0.3)
        ax.legend(fontsize=7, ncol=2)
        fig.tight_layout()
        figures[cls] = fig
    return figures


def build_pdr_figure(rows: list[SweepRow]) -> plt.Figure:
    """Grouped bars: mean PDR per PHY, voting off vs on."""
    by_key = defaultdict(list)
    for r in rows:
        by_key[(r.phy, r.voting)].append(r.pdr)
    phys = sorted({phy for phy, _ in by_key})
    fig, ax = plt.subplots(figsize=(6.4, 4.2))
    width = 0.38
    for j, voting in enumerate(("off", "on")):
        heights = [100.0 * mean(by_key[(p, voting)])
                   if (p, voting) in by_key else 0.0 for p in phys]
        ax.bar([i + (j - 0.5) * width for i in range(len(phys))], heights,
               width=width, color=_CYCLE[j],
               label=f"voting-{voting}")
    ax.set_xticks(range(len(phys)), phys, rotation=20, fontsize=8)
    ax.set_ylabel("average PDR (%)")
    ax.set_ylim(0, 105)
    ax.set_title("average PDR per PHY")
    ax.grid(True, axis="y", alpha=0.3)
    ax.legend(fontsize=8)
    fig.tight_layout()
    return fig


def _save(fig: plt.Figure, path: Path, fmt: str):
    # strip volatile metadata so reruns are byte-identical
    metadata = {"Date": None} if fmt == "svg" else {"Software": None}
    fig.savefig(path, format=fmt, dpi=120, metadata=metadata)
    plt.close(fig)


def render(spec: PlotSpec) -> list[Path]:
    """Validate the CSV and write every figure; returns the written paths."""
    rows = load_rows(spec.input_csv)
    spec.out_dir.mkdir(parents=True, exist_ok=True)
    written = []
    for cls, fig in build_per_figures(rows).items():
        path = spec.out_dir / f"per_{cls}.{spec.image_format}"
        _save(fig, path, spec.image_format)
        written.append(path)
    path = spec.out_dir / f"pdr.{spec.image_format}"
    _save(build_pdr_figure(rows), path, spec.image_format)
    written.append(path)
    return written
