"""PER/PDR sweep harness over beating frequency x power delta x PHY x voting.

Cell seeds are derived from the master seed and the cell's position in the
(phy, cfo, power-delta) grid, independently of the voting flag, so a
voting-on cell and its voting-off twin see identical channels. Output rows
are ordered deterministically; identical spec + seed produce byte-identical
CSV files.
"""

from __future__ import annotations

import csv
import dataclasses
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from .channel import BeatingClass, BeatingScenario, classify_beating
from .flood import RoundConfig, run_experiment
from .phy import PhyKind, get_phy

CSV_SCHEMA_VERSION = 1
CSV_COLUMNS = ["phy", "cfo_hz", "power_delta_db", "snr_db", "beating_class",
               "voting", "num_packets", "per", "pdr", "corrections",
               "false_accepts", "seed"]

DEFAULT_SLOTS_PER_ROUND = 6
WIDE_CFO_GRID_HZ = tuple(np.linspace(500.0, 2000.0, 8))
NARROW_CFO_GRID_HZ = tuple(np.linspace(10e3, 40e3, 7))


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class SweepSpec:
    phys: tuple[PhyKind, ...] = tuple(PhyKind)
    cfo_values_hz: tuple[float, ...] = WIDE_CFO_GRID_HZ
    power_deltas_db: tuple[float, ...] = (0.0,)
    snr_db: float = 25.0
    num_packets: int = 200
    slots_per_round: int = DEFAULT_SLOTS_PER_ROUND
    master_seed: int = 1
    voting: str = "both"                    # both | on | off
    payload_bytes_ble: int = 255
    payload_bytes_802154: int = 125
    # Nominal class label for CSV grouping; None classifies each cell.
    beating_class: BeatingClass | None = None

    def validate(self) -> None:
        if not self.phys:
            raise ConfigError("phys must be nonempty")
        if not self.cfo_values_hz:
            raise ConfigError("cfo_values_hz must be nonempty")
        if any(c <= 0 for c in self.cfo_values_hz):
            raise ConfigError("all cfo values must be positive")
        if not self.power_deltas_db:
            raise ConfigError("power_deltas_db must be nonempty")
        if self.voting not in ("both", "on", "off"):
            raise ConfigError("voting must be one of: both, on, off")
        if self.num_packets < 1:
            raise ConfigError("num_packets must be at least 1")
        if self.slots_per_round < 1:
            raise ConfigError("slots_per_round must be at least 1")

    def payload_bytes(self, kind: PhyKind) -> int:
        if kind is PhyKind.IEEE_802154:
            return self.payload_bytes_802154
        return self.payload_bytes_ble

    def voting_modes(self) -> tuple[bool, ...]:
        return {"both": (False, True), "on": (True,), "off": (False,)}[self.voting]


PRESETS = {
    # one simulation scenario per beating class
    "sim-wide-strong": SweepSpec(cfo_values_hz=WIDE_CFO_GRID_HZ,
                                 power_deltas_db=(0.0,),
                                 beating_class=BeatingClass.WIDE_STRONG),
    "sim-narrow-strong": SweepSpec(cfo_values_hz=NARROW_CFO_GRID_HZ,
                                   power_deltas_db=(0.0,),
                                   beating_class=BeatingClass.NARROW_STRONG),
    "sim-wide-weak": SweepSpec(cfo_values_hz=WIDE_CFO_GRID_HZ,
                               power_deltas_db=(6.0,),
                               beating_class=BeatingClass.WIDE_WEAK),
    "sim-narrow-weak": SweepSpec(cfo_values_hz=NARROW_CFO_GRID_HZ,
                                 power_deltas_db=(6.0,),
                                 beating_class=BeatingClass.NARROW_WEAK),
    # Hardware-campaign parameters reproduced as simulated scenarios
    "local-255B": SweepSpec(cfo_values_hz=WIDE_CFO_GRID_HZ + NARROW_CFO_GRID_HZ,
                            power_deltas_db=(0.0,), num_packets=100,
                            payload_bytes_ble=255, payload_bytes_802154=125),
    "dcube-246B": SweepSpec(cfo_values_hz=WIDE_CFO_GRID_HZ + NARROW_CFO_GRID_HZ,
                            power_deltas_db=(0.0,), num_packets=200,
                            payload_bytes_ble=246, payload_bytes_802154=126),
}


def preset(name: str) -> SweepSpec:
    try:
        return PRESETS[name]
    except KeyError:
        raise ConfigError(
            f"unknown preset {name!r}; available: {', '.join(sorted(PRESETS))}"
        ) from None


def _cells(spec: SweepSpec):
    for pi, kind in enumerate(spec.phys):
        for ci, cfo in enumerate(spec.cfo_values_hz):
            for di, delta in enumerate(spec.power_deltas_db):
                seed = int(np.random.SeedSequence(
                    entropy=spec.master_seed,
                    spawn_key=(pi, ci, di)).generate_state(1)[0])
                for voting_on in spec.voting_modes():
                    yield kind, float(cfo), float(delta), voting_on, seed


def _run_cell(spec: SweepSpec, kind: PhyKind, cfo: float, delta: float,
              voting_on: bool, seed: int) -> dict:
    phy = get_phy(kind)
    payload = spec.payload_bytes(kind)
    on_air_bits = (payload + 2) * 8
    scenario = BeatingScenario.for_pair(
        cfo, delta, spec.snr_db,
        spec.beating_class or BeatingClass.WIDE_STRONG)
    cls = spec.beating_class or classify_beating(scenario, phy, on_air_bits)
    scenario = dataclasses.replace(scenario, beating_class=cls)
    cfg = RoundConfig(slots_per_round=spec.slots_per_round,
                      scenario=scenario, phy=phy, voting_enabled=voting_on,
                      payload_bytes=payload)
    m = run_experiment(cfg, spec.num_packets, seed)
    return {
        "phy": str(kind), "cfo_hz": f"{cfo:.6g}",
        "power_delta_db": f"{delta:.6g}", "snr_db": f"{spec.snr_db:.6g}",
        "beating_class": str(cls), "voting": "on" if voting_on else "off",
        "num_packets": m.num_packets, "per": f"{m.per:.6f}",
        "pdr": f"{m.pdr:.6f}", "corrections": m.corrections,
        "false_accepts": m.false_accepts, "seed": seed,
    }


def run_sweep(spec: SweepSpec, jobs: int = 1) -> list[dict]:
    """One row per (phy, cfo, power_delta, voting) cell, in grid order."""
    spec.validate()
    cells = list(_cells(spec))
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(_run_cell, *zip(*[(spec, *c) for c in cells])))
    else:
        rows = [_run_cell(spec, *c) for c in cells]
    return rows


def write_csv(rows: list[dict], path) -> None:
    with open(path, "w", newline="") as f:
        writer = csv.DictWriter(f, fieldnames=CSV_COLUMNS, lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)


def summarize(rows: list[dict]) -> str:
    """Human-readable per-PHY average PER for each voting mode."""
    acc: dict[tuple[str, str], list[float]] = {}
    for row in rows:
        acc.setdefault((row["phy"], row["voting"]), []).append(float(row["per"]))
    lines = [f"{'phy':<14}{'voting':<8}{'mean PER':>10}{'cells':>7}"]
    for (phy, voting), pers in sorted(acc.items()):
        lines.append(f"{phy:<14}{voting:<8}{np.mean(pers):>9.2%}{len(pers):>7}")
    return "\n".join(lines)


def spec_from_mapping(base: SweepSpec, overrides: dict[str, str]) -> SweepSpec:
    """Apply flat key=value overrides (config file or CLI) to a spec."""
    kwargs = {}
    valid = {f.name for f in dataclasses.fields(SweepSpec)}
    for key, raw in overrides.items():
        if key not in valid:
            raise ConfigError(f"unknown config key {key!r}")
        if key == "phys":
            kwargs[key] = tuple(PhyKind(v.strip()) for v in raw.split(","))
        elif key in ("cfo_values_hz", "power_deltas_db"):
            kwargs[key] = tuple(float(v) for v in raw.split(","))
        elif key in ("snr_db",):
            kwargs[key] = float(raw)
        elif key in ("num_packets", "slots_per_round", "master_seed",
                     "payload_bytes_ble", "payload_bytes_802154"):
            kwargs[key] = int(raw)
        elif key == "voting":
            kwargs[key] = raw
        elif key == "beating_class":
            kwargs[key] = BeatingClass(raw) if raw not in ("", "auto") else None
    return dataclasses.replace(base, **kwargs)


def load_config(path) -> dict[str, str]:
    """Flat key=value config file; '#' starts a comment."""
    out: dict[str, str] = {}
    with open(path) as f:
        for lineno, line in enumerate(f, 1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ConfigError(f"{path}:{lineno}: expected key=value")
            key, value = line.split("=", 1)
            out[key.strip()] = value.strip()
    return out
