"""Command-line harness: PER/PDR sweeps, single-round traces, preset listing."""

from __future__ import annotations

import argparse
import sys

import numpy as np

from . import sweep as sweep_mod
from .bits import BitVector
from .channel import BeatingClass, BeatingScenario, classify_beating
from .flood import RoundConfig, run_round
from .packet import make_packet
from .phy import PhyKind, get_phy
from .sweep import ConfigError, SweepSpec, preset


def _add_override_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--seed", type=int, help="override master seed")
    parser.add_argument("--packets", type=int, help="override packets per cell")
    parser.add_argument("--slots", type=int, help="override slots per round")
    parser.add_argument("--snr", type=float, help="override SNR in dB")
    parser.add_argument("--phys", help="comma-separated PHY kinds")
    parser.add_argument("--voting", choices=["both", "on", "off"])


def _overrides_from_args(args) -> dict[str, str]:
    mapping = {"seed": "master_seed", "packets": "num_packets",
               "slots": "slots_per_round", "snr": "snr_db",
               "phys": "phys", "voting": "voting"}
    out = {}
    for arg, key in mapping.items():
        value = getattr(args, arg, None)
        if value is not None:
            out[key] = str(value)
    return out


def cmd_sweep(args) -> int:
    if args.preset:
        spec = preset(args.preset)
    else:
        spec = SweepSpec()
    if args.config:
        spec = sweep_mod.spec_from_mapping(spec, sweep_mod.load_config(args.config))
    spec = sweep_mod.spec_from_mapping(spec, _overrides_from_args(args))
    rows = sweep_mod.run_sweep(spec, jobs=args.jobs)
    if args.out:
        sweep_mod.write_csv(rows, args.out)
        print(f"wrote {len(rows)} rows to {args.out}")
    print(sweep_mod.summarize(rows))
    return 0


def cmd_round(args) -> int:
    phy = get_phy(args.phy)
    payload = args.payload_bytes
    on_air_bits = (payload + 2) * 8
    scenario = BeatingScenario.for_pair(args.cfo, args.power_delta, args.snr,
                                        BeatingClass.WIDE_STRONG)
    cls = classify_beating(scenario, phy, on_air_bits)
    rng = np.random.default_rng(args.seed)
    packet = make_packet(0, BitVector.random(payload * 8, rng))
    cfg = RoundConfig(slots_per_round=args.slots, scenario=scenario, phy=phy,
                      voting_enabled=not args.no_voting, payload_bytes=payload)
    outcome = run_round(cfg, packet, args.seed)
    print(f"phy={phy.kind}  cfo={args.cfo:g} Hz  power_delta={args.power_delta:g} dB"
          f"  snr={args.snr:g} dB  class={cls}")
    print(f"payload={payload} B  on-air={payload + 2} B  slots={args.slots}"
          f"  voting={'off' if args.no_voting else 'on'}  seed={args.seed}")
    for i, status in enumerate(outcome.per_slot_status, 1):
        print(f"  slot {i}: {status.value}")
    print(f"receptions voted: {outcome.receptions_voted}")
    print(f"recovered by voting: {outcome.recovered_by_voting}")
    print(f"delivered: {outcome.delivered}")
    return 0


def cmd_presets(_args) -> int:
    for name in sorted(sweep_mod.PRESETS):
        spec = sweep_mod.PRESETS[name]
        label = str(spec.beating_class) if spec.beating_class else "auto"
        print(f"{name:<20} cfo={min(spec.cfo_values_hz):g}-"
              f"{max(spec.cfo_values_hz):g} Hz  delta={spec.power_deltas_db}"
              f" dB  packets={spec.num_packets}  class={label}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="stx-vote",
        description="Beating-effect PER sweeps with and without bit voting")
    sub = parser.add_subparsers(dest="command", required=True)

    p_sweep = sub.add_parser("sweep", help="run a PER/PDR sweep and emit CSV")
    p_sweep.add_argument("--preset", help="named scenario preset")
    p_sweep.add_argument("--config", help="key=value config file")
    p_sweep.add_argument("--out", help="CSV output path")
    p_sweep.add_argument("--jobs", type=int, default=1,
                         help="worker processes for sweep cells")
    _add_override_args(p_sweep)
    p_sweep.set_defaults(func=cmd_sweep)

    p_round = sub.add_parser("round", help="trace a single flooding round")
    p_round.add_argument("--phy", default="ble-1m",
                         choices=[k.value for k in PhyKind])
    p_round.add_argument("--cfo", type=float, default=1000.0)
    p_round.add_argument("--power-delta", type=float, default=0.0)
    p_round.add_argument("--snr", type=float, default=25.0)
    p_round.add_argument("--slots", type=int,
                         default=sweep_mod.DEFAULT_SLOTS_PER_ROUND)
    p_round.add_argument("--payload-bytes", type=int, default=255)
    p_round.add_argument("--seed", type=int, default=1)
    p_round.add_argument("--no-voting", action="store_true")
    p_round.set_defaults(func=cmd_round)

    p_list = sub.add_parser("presets", help="list scenario presets")
    p_list.set_defaults(func=cmd_presets)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # a failed cell must yield nonzero exit status
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
