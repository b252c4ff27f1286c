"""Command-line front end.

Subcommands:

* ``analyze``    - one channel: regime report (K = 3) or chain analysis with
                   segmentation (other K, or K = 3 with a very-strong link);
* ``oracle``     - grid-oracle dump for one channel;
* ``verify``     - seeded randomized campaign comparing the closed form
                   against the grid oracle;
* ``regime-map`` - CSV sweep of the (a1, a2) plane for a 3-user chain;
* ``decompose``  - very-strong removal plus greedy segmentation.

All JSON documents carry a top-level ``"schema_version": 1`` and CSV files a
``# schema_version=1`` comment line.  Rates are printed with 9 significant
digits so outputs are byte-stable across runs.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

import numpy as np

from .channel import (
    ChannelConfig,
    InvalidChannelError,
    channel_from_json,
    channel_to_json,
    gaussian_capacity,
    very_strong_threshold,
)
from .decompose import decompose
from .polytope import DEFAULT_MAX_GRID_POINTS, GridResourceError
from .regimes import RegimeError, classify, splitting_regime_label
from .sumrate import max_sum_rate
from .verify import DEFAULT_TOLERANCE, verify_campaign

__all__ = ["main", "build_parser"]

SCHEMA_VERSION = 1
_SIG_DIGITS = 9


def _round_floats(obj):
    """Round every float in a JSON-ready structure to 9 significant digits."""
    if isinstance(obj, bool):
        return obj
    if isinstance(obj, float):
        return float(f"{obj:.{_SIG_DIGITS}g}")
    if isinstance(obj, dict):
        return {k: _round_floats(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_round_floats(v) for v in obj]
    return obj


def _fmt(x: float) -> str:
    return f"{float(x):.{_SIG_DIGITS}g}"


def _load_channel(source: str) -> ChannelConfig:
    text = source.strip()
    if not text.startswith("{"):
        with open(source, encoding="utf-8") as fh:
            text = fh.read()
    return channel_from_json(text)


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _emit_json(doc: dict, out: Optional[str]) -> None:
    _emit(json.dumps(_round_floats(doc), indent=2) + "\n", out)


def _has_very_strong(cfg: ChannelConfig) -> bool:
    return any(
        cfg.a[i] >= very_strong_threshold(cfg.P[i + 1]) for i in range(cfg.K - 1)
    )


def cmd_analyze(args) -> int:
    cfg = _load_channel(args.channel)
    if cfg.K == 3 and not _has_very_strong(cfg):
        doc = {
            "schema_version": SCHEMA_VERSION,
            "kind": "regime_report",
            "channel": channel_to_json(cfg),
            "report": classify(cfg).to_json_dict(),
        }
    else:
        result = max_sum_rate(cfg)
        doc = {
            "schema_version": SCHEMA_VERSION,
            "kind": "chain_analysis",
            "channel": channel_to_json(cfg),
            "sum_rate": result.sum_rate,
            "effective_gains": [float(h) for h in result.gains.h],
            "per_user_rates": [float(r) for r in result.gains.r_star],
            "optimal_split": [float(g) for g in result.split.gamma],
            "segmentation": decompose(cfg).to_json_dict(),
        }
    _emit_json(doc, args.out)
    return 0


def cmd_oracle(args) -> int:
    from .verify import check_channel

    cfg = _load_channel(args.channel)
    record = check_channel(cfg, args.grid_step, max_grid_points=args.max_grid_points)
    doc = {
        "schema_version": SCHEMA_VERSION,
        "kind": "oracle_report",
        "channel": channel_to_json(cfg),
        "grid_step": args.grid_step,
        "best_sum": record.best_sum,
        "best_split": list(record.best_split),
        "closed_form": record.closed_form,
        "max_violation": record.max_violation,
        "split_gap": record.split_gap,
    }
    _emit_json(doc, args.out)
    return 0 if record.max_violation <= args.tolerance else 1


def cmd_verify(args) -> int:
    forced = [_load_channel(args.channel)] if args.channel else None
    if forced is None and args.seed is None:
        raise ValueError("verify requires --seed unless --channel is given")
    report = verify_campaign(
        count=args.count,
        k_range=(args.k_min, args.k_max),
        grid_step=args.grid_step,
        seed=args.seed,
        tolerance=args.tolerance,
        max_grid_points=args.max_grid_points,
        channels=forced,
    )
    doc = {"schema_version": SCHEMA_VERSION, "kind": "verify_report"}
    doc.update(
        report.to_json_dict(include_channels=bool(forced) or args.include_channels)
    )
    _emit_json(doc, args.out)
    return 0 if report.passed else 1


def cmd_decompose(args) -> int:
    cfg = _load_channel(args.channel)
    doc = {"schema_version": SCHEMA_VERSION}
    doc.update(decompose(cfg).to_json_dict())
    _emit_json(doc, args.out)
    return 0


def _parse_range(text: str) -> tuple[float, float, int]:
    parts = text.split(",")
    if len(parts) != 3:
        raise ValueError(f"range must be min,max,steps - got {text!r}")
    lo, hi, steps = float(parts[0]), float(parts[1]), int(parts[2])
    if steps < 1:
        raise ValueError(f"steps must be >= 1, got {steps}")
    if not lo < hi:
        raise ValueError(f"range must have min < max, got {text!r}")
    return lo, hi, steps


def _parse_powers(text: str) -> tuple[float, float, float]:
    parts = [float(p) for p in text.split(",")]
    if len(parts) == 1:
        parts = parts * 3
    if len(parts) != 3:
        raise ValueError(f"--p takes one power or three, got {text!r}")
    return tuple(parts)


def _grid(lo: float, hi: float, steps: int) -> np.ndarray:
    # Half-open [lo, hi): the right endpoint is excluded, keeping the default
    # sweep clear of the very-strong boundary.
    return np.linspace(lo, hi, steps, endpoint=False)


def cmd_regime_map(args) -> int:
    p = _parse_powers(args.p)
    a1_lo, a1_hi, a1_steps = _parse_range(args.a1)
    a2_lo, a2_hi, a2_steps = _parse_range(args.a2)
    a1_values = _grid(a1_lo, a1_hi, a1_steps)
    a2_values = _grid(a2_lo, a2_hi, a2_steps)

    thresholds = (very_strong_threshold(p[1]), very_strong_threshold(p[2]))
    if not args.include_very_strong:
        if a1_values[-1] >= thresholds[0] or a2_values[-1] >= thresholds[1]:
            raise ValueError(
                "sweep reaches a very-strong gain; pass --include-very-strong "
                f"or keep a1 < {thresholds[0]:g} and a2 < {thresholds[1]:g}"
            )

    lines = [f"# schema_version={SCHEMA_VERSION}"]
    lines.append("a1,a2,splitting_regime,capacity_status,achievable,upper")
    interference_free = float(np.sum(gaussian_capacity(np.asarray(p))))
    for a1 in a1_values:
        for a2 in a2_values:
            cfg = ChannelConfig(K=3, a=(float(a1), float(a2)), P=p)
            if _has_very_strong(cfg):
                result = max_sum_rate(cfg)
                regime = splitting_regime_label(result.split)
                status = "VeryStrong"
                achievable = result.sum_rate
                total = decompose(cfg).total
                upper = total if total is not None else interference_free
            else:
                report = classify(cfg)
                regime = report.splitting_regime
                status = report.capacity_status
                achievable = report.achievable
                upper = report.upper
            lines.append(
                f"{_fmt(a1)},{_fmt(a2)},{regime},{status},{_fmt(achievable)},{_fmt(upper)}"
            )
    _emit("\n".join(lines) + "\n", args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="zcascade",
        description="Sum-capacity analysis of cascade Gaussian Z-interference channels.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_channel(p, required=True):
        p.add_argument(
            "--channel",
            required=required,
            help="channel JSON: inline string or path to a file",
        )

    def add_common(p):
        p.add_argument("--out", help="write output to this path instead of stdout")

    def add_grid(p):
        p.add_argument(
            "--grid-step",
            type=float,
            default=0.05,
            help="split-grid step; must divide [0, 1] evenly (default 0.05)",
        )
        p.add_argument(
            "--max-grid-points",
            type=int,
            default=DEFAULT_MAX_GRID_POINTS,
            help="resource cap on grid size",
        )
        p.add_argument(
            "--tolerance",
            type=float,
            default=DEFAULT_TOLERANCE,
            help="largest acceptable oracle-minus-closed-form violation",
        )

    p = sub.add_parser("analyze", help="classify one channel or analyze a chain")
    add_channel(p)
    add_common(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("oracle", help="grid-oracle dump for one channel")
    add_channel(p)
    add_common(p)
    add_grid(p)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("verify", help="randomized closed-form vs oracle campaign")
    add_channel(p, required=False)
    add_common(p)
    add_grid(p)
    p.add_argument("--count", type=int, default=100, help="number of random channels")
    p.add_argument("--k-min", type=int, default=2, help="smallest chain length")
    p.add_argument("--k-max", type=int, default=5, help="largest chain length")
    p.add_argument("--seed", type=int, help="generator seed (required when sampling)")
    p.add_argument(
        "--include-channels",
        action="store_true",
        help="embed per-channel records in the report",
    )
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("regime-map", help="CSV sweep of the (a1, a2) plane, K = 3")
    add_common(p)
    p.add_argument("--p", default="3", help="powers: one value or P1,P2,P3 (default 3)")
    p.add_argument("--a1", default="0,2,100", help="a1 sweep as min,max,steps; half-open")
    p.add_argument("--a2", default="0,2,100", help="a2 sweep as min,max,steps; half-open")
    p.add_argument(
        "--include-very-strong",
        action="store_true",
        help="allow cells at or beyond the very-strong threshold",
    )
    p.set_defaults(func=cmd_regime_map)

    p = sub.add_parser("decompose", help="cut very-strong links and segment the chain")
    add_channel(p)
    add_common(p)
    p.set_defaults(func=cmd_decompose)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (
        InvalidChannelError,
        RegimeError,
        GridResourceError,
        ValueError,
        OSError,
        json.JSONDecodeError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
