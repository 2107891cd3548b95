# src/entdyn/cli.py
"""Command-line front end.

Three subcommands: `negativity` (single closed-form vs numeric check),
`evolve` (negativity time series for one state) and `sweep` (boundary
path or region sweep with an ESD-zone summary). Output is CSV (with
`#`-prefixed metadata lines before the header) or JSON; identical
invocations produce byte-identical output. Exit codes: 0 success,
2 invalid parameters, 3 output I/O failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from .analysis import (DEFAULT_EPS, PARAM_NAMES, SweepSpec, detect_esd_zones,
                       region_dead_spans, sweep_path, sweep_region)
from .dynamics import EvolutionSpec, negativity_trace
from .model import (CONVENTIONS, DEFAULT_CONVENTION, DMCoupling, PureQubit,
                    TwoParamState, build_two_param_state,
                    closed_form_negativity)
from .states import negativity


def _fmt(x: float) -> str:
    """Numeric CSV field: up to 12 significant digits."""
    return format(float(x), ".12g")


def _write_text(text: str, out: str) -> int:
    if out == "-":
        sys.stdout.write(text)
        return 0
    try:
        Path(out).write_text(text)
    except OSError as exc:
        print(f"error: cannot write {out}: {exc}", file=sys.stderr)
        return 3
    return 0


def _json_document(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _zones_json(zones) -> list[dict]:
    return [{"param_lo": z.param_lo, "param_hi": z.param_hi,
             "t_lo": z.t_lo, "t_hi": z.t_hi} for z in zones]


def cmd_negativity(args) -> int:
    try:
        closed = closed_form_negativity(args.alpha, args.gamma)
        numeric = negativity(build_two_param_state(args.alpha, args.gamma), 0)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.format == "json":
        text = _json_document({
            "convention": args.convention,
            "alpha": args.alpha, "gamma": args.gamma,
            "closed_form": closed, "numeric": numeric,
            "difference": numeric - closed,
        })
    else:
        text = (f"# convention={args.convention}\n"
                f"closed_form={_fmt(closed)} numeric={_fmt(numeric)} "
                f"difference={_fmt(numeric - closed)}\n")
    return _write_text(text, args.out)


def cmd_evolve(args) -> int:
    try:
        c1 = (1.0 - args.c0 ** 2) ** 0.5 if abs(args.c0) <= 1 else None
        if c1 is None:
            raise ValueError(f"c0 must satisfy |c0| <= 1, got {args.c0}")
        spec = EvolutionSpec(state=TwoParamState(args.alpha, args.gamma),
                             coupling=DMCoupling(args.dx, args.convention),
                             t_max=args.t_max, t_steps=args.t_steps,
                             aux=PureQubit(args.c0, c1))
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    trace = negativity_trace(spec)
    meta = {"convention": args.convention, "alpha": args.alpha,
            "gamma": args.gamma, "dx": args.dx, "c0": args.c0,
            "t_max": args.t_max, "t_steps": args.t_steps}
    if args.format == "json":
        doc = dict(meta)
        doc["t"] = list(trace.times)
        doc["negativity"] = list(trace.values)
        return _write_text(_json_document(doc), args.out)
    lines = [f"# {k}={_fmt(v) if isinstance(v, float) else v}"
             for k, v in meta.items()]
    lines.append("t,negativity")
    lines.extend(f"{_fmt(t)},{_fmt(v)}"
                 for t, v in zip(trace.times, trace.values))
    return _write_text("\n".join(lines) + "\n", args.out)


def _sweep_spec(args) -> SweepSpec:
    if (args.path is None) == (args.region is None):
        raise ValueError("set exactly one of --path/--region")
    if args.path is not None:
        if args.dx is None:
            raise ValueError("path sweeps need --dx")
        return SweepSpec(path=args.path,
                         coupling=DMCoupling(args.dx, args.convention),
                         param_steps=args.param_steps,
                         t_max=args.t_max, t_steps=args.t_steps)
    if args.dxt is None:
        raise ValueError("region sweeps need --dxt")
    return SweepSpec(region=args.region,
                     coupling=DMCoupling(1.0, args.convention),
                     param_steps=args.param_steps, dxt_value=args.dxt)


def cmd_sweep(args) -> int:
    try:
        spec = _sweep_spec(args)
        if args.eps <= 0:
            raise ValueError("--eps must be positive")
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    if spec.path is not None:
        field = sweep_path(spec)
        zones = detect_esd_zones(field, args.eps)
        flat = int(field.values.argmax())
        i, k = divmod(flat, field.values.shape[1])
        meta = {"convention": args.convention, "path": spec.path,
                "param": PARAM_NAMES[spec.path], "dx": spec.coupling.d_x,
                "grid": [spec.steps, spec.t_steps], "t_max": spec.t_max,
                "eps": args.eps}
        summary = dict(meta)
        summary["max_value"] = float(field.values[i, k])
        summary["argmax"] = {"param": float(field.param_axis[i]),
                             "t": float(field.times[k])}
        summary["zones"] = _zones_json(zones)
        rows = [(field.param_axis[i], field.times[k], field.values[i, k])
                for i in range(field.values.shape[0])
                for k in range(field.values.shape[1])]
        header = "param,t,negativity"
    else:
        field = sweep_region(spec)
        zones = region_dead_spans(field, args.eps)
        valid = ~np.isnan(field.values)
        masked = np.where(valid, field.values, -np.inf)
        flat = int(masked.argmax())
        i, j = divmod(flat, field.values.shape[1])
        meta = {"convention": args.convention, "region": spec.region,
                "dxt": spec.dxt_value, "grid": [spec.steps, spec.steps],
                "eps": args.eps}
        summary = dict(meta)
        summary["max_value"] = float(field.values[i, j])
        summary["argmax"] = {"alpha": float(field.alphas[i]),
                             "gamma": float(field.gammas[j])}
        summary["zones"] = _zones_json(zones)
        rows = [(field.alphas[i], field.gammas[j], field.values[i, j])
                for i in range(field.values.shape[0])
                for j in range(field.values.shape[1]) if valid[i, j]]
        header = "alpha,gamma,negativity"

    if args.format == "json":
        doc = dict(summary)
        doc["rows"] = [[float(a), float(b), float(c)] for a, b, c in rows]
        return _write_text(_json_document(doc), args.out)

    lines = []
    for key, val in meta.items():
        if isinstance(val, list):
            val = "x".join(str(v) for v in val)
        elif isinstance(val, float):
            val = _fmt(val)
        lines.append(f"# {key}={val}")
    lines.append(header)
    lines.extend(f"{_fmt(a)},{_fmt(b)},{_fmt(c)}" for a, b, c in rows)
    code = _write_text("\n".join(lines) + "\n", args.out)
    if code != 0 or args.out == "-":
        return code
    json_path = str(Path(args.out).with_suffix(".json"))
    return _write_text(_json_document(summary), json_path)


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="entdyn",
        description="Qubit-qutrit entanglement dynamics under an x-axis "
                    "DM coupling: single values, time traces, sweeps.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--convention", choices=list(CONVENTIONS),
                        default=DEFAULT_CONVENTION)
        sp.add_argument("--format", choices=["csv", "json"], default="csv")
        sp.add_argument("--out", default="-",
                        help="output path, '-' for stdout")

    sp = sub.add_parser("negativity",
                        help="closed-form vs numeric negativity at t=0")
    sp.add_argument("--alpha", type=float, required=True)
    sp.add_argument("--gamma", type=float, required=True)
    common(sp)
    sp.set_defaults(func=cmd_negativity)

    sp = sub.add_parser("evolve", help="negativity time series for one state")
    sp.add_argument("--alpha", type=float, required=True)
    sp.add_argument("--gamma", type=float, required=True)
    sp.add_argument("--dx", type=float, required=True)
    sp.add_argument("--c0", type=float, default=1.0)
    sp.add_argument("--t-max", type=float, default=15.0)
    sp.add_argument("--t-steps", type=int, default=600)
    common(sp)
    sp.set_defaults(func=cmd_evolve)

    sp = sub.add_parser("sweep", help="boundary-path or region sweep")
    sp.add_argument("--path", choices=list(PARAM_NAMES))
    sp.add_argument("--region", choices=["ABC", "ACD"])
    sp.add_argument("--dx", type=float)
    sp.add_argument("--dxt", type=float)
    sp.add_argument("--param-steps", type=int)
    sp.add_argument("--t-max", type=float, default=15.0)
    sp.add_argument("--t-steps", type=int, default=600)
    sp.add_argument("--eps", type=float, default=DEFAULT_EPS)
    common(sp)
    sp.set_defaults(func=cmd_sweep)
    return p


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
