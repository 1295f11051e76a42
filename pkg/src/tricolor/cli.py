"""Command-line front end.

Subcommands: info (code parameters), decode (single-shot decode report),
sweep (Monte Carlo curves to CSV/SVG), threshold (crossing estimate from a
CSV or a fresh sweep).  Exit codes: 0 success, 2 usage error, 3 the grid
does not bracket the threshold, 4 internal invariant violation.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

import numpy as np

from tricolor import sim
from tricolor.colorcode import build_color_code, color_syndrome
from tricolor.complexes import InvalidComplex
from tricolor.decode import InvalidSyndrome, decode_color, judge
from tricolor.gf2 import BinaryChain, DimensionMismatch
from tricolor.plotting import write_sweep_svg
from tricolor.sim import COLOR_LABEL, SURFACE_LABEL, GridError
from tricolor.tiling import COLOR_LETTERS, TilingError

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_NO_BRACKET = 3
EXIT_INTERNAL = 4


@dataclass(frozen=True)
class RunConfig:
    """Validated sweep parameters."""

    code: str
    r_list: tuple[int, ...]
    p_grid: tuple[float, ...]
    trials: int
    seed: int
    out: str | None
    fmt: str
    plot: str | None
    threads: int
    color: int


def _usage_error(msg: str) -> "SystemExit":
    print(f"error: {msg}", file=sys.stderr)
    return SystemExit(EXIT_USAGE)


def _p_grid(start: float, stop: float, step: float) -> tuple[float, ...]:
    if step <= 0:
        raise _usage_error("--p-step must be positive")
    if stop < start:
        raise _usage_error("--p-stop must be >= --p-start")
    count = int(np.floor((stop - start) / step + 1e-9)) + 1
    return tuple(round(start + i * step, 12) for i in range(count))


def _config_from_args(args) -> RunConfig:
    if args.r_list:
        try:
            r_list = tuple(int(tok) for tok in args.r_list.split(","))
        except ValueError:
            raise _usage_error("--r-list must be comma-separated integers")
    elif args.r is not None:
        r_list = (args.r,)
    else:
        raise _usage_error("one of --r or --r-list is required")
    if any(r < 1 for r in r_list):
        raise _usage_error("sizes must be positive")
    if args.trials < 1:
        raise _usage_error("--trials must be >= 1")
    grid = _p_grid(args.p_start, args.p_stop, args.p_step)
    if not grid:
        raise _usage_error("p grid is empty")
    color = COLOR_LETTERS.index(args.color) if args.color else 0
    return RunConfig(code=args.code, r_list=r_list, p_grid=grid,
                     trials=args.trials, seed=args.seed, out=args.out,
                     fmt=args.format, plot=args.plot, threads=args.threads,
                     color=color)


def _add_sweep_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--code", choices=(COLOR_LABEL, SURFACE_LABEL),
                   default=COLOR_LABEL)
    p.add_argument("--r", type=int, default=None)
    p.add_argument("--r-list", default=None)
    p.add_argument("--p-start", type=float, default=None)
    p.add_argument("--p-stop", type=float, default=None)
    p.add_argument("--p-step", type=float, default=None)
    p.add_argument("--trials", type=int, default=10_000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default=None)
    p.add_argument("--plot", default=None)
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--color", choices=tuple(COLOR_LETTERS), default=None,
                   help="subtiling color for surface-hex runs")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--log-y", action="store_true")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tricolor",
        description="Hexagonal color codes decoded by projection onto three "
                    "surface codes",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_info = sub.add_parser("info", help="code parameters for one size")
    p_info.add_argument("--r", type=int, required=True)
    p_info.add_argument("--format", choices=("text", "json"), default="text")

    p_dec = sub.add_parser("decode", help="decode a single error")
    p_dec.add_argument("--r", type=int, required=True)
    p_dec.add_argument("--error", default=None,
                       help="comma-separated hyperedge indices")
    p_dec.add_argument("--p", type=float, default=None,
                       help="sample the error from BSC(p)")
    p_dec.add_argument("--seed", type=int, default=0)
    p_dec.add_argument("--format", choices=("text", "json"), default="text")

    p_sweep = sub.add_parser("sweep", help="Monte Carlo curves to CSV")
    _add_sweep_args(p_sweep)

    p_thr = sub.add_parser("threshold", help="crossing estimate")
    p_thr.add_argument("--csv", default=None,
                       help="existing sweep CSV (otherwise runs a sweep)")
    _add_sweep_args(p_thr)
    return parser


def cmd_info(args) -> int:
    code = build_color_code(args.r)
    sub = code.subtiling(0)
    report = {
        "r": args.r,
        "n": code.n,
        "k": code.k,
        "d_label": 4 * args.r,
        "vertices": code.gstar.num_vertices,
        "hyperedges": code.hypergraph.num_hyperedges,
        "hyperfaces": code.hypergraph.num_hyperfaces,
        "x_checks": code.css.hx.rows,
        "z_checks": code.css.hz.rows,
        "subtiling_vertices": sub.num_vertices,
        "subtiling_edges": sub.num_edges,
        "subtiling_faces": sub.num_faces,
    }
    if args.format == "json":
        print(json.dumps(report, sort_keys=True))
    else:
        print(f"color code H_{args.r}: [[{code.n}, {code.k}, {4*args.r}]] "
              f"(distance label 4r, verified only at r=1)")
        print(f"  tiling: {code.gstar.num_vertices} vertices, "
              f"{code.gstar.num_edges} edges, {code.gstar.num_faces} faces")
        print(f"  checks: {code.css.hx.rows} X, {code.css.hz.rows} Z")
        print(f"  each surface projection: {sub.num_vertices} vertices, "
              f"{sub.num_edges} edges, {sub.num_faces} faces")
    return EXIT_OK


def cmd_decode(args) -> int:
    code = build_color_code(args.r)
    if args.error is not None:
        tokens = [tok for tok in args.error.split(",") if tok.strip()]
        support = sorted({int(tok) for tok in tokens})
        if support and (support[0] < 0 or support[-1] >= code.n):
            raise _usage_error("hyperedge index out of range")
        x = BinaryChain(code.n, tuple(support))
    elif args.p is not None:
        idx = sim.sample_bsc(code.n, args.p, sim.trial_stream(args.seed, 0))
        x = BinaryChain(code.n, tuple(int(i) for i in idx))
    else:
        raise _usage_error("decode needs --error or --p")
    s = color_syndrome(code, x)
    outcome = decode_color(code, s)
    success = judge(code, x, outcome)
    report = {
        "r": args.r,
        "error": list(x.support),
        "syndrome": list(s.support),
        "per_color_matching_weights": list(outcome.per_color_weights),
        "recombined_boundary_weight": outcome.combined_boundary_weight,
        "status": outcome.status.value,
        "estimate": (None if outcome.estimate is None
                     else list(outcome.estimate.support)),
        "verdict": "success" if success else "failure",
    }
    if args.format == "json":
        print(json.dumps(report, sort_keys=True))
    else:
        print(f"error ({x.weight} hyperedges): {list(x.support)}")
        print(f"syndrome ({s.weight} vertices): {list(s.support)}")
        print("matching weights (R, G, B):", outcome.per_color_weights)
        print(f"recombined boundary weight: {outcome.combined_boundary_weight}")
        if outcome.estimate is None:
            print("lifting: NO LIFTING (heralded failure)")
        else:
            print(f"estimate ({outcome.estimate.weight} hyperedges): "
                  f"{list(outcome.estimate.support)}")
        print("verdict:", report["verdict"])
    return EXIT_OK


def _run_sweep(cfg: RunConfig) -> list[sim.TrialStats]:
    rows = []
    for r in cfg.r_list:
        for p in cfg.p_grid:
            if cfg.code == COLOR_LABEL:
                st = sim.run_color_trials(r, p, cfg.trials, cfg.seed,
                                          workers=cfg.threads)
            else:
                st = sim.run_surface_trials(r, cfg.color, p, cfg.trials,
                                            cfg.seed, workers=cfg.threads)
            rows.append(st)
            print(f"  {st.code_label} r={r} p={p:g}: "
                  f"rate={st.logical_rate:.4f}", file=sys.stderr)
    return sim.round_trip_stats(rows)


def cmd_sweep(args) -> int:
    if args.p_start is None or args.p_stop is None or args.p_step is None:
        raise _usage_error("sweep needs --p-start, --p-stop and --p-step")
    cfg = _config_from_args(args)
    rows = _run_sweep(cfg)
    text = sim.stats_to_csv(rows) if cfg.fmt == "csv" else sim.stats_to_json(rows)
    if cfg.out:
        with open(cfg.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if cfg.plot:
        write_sweep_svg(rows, cfg.plot, log_y=args.log_y)
    return EXIT_OK


def cmd_threshold(args) -> int:
    if args.csv:
        rows = sim.read_stats_csv(args.csv)
    else:
        if args.p_start is None or args.p_stop is None or args.p_step is None:
            raise _usage_error("threshold needs --csv or sweep arguments")
        cfg = _config_from_args(args)
        rows = _run_sweep(cfg)
        if cfg.out:
            with open(cfg.out, "w") as fh:
                fh.write(sim.stats_to_csv(rows))
    reports = []
    for label, curves in sorted(sim.curves_from_stats(rows).items()):
        est = sim.estimate_threshold(curves)
        rep = {
            "code": label,
            "crossing_p": est.crossing_p,
            "pair_crossings": [
                {"r_small": a, "r_large": b, "p": p}
                for a, b, p in est.pair_crossings
            ],
            "method": est.method,
        }
        if label == SURFACE_LABEL:
            rep["implied_color_bound"] = sim.implied_color_threshold(est.crossing_p)
        reports.append(rep)
    if args.format == "json":
        print(json.dumps(reports, sort_keys=True))
    else:
        for rep in reports:
            print(f"{rep['code']}: crossing p = {rep['crossing_p']:.6g} "
                  f"({rep['method']})")
            for pc in rep["pair_crossings"]:
                print(f"  r={pc['r_small']} x r={pc['r_large']}: "
                      f"p = {pc['p']:.6g}")
            if "implied_color_bound" in rep:
                print(f"  implied color-code threshold bound: "
                      f"{rep['implied_color_bound']:.6g}")
    return EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "info":
            return cmd_info(args)
        if args.command == "decode":
            return cmd_decode(args)
        if args.command == "sweep":
            return cmd_sweep(args)
        if args.command == "threshold":
            return cmd_threshold(args)
        raise _usage_error(f"unknown command {args.command}")
    except SystemExit:
        raise
    except GridError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NO_BRACKET
    except (TilingError, InvalidComplex, InvalidSyndrome, DimensionMismatch,
            RuntimeError, AssertionError) as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (ValueError, OSError) as exc:
        # malformed user inputs (bad CSV, unreadable files)
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
