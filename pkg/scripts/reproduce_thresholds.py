#!/usr/bin/env python3
"""Reproduce the two threshold experiments and write CSV + SVG + JSON.

Default grids match the shipped acceptance runs:
  surface codes: r in {4, 8, 16}, p in [0.14, 0.18] step 0.005
  color codes:   r in {2, 4, 8},  p in [0.07, 0.105] step 0.0035

With --trials 10000 (the default) the full run takes tens of minutes on one
core; use --trials 1000 for a quick look.
"""

import argparse
import json
import os
import sys
import time

from tricolor import sim
from tricolor.plotting import write_sweep_svg


def run_family(label, sizes, grid, trials, seed, workers, outdir):
    rows = []
    t0 = time.time()
    for r in sizes:
        for p in grid:
            if label == sim.COLOR_LABEL:
                st = sim.run_color_trials(r, p, trials, seed, workers=workers)
            else:
                st = sim.run_surface_trials(r, 0, p, trials, seed,
                                            workers=workers)
            rows.append(st)
            print(f"{label} r={r} p={p:g}: rate={st.logical_rate:.4f} "
                  f"[{time.time()-t0:.0f}s]", flush=True)
    rows = sim.round_trip_stats(rows)
    base = os.path.join(outdir, label.replace("-", "_"))
    sim.write_stats_csv(rows, base + ".csv")
    write_sweep_svg(rows, base + ".svg")
    est = sim.estimate_threshold(sim.curves_from_stats(rows)[label])
    rep = {
        "code": label,
        "crossing_p": est.crossing_p,
        "pair_crossings": [
            {"r_small": a, "r_large": b, "p": p} for a, b, p in est.pair_crossings
        ],
        "method": est.method,
        "trials_per_point": trials,
        "seed": seed,
    }
    if label == sim.SURFACE_LABEL:
        rep["implied_color_bound"] = sim.implied_color_threshold(est.crossing_p)
    with open(base + "_threshold.json", "w") as fh:
        json.dump(rep, fh, indent=2, sort_keys=True)
    print(f"{label}: crossing p = {est.crossing_p:.4f}")
    return rep


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--trials", type=int, default=10_000)
    ap.add_argument("--seed", type=int, default=2026)
    ap.add_argument("--threads", type=int, default=1)
    ap.add_argument("--outdir", default="results")
    ap.add_argument("--family", choices=("surface", "color", "both"),
                    default="both")
    args = ap.parse_args()
    os.makedirs(args.outdir, exist_ok=True)

    reports = []
    if args.family in ("surface", "both"):
        grid = [round(0.14 + 0.005 * i, 10) for i in range(9)]
        reports.append(run_family(sim.SURFACE_LABEL, (4, 8, 16), grid,
                                  args.trials, args.seed, args.threads,
                                  args.outdir))
    if args.family in ("color", "both"):
        grid = [round(0.07 + 0.0035 * i, 10) for i in range(11)]
        reports.append(run_family(sim.COLOR_LABEL, (2, 4, 8), grid,
                                  args.trials, args.seed, args.threads,
                                  args.outdir))
    if len(reports) == 2:
        bound = sim.implied_color_threshold(reports[0]["crossing_p"])
        print(f"surface crossing {reports[0]['crossing_p']:.4f} implies a "
              f"color bound of {bound:.4f}; measured color crossing "
              f"{reports[1]['crossing_p']:.4f}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
