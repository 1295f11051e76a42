#!/usr/bin/env python3
"""Per-trial decoder timings at a few sizes and error rates."""

import time

from tricolor import sim


def bench(label, fn, trials):
    t0 = time.time()
    fn(trials)
    dt = (time.time() - t0) / trials
    print(f"{label}: {dt * 1e3:.2f} ms/trial")


def main():
    # warm JIT and context caches
    sim.run_surface_trials(4, 0, 0.16, 10, seed=0)
    sim.run_color_trials(2, 0.09, 10, seed=0)

    for r in (4, 8, 16):
        for p in (0.14, 0.16, 0.18):
            bench(f"surface r={r:<2} p={p}",
                  lambda n, r=r, p=p: sim.run_surface_trials(r, 0, p, n, seed=1),
                  200)
    for r in (2, 4, 8):
        for p in (0.07, 0.09, 0.105):
            bench(f"color   r={r:<2} p={p}",
                  lambda n, r=r, p=p: sim.run_color_trials(r, p, n, seed=1),
                  200)


if __name__ == "__main__":
    main()
