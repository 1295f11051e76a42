"""Monte Carlo decoding experiments and threshold estimation.

Every trial derives its own random stream from (seed, trial index), so the
aggregate counts are independent of how trials are partitioned across
worker processes, and a sweep is bit-reproducible for any worker count.
"""

from __future__ import annotations

import csv
import io
import math
import multiprocessing
from dataclasses import dataclass

import numpy as np

from tricolor import complexes
from tricolor._bits import PackedEchelon, pack_index_set
from tricolor.colorcode import build_color_code
from tricolor.decode import get_decoder
from tricolor.matching import _decode_surface_arrays, _tables
from tricolor.tiling import COLORS, COLOR_LETTERS, cayley_triangular, color_subtiling
from tricolor.tiling import homology_complex

SURFACE_LABEL = "surface-hex"
COLOR_LABEL = "color-hex"

# z for the 95% Wilson score interval
_Z95 = 1.959963984540054


class GridError(RuntimeError):
    """The swept grid does not bracket the threshold crossing."""


@dataclass(frozen=True)
class TrialStats:
    code_label: str
    r: int
    n: int
    k: int
    p: float
    trials: int
    failures: int
    heralded: int
    logical_rate: float
    ci_low: float
    ci_high: float
    seed: int


@dataclass(frozen=True)
class ThresholdEstimate:
    crossing_p: float
    pair_crossings: tuple[tuple[int, int, float], ...]
    method: str = "pairwise-linear-interpolation"


@dataclass(frozen=True)
class ProjectedChannelStats:
    color: str
    edges: int
    samples: int
    flip_rate: float
    mean_pairwise_covariance: float


def wilson_interval(failures: int, trials: int) -> tuple[float, float]:
    """95% Wilson score interval for a binomial proportion."""
    if trials <= 0:
        return 0.0, 1.0
    phat = failures / trials
    z2 = _Z95 * _Z95
    denom = 1.0 + z2 / trials
    center = (phat + z2 / (2 * trials)) / denom
    half = (_Z95 / denom) * math.sqrt(
        phat * (1.0 - phat) / trials + z2 / (4.0 * trials * trials))
    return center - half, center + half


def trial_stream(seed: int, index: int) -> np.random.Generator:
    """The independent random stream of one trial."""
    return np.random.default_rng((seed, index))


def sample_bsc(n: int, p: float, stream: np.random.Generator) -> np.ndarray:
    """Support indices of a binary symmetric channel sample of length n."""
    if not 0.0 <= p <= 1.0:
        raise ValueError("p must be a probability")
    return np.nonzero(stream.random(n) < p)[0].astype(np.int64)


def implied_color_threshold(pc_surface: float) -> float:
    """Lower bound on the color-code threshold implied by the threshold of
    its three projected surface codes: the p solving 2p(1-p) = pc, since
    the projection maps a BSC(p) onto a BSC(2p(1-p))."""
    if not 0.0 <= pc_surface <= 0.5:
        raise ValueError("surface threshold must be in [0, 1/2]")
    return 0.5 * (1.0 - math.sqrt(1.0 - 2.0 * pc_surface))


# -- per-size simulation contexts, built once and cached -------------------

class _SurfaceContext:
    def __init__(self, r: int, color: int):
        gstar = cayley_triangular(r)
        self.tiling = color_subtiling(gstar, color)
        cx = homology_complex(self.tiling)
        css = complexes.css_from_complex(cx)
        self.n = css.n
        self.k = css.k
        self.endpoints = np.asarray(self.tiling.edges, dtype=np.int64)
        self.num_vertices = self.tiling.num_vertices
        self.stabilizers = PackedEchelon(cx.d2.echelon())
        _tables(self.tiling)  # warm the BFS tables


class _ColorContext:
    def __init__(self, r: int):
        self.code = build_color_code(r)
        self.decoder = get_decoder(self.code)
        self.n = self.code.n
        self.k = self.code.k


_surface_ctx: dict[tuple[int, int], _SurfaceContext] = {}
_color_ctx: dict[int, _ColorContext] = {}


def _get_surface_ctx(r: int, color: int) -> _SurfaceContext:
    key = (r, color)
    if key not in _surface_ctx:
        _surface_ctx[key] = _SurfaceContext(r, color)
    return _surface_ctx[key]


def _get_color_ctx(r: int) -> _ColorContext:
    if r not in _color_ctx:
        _color_ctx[r] = _ColorContext(r)
    return _color_ctx[r]


# -- trial loops ------------------------------------------------------------

def _surface_chunk(args) -> tuple[int, int]:
    r, color, p, seed, start, stop = args
    ctx = _get_surface_ctx(r, color)
    failures = 0
    for t in range(start, stop):
        rng = trial_stream(seed, t)
        x_idx = sample_bsc(ctx.n, p, rng)
        counts = np.bincount(ctx.endpoints[x_idx].ravel(),
                             minlength=ctx.num_vertices)
        defects = np.nonzero(counts & 1)[0]
        b_idx, _w = _decode_surface_arrays(ctx.tiling, defects)
        residual = np.setxor1d(x_idx, b_idx, assume_unique=True)
        if residual.size and not ctx.stabilizers.contains(
                pack_index_set(residual, ctx.n)):
            failures += 1
    return failures, 0


def _color_chunk(args) -> tuple[int, int]:
    r, p, seed, start, stop = args
    ctx = _get_color_ctx(r)
    dec = ctx.decoder
    failures = 0
    heralded = 0
    for t in range(start, stop):
        rng = trial_stream(seed, t)
        x_idx = sample_bsc(ctx.n, p, rng)
        s_idx = dec.syndrome_indices(x_idx)
        no_lift, xhat_idx, _weights, _bw = dec.decode_indices(s_idx)
        if no_lift:
            heralded += 1
            failures += 1
            continue
        residual = np.setxor1d(x_idx, xhat_idx, assume_unique=True)
        if residual.size and not dec.is_stabilizer_indices(residual):
            failures += 1
    return failures, heralded


def _run_chunks(fn, chunk_args, workers: int) -> tuple[int, int]:
    if workers <= 1 or len(chunk_args) <= 1:
        results = [fn(a) for a in chunk_args]
    else:
        ctx = multiprocessing.get_context("fork")
        with ctx.Pool(workers) as pool:
            results = pool.map(fn, chunk_args)
    failures = sum(f for f, _ in results)
    heralded = sum(h for _, h in results)
    return failures, heralded


def _chunked(total: int, pieces: int) -> list[tuple[int, int]]:
    pieces = max(1, min(pieces, total))
    step = (total + pieces - 1) // pieces
    return [(s, min(s + step, total)) for s in range(0, total, step)]


def _make_stats(label, r, n, k, p, trials, failures, heralded, seed) -> TrialStats:
    lo, hi = wilson_interval(failures, trials)
    return TrialStats(code_label=label, r=r, n=n, k=k, p=p, trials=trials,
                      failures=failures, heralded=heralded,
                      logical_rate=failures / trials,
                      ci_low=lo, ci_high=hi, seed=seed)


def run_surface_trials(r: int, color: int, p: float, trials: int, seed: int,
                       workers: int = 1) -> TrialStats:
    """Decode `trials` BSC(p) samples of the hexagonal surface code on the
    r-subtiling; success iff the residual is a face boundary."""
    if trials < 1:
        raise ValueError("trials must be >= 1")
    ctx = _get_surface_ctx(r, color)
    chunks = [(r, color, p, seed, a, b)
              for a, b in _chunked(trials, max(workers, 1) * 4)]
    failures, heralded = _run_chunks(_surface_chunk, chunks, workers)
    return _make_stats(SURFACE_LABEL, r, ctx.n, ctx.k, p, trials, failures,
                       heralded, seed)


def run_color_trials(r: int, p: float, trials: int, seed: int,
                     workers: int = 1) -> TrialStats:
    """Decode `trials` BSC(p) samples of the hexagonal color code H_r with
    the projection decoder; heralded no-lifting counts as failure."""
    if trials < 1:
        raise ValueError("trials must be >= 1")
    ctx = _get_color_ctx(r)
    chunks = [(r, p, seed, a, b)
              for a, b in _chunked(trials, max(workers, 1) * 4)]
    failures, heralded = _run_chunks(_color_chunk, chunks, workers)
    return _make_stats(COLOR_LABEL, r, ctx.n, ctx.k, p, trials, failures,
                       heralded, seed)


def projected_channel_rate(r: int, p: float, trials: int, seed: int
                           ) -> tuple[ProjectedChannelStats, ...]:
    """Empirical per-edge flip rate of the projected error on each
    subtiling, plus the mean pairwise covariance between edges of one
    color (estimated from the variance of the projected weight)."""
    ctx = _get_color_ctx(r)
    code = ctx.code
    edge_maps = [code.projections[c].edge_map for c in COLORS]
    n_sub = [code.projections[c].subtiling.num_edges for c in COLORS]
    flips = [0, 0, 0]
    sq = [0, 0, 0]
    for t in range(trials):
        rng = trial_stream(seed, t)
        x_idx = sample_bsc(ctx.n, p, rng)
        for c in COLORS:
            counts = np.bincount(edge_maps[c][x_idx], minlength=n_sub[c])
            w = int((counts & 1).sum())
            flips[c] += w
            sq[c] += w * w
    out = []
    for c in COLORS:
        ne = n_sub[c]
        samples = trials * ne
        rate = flips[c] / samples if samples else 0.0
        mean_w = flips[c] / trials
        var_w = sq[c] / trials - mean_w * mean_w
        if ne > 1 and trials > 1:
            cov = (var_w - ne * rate * (1.0 - rate)) / (ne * (ne - 1))
        else:
            cov = 0.0
        out.append(ProjectedChannelStats(
            color=COLOR_LETTERS[c], edges=ne, samples=samples,
            flip_rate=rate, mean_pairwise_covariance=cov))
    return tuple(out)


# -- threshold estimation ----------------------------------------------------

def estimate_threshold(curves) -> ThresholdEstimate:
    """Crossing estimate from logical-rate curves of increasing code size.

    curves: list of (r, [TrialStats sorted by p]) with a shared p grid.
    For each adjacent size pair, the sign change of (rate_small -
    rate_large) is located and linearly interpolated; the estimate is the
    mean of the pair crossings.
    """
    curves = sorted(((r, list(stats)) for r, stats in curves), key=lambda c: c[0])
    if len(curves) < 2:
        raise GridError("need at least two code sizes")
    grids = [tuple(s.p for s in stats) for _, stats in curves]
    if any(len(g) < 2 for g in grids):
        raise GridError("need at least two grid points per curve")
    if any(g != grids[0] for g in grids[1:]):
        raise GridError("curves do not share a p grid")
    ps = grids[0]
    crossings = []
    for (r_small, small), (r_large, large) in zip(curves, curves[1:]):
        diff = [s.logical_rate - l.logical_rate for s, l in zip(small, large)]
        cross = None
        for i in range(len(ps) - 1):
            if diff[i] >= 0 and diff[i + 1] < 0:
                span = diff[i] - diff[i + 1]
                frac = diff[i] / span if span else 0.0
                cross = ps[i] + (ps[i + 1] - ps[i]) * frac
                break
        if cross is None:
            raise GridError(
                f"grid does not bracket threshold for sizes r={r_small},"
                f" r={r_large}"
            )
        crossings.append((r_small, r_large, cross))
    mean = sum(c for _, _, c in crossings) / len(crossings)
    return ThresholdEstimate(crossing_p=mean, pair_crossings=tuple(crossings))


# -- CSV interchange ---------------------------------------------------------

CSV_HEADER = ("code", "r", "n", "k", "p", "trials", "failures", "heralded",
              "logical_rate", "ci_low", "ci_high", "seed")


def _fmt(x: float) -> str:
    return f"{x:.6g}"


def stats_to_csv(rows) -> str:
    """Serialize TrialStats rows sorted by (code, r, p), floats at 6
    significant digits."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for s in sorted(rows, key=lambda s: (s.code_label, s.r, s.p)):
        writer.writerow([
            s.code_label, s.r, s.n, s.k, _fmt(s.p), s.trials, s.failures,
            s.heralded, _fmt(s.logical_rate), _fmt(s.ci_low), _fmt(s.ci_high),
            s.seed,
        ])
    return buf.getvalue()


def write_stats_csv(rows, path: str) -> None:
    with open(path, "w") as fh:
        fh.write(stats_to_csv(rows))


def parse_stats_csv(text: str) -> list[TrialStats]:
    reader = csv.reader(io.StringIO(text))
    header = tuple(next(reader))
    if header != CSV_HEADER:
        raise ValueError(f"unexpected CSV header: {header}")
    out = []
    for row in reader:
        if not row:
            continue
        out.append(TrialStats(
            code_label=row[0], r=int(row[1]), n=int(row[2]), k=int(row[3]),
            p=float(row[4]), trials=int(row[5]), failures=int(row[6]),
            heralded=int(row[7]), logical_rate=float(row[8]),
            ci_low=float(row[9]), ci_high=float(row[10]), seed=int(row[11])))
    return out


def read_stats_csv(path: str) -> list[TrialStats]:
    with open(path) as fh:
        return parse_stats_csv(fh.read())


def round_trip_stats(rows) -> list[TrialStats]:
    """Push stats through the CSV representation, so threshold estimates
    agree whether they are computed in-process or from a written file."""
    return parse_stats_csv(stats_to_csv(rows))


def stats_to_json(rows) -> str:
    """JSON mirror of the CSV rows: same fields, same order, same rounding."""
    import json

    out = []
    for s in sorted(rows, key=lambda s: (s.code_label, s.r, s.p)):
        out.append({
            "code": s.code_label, "r": s.r, "n": s.n, "k": s.k,
            "p": float(_fmt(s.p)), "trials": s.trials,
            "failures": s.failures, "heralded": s.heralded,
            "logical_rate": float(_fmt(s.logical_rate)),
            "ci_low": float(_fmt(s.ci_low)), "ci_high": float(_fmt(s.ci_high)),
            "seed": s.seed,
        })
    return json.dumps(out, sort_keys=True) + "\n"


def curves_from_stats(rows) -> dict[str, list[tuple[int, list[TrialStats]]]]:
    """Group rows by code label into size-indexed curves sorted by p."""
    by_code: dict[str, dict[int, list[TrialStats]]] = {}
    for s in rows:
        by_code.setdefault(s.code_label, {}).setdefault(s.r, []).append(s)
    out = {}
    for label, per_r in by_code.items():
        out[label] = [(r, sorted(stats, key=lambda s: s.p))
                      for r, stats in sorted(per_r.items())]
    return out
