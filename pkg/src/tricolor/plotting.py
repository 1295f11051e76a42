"""Minimal static SVG line plots for sweep results (no plotting deps)."""

from __future__ import annotations

import math

_PALETTE = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b")

_W, _H = 640, 440
_ML, _MR, _MT, _MB = 70, 20, 20, 50


def _xmap(x, xmin, xmax):
    span = (xmax - xmin) or 1.0
    return _ML + (x - xmin) / span * (_W - _ML - _MR)


def _ymap(y, ymin, ymax, log):
    if log:
        y, ymin, ymax = (math.log10(max(v, 1e-12)) for v in (y, ymin, ymax))
    span = (ymax - ymin) or 1.0
    return _H - _MB - (y - ymin) / span * (_H - _MT - _MB)


def render_sweep_svg(rows, log_y: bool = False) -> str:
    """One polyline per (code, r) of logical rate versus p."""
    series: dict[tuple[str, int], list[tuple[float, float]]] = {}
    for s in rows:
        series.setdefault((s.code_label, s.r), []).append((s.p, s.logical_rate))
    for pts in series.values():
        pts.sort()
    xs = [p for pts in series.values() for p, _ in pts]
    ys = [y for pts in series.values() for _, y in pts]
    xmin, xmax = min(xs), max(xs)
    if log_y:
        ymin = min((y for y in ys if y > 0), default=1e-6)
        ymax = max(max(ys), ymin * 10)
    else:
        ymin, ymax = 0.0, max(max(ys), 1e-6)

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{_W}" height="{_H}" '
        f'viewBox="0 0 {_W} {_H}" font-family="sans-serif" font-size="12">',
        f'<rect width="{_W}" height="{_H}" fill="white"/>',
        f'<rect x="{_ML}" y="{_MT}" width="{_W - _ML - _MR}" '
        f'height="{_H - _MT - _MB}" fill="none" stroke="black"/>',
    ]
    for i in range(5):
        xv = xmin + (xmax - xmin) * i / 4
        xp = _xmap(xv, xmin, xmax)
        parts.append(
            f'<line x1="{xp:.1f}" y1="{_H - _MB}" x2="{xp:.1f}" '
            f'y2="{_H - _MB + 5}" stroke="black"/>'
            f'<text x="{xp:.1f}" y="{_H - _MB + 18}" '
            f'text-anchor="middle">{xv:.4g}</text>'
        )
        if log_y:
            yv = 10 ** (math.log10(max(ymin, 1e-12))
                        + (math.log10(ymax) - math.log10(max(ymin, 1e-12))) * i / 4)
        else:
            yv = ymin + (ymax - ymin) * i / 4
        yp = _ymap(yv, ymin, ymax, log_y)
        parts.append(
            f'<line x1="{_ML - 5}" y1="{yp:.1f}" x2="{_ML}" y2="{yp:.1f}" '
            f'stroke="black"/>'
            f'<text x="{_ML - 8}" y="{yp + 4:.1f}" '
            f'text-anchor="end">{yv:.3g}</text>'
        )
    parts.append(
        f'<text x="{(_ML + _W - _MR) / 2}" y="{_H - 12}" text-anchor="middle">'
        f'physical error rate p</text>'
    )
    parts.append(
        f'<text x="16" y="{(_MT + _H - _MB) / 2}" text-anchor="middle" '
        f'transform="rotate(-90 16 {(_MT + _H - _MB) / 2})">'
        f'block error rate</text>'
    )
    for idx, ((label, r), pts) in enumerate(sorted(series.items())):
        color = _PALETTE[idx % len(_PALETTE)]
        coords = " ".join(
            f"{_xmap(p, xmin, xmax):.1f},{_ymap(y, ymin, ymax, log_y):.1f}"
            for p, y in pts
        )
        parts.append(
            f'<polyline points="{coords}" fill="none" stroke="{color}" '
            f'stroke-width="1.5"/>'
        )
        ly = _MT + 16 + 16 * idx
        parts.append(
            f'<line x1="{_W - _MR - 120}" y1="{ly - 4}" x2="{_W - _MR - 95}" '
            f'y2="{ly - 4}" stroke="{color}" stroke-width="1.5"/>'
            f'<text x="{_W - _MR - 90}" y="{ly}">{label} r={r}</text>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def write_sweep_svg(rows, path: str, log_y: bool = False) -> None:
    with open(path, "w") as fh:
        fh.write(render_sweep_svg(rows, log_y=log_y))
