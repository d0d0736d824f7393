"""Self-contained SVG log-log plots for benchmark CSVs.

Byte-deterministic for a fixed input: series are sorted, coordinates are
formatted with fixed precision, and no external assets or timestamps appear.
"""

from __future__ import annotations

import math

from .bench import parse_csv

WIDTH, HEIGHT = 640, 440
MARGIN_L, MARGIN_R, MARGIN_T, MARGIN_B = 70, 30, 30, 50
PALETTE = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"]


def _fmt(x: float) -> str:
    return f"{x:.2f}"


def emit_plot(csv_text: str) -> str:
    """Render modeled cost vs n, one log-log polyline per (algo, k) series."""
    rows = parse_csv(csv_text)
    series: dict[tuple, dict[int, list[float]]] = {}
    for row in rows:
        series.setdefault((row["algo"], row["k"]), {}).setdefault(row["n"], []).append(
            row["modeled_cost"]
        )
    if not series:
        raise ValueError("benchmark CSV has no data rows")
    points: dict[tuple, list[tuple[float, float]]] = {}
    for key, per_n in series.items():
        pts = []
        for n in sorted(per_n):
            cost = sum(per_n[n]) / len(per_n[n])
            if n <= 0 or cost <= 0:
                raise ValueError("log-log plot needs positive n and cost")
            pts.append((math.log10(n), math.log10(cost)))
        points[key] = pts

    xs = [x for pts in points.values() for x, _ in pts]
    ys = [y for pts in points.values() for _, y in pts]
    x0, x1 = min(xs), max(xs)
    y0, y1 = min(ys), max(ys)
    if x1 == x0:
        x1 = x0 + 1
    if y1 == y0:
        y1 = y0 + 1
    plot_w = WIDTH - MARGIN_L - MARGIN_R
    plot_h = HEIGHT - MARGIN_T - MARGIN_B

    def sx(x):
        return MARGIN_L + (x - x0) / (x1 - x0) * plot_w

    def sy(y):
        return HEIGHT - MARGIN_B - (y - y0) / (y1 - y0) * plot_h

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" '
        f'viewBox="0 0 {WIDTH} {HEIGHT}">',
        f'<rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>',
        f'<rect x="{MARGIN_L}" y="{MARGIN_T}" width="{plot_w}" height="{plot_h}" '
        'fill="none" stroke="#999" stroke-width="1"/>',
    ]
    for p in range(math.ceil(x0), math.floor(x1) + 1):
        x = sx(p)
        out.append(f'<line x1="{_fmt(x)}" y1="{MARGIN_T}" x2="{_fmt(x)}" '
                   f'y2="{HEIGHT - MARGIN_B}" stroke="#ddd" stroke-width="1"/>')
        out.append(f'<text x="{_fmt(x)}" y="{HEIGHT - MARGIN_B + 18}" font-size="12" '
                   f'text-anchor="middle" font-family="monospace">1e{p}</text>')
    for p in range(math.ceil(y0), math.floor(y1) + 1):
        y = sy(p)
        out.append(f'<line x1="{MARGIN_L}" y1="{_fmt(y)}" x2="{WIDTH - MARGIN_R}" '
                   f'y2="{_fmt(y)}" stroke="#ddd" stroke-width="1"/>')
        out.append(f'<text x="{MARGIN_L - 6}" y="{_fmt(y + 4)}" font-size="12" '
                   f'text-anchor="end" font-family="monospace">1e{p}</text>')
    out.append(f'<text x="{WIDTH // 2}" y="{HEIGHT - 12}" font-size="13" '
               'text-anchor="middle" font-family="monospace">n</text>')
    out.append(f'<text x="16" y="{HEIGHT // 2}" font-size="13" text-anchor="middle" '
               f'font-family="monospace" transform="rotate(-90 16 {HEIGHT // 2})">modeled cost</text>')

    for idx, key in enumerate(sorted(points)):
        color = PALETTE[idx % len(PALETTE)]
        pts = points[key]
        path = " ".join(f"{_fmt(sx(x))},{_fmt(sy(y))}" for x, y in pts)
        out.append(f'<polyline points="{path}" fill="none" stroke="{color}" stroke-width="2"/>')
        for x, y in pts:
            out.append(f'<circle cx="{_fmt(sx(x))}" cy="{_fmt(sy(y))}" r="3" fill="{color}"/>')
        label = f"{key[0]} k={key[1]}"
        out.append(f'<text x="{WIDTH - MARGIN_R - 6}" y="{MARGIN_T + 18 + 16 * idx}" '
                   f'font-size="12" text-anchor="end" font-family="monospace" '
                   f'fill="{color}">{label}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
