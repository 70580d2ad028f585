"""Dependency-free SVG renderings of a mission plan.

Four figures are produced: the hotspot graph (node opacity = score, pure
red), the tour overlaid on the regions, an altitude map and a flow heat map.
In the two maps only sprayed (sweep) waypoints are colored; transit legs are
drawn as a grey dashed line. Output is deterministic: coordinates are printed
with fixed precision and there are no timestamps or random ids.
"""

from __future__ import annotations

from pathlib import Path
from xml.sax.saxutils import escape

from .io import atomic_write

WIDTH, HEIGHT = 720, 560
MARGIN = 40
LEGEND_W = 140

# viridis-like stops for sequential data
_STOPS = [
    (0.00, (68, 1, 84)),
    (0.25, (59, 82, 139)),
    (0.50, (33, 145, 140)),
    (0.75, (94, 201, 98)),
    (1.00, (253, 231, 37)),
]

PLOT_FILES = ("hotspots.svg", "tour.svg", "altitude.svg", "flow.svg")


def colormap(t: float) -> str:
    t = min(1.0, max(0.0, t))
    for (t0, c0), (t1, c1) in zip(_STOPS, _STOPS[1:]):
        if t <= t1:
            u = 0.0 if t1 == t0 else (t - t0) / (t1 - t0)
            rgb = [round(a + (b - a) * u) for a, b in zip(c0, c1)]
            return "#{:02x}{:02x}{:02x}".format(*rgb)
    return "#{:02x}{:02x}{:02x}".format(*_STOPS[-1][1])


def _n(v: float) -> str:
    s = f"{v:.2f}"
    return "0.00" if s == "-0.00" else s


class _Frame:
    """World (meters, y up) to SVG (pixels, y down) transform."""

    def __init__(self, xs, ys):
        x0, x1 = min(xs), max(xs)
        y0, y1 = min(ys), max(ys)
        span = max(x1 - x0, y1 - y0, 1e-9)
        avail_w = WIDTH - 2 * MARGIN - LEGEND_W
        avail_h = HEIGHT - 2 * MARGIN
        self.scale = min(avail_w, avail_h) / span
        self.x0, self.y0 = x0, y0
        self.h = (y1 - y0) * self.scale

    def pt(self, x, y):
        return MARGIN + (x - self.x0) * self.scale, MARGIN + self.h - (y - self.y0) * self.scale

    def length(self, d):
        return d * self.scale


def _frame_for(plan) -> _Frame:
    xs = [wp[0] for wp in plan.path.waypoints]
    ys = [wp[1] for wp in plan.path.waypoints]
    for r in plan.regions:
        xs += [r.origin.x, r.origin.x + r.width]
        ys += [r.origin.y, r.origin.y + r.height]
    return _Frame(xs, ys)


def _header(title: str) -> list[str]:
    return [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" '
        f'viewBox="0 0 {WIDTH} {HEIGHT}">',
        f'<rect x="0" y="0" width="{WIDTH}" height="{HEIGHT}" fill="#ffffff"/>',
        f'<text x="{MARGIN}" y="24" font-family="sans-serif" font-size="16">{escape(title)}</text>',
    ]


def _rect(frame, r, fill="none", stroke="#555555", extra=""):
    x, y = frame.pt(r.origin.x, r.origin.y + r.height)
    return (
        f'<rect x="{_n(x)}" y="{_n(y)}" width="{_n(frame.length(r.width))}" '
        f'height="{_n(frame.length(r.height))}" fill="{fill}" stroke="{stroke}" '
        f'stroke-width="1"{extra}/>'
    )


def _polyline(frame, pts, stroke, width=1.0, extra=""):
    coords = " ".join(f"{_n(a)},{_n(b)}" for a, b in (frame.pt(x, y) for x, y in pts))
    return (
        f'<polyline points="{coords}" fill="none" stroke="{stroke}" '
        f'stroke-width="{width}"{extra}/>'
    )


def _color_legend(label: str, vmin: float, vmax: float) -> list[str]:
    x = WIDTH - LEGEND_W + 10
    y = MARGIN + 10
    out = [f'<g class="legend"><text x="{x}" y="{y}" font-family="sans-serif" font-size="12">{escape(label)}</text>']
    if vmax == vmin:
        out.append(f'<rect x="{x}" y="{y + 10}" width="20" height="20" fill="{colormap(0.0)}"/>')
        out.append(f'<text x="{x + 28}" y="{y + 25}" font-family="sans-serif" font-size="12">{vmin:.3g}</text>')
    else:
        out.append('<defs><linearGradient id="scale" x1="0" y1="1" x2="0" y2="0">')
        for t, _ in _STOPS:
            out.append(f'<stop offset="{t:.2f}" stop-color="{colormap(t)}"/>')
        out.append("</linearGradient></defs>")
        out.append(f'<rect x="{x}" y="{y + 10}" width="20" height="200" fill="url(#scale)"/>')
        out.append(f'<text x="{x + 28}" y="{y + 20}" font-family="sans-serif" font-size="12">{vmax:.3g}</text>')
        out.append(f'<text x="{x + 28}" y="{y + 210}" font-family="sans-serif" font-size="12">{vmin:.3g}</text>')
    out.append("</g>")
    return out


def hotspot_svg(plan) -> str:
    frame = _frame_for(plan)
    centers = [r.center for r in plan.regions]
    out = _header("Hotspot graph (opacity = hotspot score)")
    for r in plan.regions:
        out.append(_rect(frame, r, stroke="#bbbbbb"))
    for i, r in enumerate(plan.regions):
        for j in range(i + 1, len(plan.regions)):
            if _adjacent(plan, i, j):
                (x1, y1), (x2, y2) = frame.pt(centers[i].x, centers[i].y), frame.pt(centers[j].x, centers[j].y)
                out.append(
                    f'<line x1="{_n(x1)}" y1="{_n(y1)}" x2="{_n(x2)}" y2="{_n(y2)}" '
                    f'stroke="#888888" stroke-width="1"/>'
                )
    for c, s in zip(centers, plan.scores.scores):
        x, y = frame.pt(c.x, c.y)
        out.append(
            f'<circle class="node" cx="{_n(x)}" cy="{_n(y)}" r="6" fill="#ff0000" '
            f'fill-opacity="{float(s):.3f}" stroke="#000000" stroke-width="0.5"/>'
        )
    x = WIDTH - LEGEND_W + 10
    out.append(f'<g class="legend"><text x="{x}" y="{MARGIN + 10}" font-family="sans-serif" font-size="12">score</text>')
    for k, s in enumerate((1.0, 0.5, 0.0)):
        yy = MARGIN + 30 + 24 * k
        out.append(f'<circle cx="{x + 8}" cy="{yy}" r="6" fill="#ff0000" fill-opacity="{s:.3f}" stroke="#000000" stroke-width="0.5"/>')
        out.append(f'<text x="{x + 22}" y="{yy + 4}" font-family="sans-serif" font-size="12">{s:.1f}</text>')
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


def _adjacent(plan, i, j) -> bool:
    a, b = plan.regions[i].center, plan.regions[j].center
    return ((a.x - b.x) ** 2 + (a.y - b.y) ** 2) ** 0.5 <= plan.params.neighbor_radius


def tour_svg(plan) -> str:
    frame = _frame_for(plan)
    out = _header("Tour and flight path")
    for r, s in zip(plan.regions, plan.scores.scores):
        out.append(_rect(frame, r, fill="#ff0000", extra=f' fill-opacity="{0.15 + 0.6 * float(s):.3f}"'))
    out.append(_polyline(frame, [(wp[0], wp[1]) for wp in plan.path.waypoints], "#1f77b4", 0.8))
    by_id = {r.id: r for r in plan.regions}
    sp = plan.params.start_point
    stops = [(sp.x, sp.y)] + [(by_id[i].center.x, by_id[i].center.y) for i in plan.report.tour_order] + [(sp.x, sp.y)]
    out.append(_polyline(frame, stops, "#000000", 1.5, ' stroke-dasharray="6,4"'))
    x, y = frame.pt(sp.x, sp.y)
    out.append(f'<rect x="{_n(x - 5)}" y="{_n(y - 5)}" width="10" height="10" fill="#2ca02c"/>')
    for k, rid in enumerate(plan.report.tour_order, start=1):
        cx, cy = frame.pt(by_id[rid].center.x, by_id[rid].center.y)
        out.append(
            f'<text class="stop" x="{_n(cx + 6)}" y="{_n(cy - 6)}" font-family="sans-serif" '
            f'font-size="10"><tspan font-weight="bold">{k}</tspan> <tspan>{escape(rid)}</tspan></text>'
        )
    lx = WIDTH - LEGEND_W + 10
    out.append(
        f'<g class="legend"><text x="{lx}" y="{MARGIN + 10}" font-family="sans-serif" font-size="12">'
        f'tour {plan.report.tour_length:.1f} m</text>'
        f'<text x="{lx}" y="{MARGIN + 28}" font-family="sans-serif" font-size="12">'
        f'path {plan.report.total_path_length:.1f} m</text></g>'
    )
    out.append("</svg>")
    return "\n".join(out) + "\n"


def _value_map_svg(plan, column: int, title: str, label: str) -> str:
    frame = _frame_for(plan)
    wps = plan.path.waypoints
    sprayed = [wps[k] for lo, hi in plan.path.per_region_spans.values() for k in range(lo, hi + 1)]
    values = [wp[column] for wp in sprayed]
    vmin, vmax = min(values), max(values)
    out = _header(title)
    for r in plan.regions:
        out.append(_rect(frame, r, stroke="#cccccc"))
    out.append(_polyline(frame, [(wp[0], wp[1]) for wp in wps], "#999999", 0.6, ' stroke-dasharray="3,3"'))
    for wp in sprayed:
        t = 0.0 if vmax == vmin else (wp[column] - vmin) / (vmax - vmin)
        x, y = frame.pt(wp[0], wp[1])
        out.append(f'<circle class="wp" cx="{_n(x)}" cy="{_n(y)}" r="2.5" fill="{colormap(t)}"/>')
    out.extend(_color_legend(label, vmin, vmax))
    out.append("</svg>")
    return "\n".join(out) + "\n"


def altitude_svg(plan) -> str:
    return _value_map_svg(plan, 2, "Flight altitude", "altitude (m)")


def flow_svg(plan) -> str:
    return _value_map_svg(plan, 3, "Sprayer flow multiplier", "flow (x base)")


def render_plots(plan, scores=None, out_dir=".") -> list[Path]:
    """Write the four SVG figures into ``out_dir`` and return their paths.

    ``scores`` defaults to the scores carried by ``plan``.
    """
    if scores is not None and scores is not plan.scores:
        from dataclasses import replace

        plan = replace(plan, scores=scores)
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    renderers = (hotspot_svg, tour_svg, altitude_svg, flow_svg)
    paths = []
    for name, render in zip(PLOT_FILES, renderers):
        path = out_dir / name
        atomic_write(path, render(plan))
        paths.append(path)
    return paths
