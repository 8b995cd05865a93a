"""Deterministic SVG rendering of point sets, embeddings, and reduction layouts."""

from __future__ import annotations

from fractions import Fraction
from typing import Optional

from .geometry import PointSet
from .reduction import ReductionInstance
from .verify import Embedding

_W = 720
_H = 720
_MARGIN = 48


def _fmt(value: float) -> str:
    return f"{value:.3f}"


class _Frame:
    """Uniform map from data coordinates to SVG pixels with the y-axis flipped."""

    def __init__(self, points: PointSet, extra=()):
        xs = [float(p.x) for p in points] + [float(p[0]) for p in extra]
        ys = [float(p.y) for p in points] + [float(p[1]) for p in extra]
        lo_x, hi_x = min(xs), max(xs)
        lo_y, hi_y = min(ys), max(ys)
        span = max(hi_x - lo_x, hi_y - lo_y, 1e-9)
        self.scale = (_W - 2 * _MARGIN) / span
        self.lo_x = lo_x
        self.hi_y = hi_y

    def x(self, value) -> float:
        return _MARGIN + (float(value) - self.lo_x) * self.scale

    def y(self, value) -> float:
        return _MARGIN + (self.hi_y - float(value)) * self.scale


def _circle(frame, p, radius, fill, extra="") -> str:
    return (
        f'<circle cx="{_fmt(frame.x(p.x))}" cy="{_fmt(frame.y(p.y))}" '
        f'r="{radius}" fill="{fill}"{extra}/>'
    )


def _edge_line(frame, a, b) -> str:
    return (
        f'<line x1="{_fmt(frame.x(a.x))}" y1="{_fmt(frame.y(a.y))}" '
        f'x2="{_fmt(frame.x(b.x))}" y2="{_fmt(frame.y(b.y))}" '
        'stroke="#444" stroke-width="1.2" marker-end="url(#arrow)"/>'
    )


def render_svg(
    points: PointSet,
    embedding: Optional[Embedding] = None,
    reduction: Optional[ReductionInstance] = None,
) -> str:
    """Byte-deterministic SVG: circles for points, arrows for directed edges.

    With a reduction instance, the sector rays, the two ellipse guides, and
    one group per small arc / large chain are added for inspection.
    """
    frame = _Frame(points)
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_W}" height="{_H}" '
        f'viewBox="0 0 {_W} {_H}">',
        "<defs>"
        '<marker id="arrow" viewBox="0 0 10 10" refX="9" refY="5" '
        'markerWidth="6" markerHeight="6" orient="auto-start-reverse">'
        '<path d="M 0 0 L 10 5 L 0 10 z" fill="#444"/>'
        "</marker>"
        "</defs>",
        f'<rect width="{_W}" height="{_H}" fill="white"/>',
    ]

    if reduction is not None:
        apex = points[reduction.fixed_point]
        reach = 2.0 * max(
            max(abs(float(p.x)) for p in points), max(abs(float(p.y)) for p in points), 1.0
        )
        parts.append('<g class="sector-rays" stroke="#bbb" stroke-width="0.8">')
        for slope in reduction.layout.ray_slopes:
            # upward ray direction (-1, -slope)
            end_x = float(apex.x) - reach
            end_y = float(apex.y) + reach * float(-slope)
            parts.append(
                f'<line x1="{_fmt(frame.x(apex.x))}" y1="{_fmt(frame.y(apex.y))}" '
                f'x2="{_fmt(frame.x(end_x))}" y2="{_fmt(frame.y(end_y))}"/>'
            )
        parts.append("</g>")
        parts.append('<g class="curve-guides" fill="none" stroke="#ddd" stroke-width="0.8">')
        for scale in ("1", "3/2"):
            s = Fraction(scale)
            parts.append(
                f'<ellipse cx="{_fmt(frame.x(0))}" cy="{_fmt(frame.y(0))}" '
                f'rx="{_fmt(5 * float(s) * frame.scale)}" ry="{_fmt(3 * float(s) * frame.scale)}"/>'
            )
        parts.append("</g>")

    if embedding is not None:
        parts.append('<g class="edges">')
        for u, v in embedding.graph.edges:
            parts.append(_edge_line(frame, embedding.point_of(u), embedding.point_of(v)))
        parts.append("</g>")

    if reduction is not None:
        grouped = set()
        for k, small in enumerate(reduction.layout.small_sets, start=1):
            parts.append(f'<g class="small-set" id="small-{k}">')
            for i in small:
                grouped.add(i)
                parts.append(_circle(frame, points[i], 2.4, "#d95f02"))
            parts.append("</g>")
        for k, large in enumerate(reduction.layout.large_sets):
            parts.append(f'<g class="large-set" id="large-{k}">')
            for i in large:
                grouped.add(i)
                parts.append(_circle(frame, points[i], 2.4, "#1b9e77"))
            parts.append("</g>")
        parts.append('<g class="other-points">')
        for i, p in enumerate(points):
            if i not in grouped:
                parts.append(_circle(frame, p, 3.2, "#333"))
        parts.append("</g>")
    else:
        parts.append('<g class="points">')
        for p in points:
            parts.append(_circle(frame, p, 3.2, "#333"))
        parts.append("</g>")

    parts.append("</svg>")
    return "\n".join(parts) + "\n"
