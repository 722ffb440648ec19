"""SVG diagrams of planar polytopes with their stability markers.

This is the single module where floating point is allowed: exact rational
coordinates are mapped to pixel space and rounded to 6 decimal digits at the
last moment, for rendering only.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional, Union

from .errors import UnsupportedDimension
from .invariants import q_beta
from .polytope import LatticePolytope, RatVec

_SCALE = 80.0  # pixels per lattice unit
_MARGIN = 1.0  # lattice units of padding around the drawing


def _fmt(x: float) -> str:
    return f"{x:.6f}"


class _Frame:
    """Affine map from lattice coordinates to pixel coordinates (y flipped)."""

    def __init__(self, xs: list[float], ys: list[float]):
        self.x_min = min(xs) - _MARGIN
        self.x_max = max(xs) + _MARGIN
        self.y_min = min(ys) - _MARGIN
        self.y_max = max(ys) + _MARGIN
        self.width = (self.x_max - self.x_min) * _SCALE
        self.height = (self.y_max - self.y_min) * _SCALE

    def px(self, x: float, y: float) -> tuple[float, float]:
        return ((x - self.x_min) * _SCALE, (self.y_max - y) * _SCALE)

    def point(self, v: RatVec) -> tuple[float, float]:
        return self.px(float(v[0]), float(v[1]))


def _marker(frame: _Frame, v: RatVec, label: str, color: str) -> list[str]:
    x, y = frame.point(v)
    return [
        f'  <circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="4" fill="{color}"/>',
        f'  <text x="{_fmt(x + 7)}" y="{_fmt(y - 7)}" font-size="14" fill="{color}">{label}</text>',
    ]


def render_svg(P: LatticePolytope, beta: Optional[Union[Fraction, int, str]] = None) -> str:
    """Polygon outline with axes, facet-normal arrows and the points O, P_c,
    Q and (when an angle is given) Q_beta.

    Only 2-dimensional polytopes are rendered.
    """
    if P.dim != 2:
        raise UnsupportedDimension(f"SVG rendering supports dim 2 only, got {P.dim}")

    pc = P.barycenter
    reflexive = P.is_reflexive
    q_point: Optional[RatVec] = None
    qb_point: Optional[RatVec] = None
    if reflexive and not pc.is_zero:
        q_point = -pc * P.ray_exit_scale(-pc)
        if beta is not None:
            qb_point = q_beta(P, Fraction(beta))

    xs = [float(v[0]) for v in P.vertices] + [0.0]
    ys = [float(v[1]) for v in P.vertices] + [0.0]
    for extra in (q_point, qb_point):
        if extra is not None:
            xs.append(float(extra[0]))
            ys.append(float(extra[1]))
    frame = _Frame(xs, ys)

    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        "<!-- lattice units scaled by %.1f px; all coordinates rounded to 6 decimal"
        " digits; viewBox covers the polytope plus a %.1f-unit margin -->" % (_SCALE, _MARGIN),
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {_fmt(frame.width)} {_fmt(frame.height)}"'
        f' width="{_fmt(frame.width)}" height="{_fmt(frame.height)}">',
        "  <defs>",
        '    <marker id="arrow" viewBox="0 0 10 10" refX="9" refY="5" markerWidth="6"'
        ' markerHeight="6" orient="auto-start-reverse">',
        '      <path d="M 0 0 L 10 5 L 0 10 z" fill="#555555"/>',
        "    </marker>",
        "  </defs>",
        f'  <rect x="0" y="0" width="{_fmt(frame.width)}" height="{_fmt(frame.height)}" fill="white"/>',
    ]

    # Coordinate axes through the lattice origin.
    ox0, oy0 = frame.px(frame.x_min, 0.0)
    ox1, oy1 = frame.px(frame.x_max, 0.0)
    lines.append(
        f'  <line x1="{_fmt(ox0)}" y1="{_fmt(oy0)}" x2="{_fmt(ox1)}" y2="{_fmt(oy1)}"'
        ' stroke="#bbbbbb" stroke-width="1"/>'
    )
    ax0, ay0 = frame.px(0.0, frame.y_min)
    ax1, ay1 = frame.px(0.0, frame.y_max)
    lines.append(
        f'  <line x1="{_fmt(ax0)}" y1="{_fmt(ay0)}" x2="{_fmt(ax1)}" y2="{_fmt(ay1)}"'
        ' stroke="#bbbbbb" stroke-width="1"/>'
    )

    # Polygon outline: walk the boundary edge by edge (facets are edges in 2D).
    ordered = _boundary_cycle(P)
    path = "M " + " L ".join(f"{_fmt(x)} {_fmt(y)}" for x, y in (frame.point(v) for v in ordered)) + " Z"
    lines.append(f'  <path d="{path}" fill="#eef4ff" stroke="#1f4e9c" stroke-width="2"/>')

    # Outward facet-normal arrows from edge midpoints.
    for facet in P.facets:
        ends = [v for v in P.vertices if facet.active_at(v)]
        mid = (ends[0] + ends[1]) * Fraction(1, 2)
        nx, ny = float(facet.normal[0]), float(facet.normal[1])
        norm = (nx * nx + ny * ny) ** 0.5
        tip_x = float(mid[0]) + 0.45 * nx / norm
        tip_y = float(mid[1]) + 0.45 * ny / norm
        x0, y0 = frame.point(mid)
        x1, y1 = frame.px(tip_x, tip_y)
        lines.append(
            f'  <line x1="{_fmt(x0)}" y1="{_fmt(y0)}" x2="{_fmt(x1)}" y2="{_fmt(y1)}"'
            ' stroke="#555555" stroke-width="1.5" marker-end="url(#arrow)"/>'
        )

    origin = RatVec([0, 0])
    lines += _marker(frame, origin, "O", "#000000")
    lines += _marker(frame, pc, "P_c", "#b03a2e")
    if q_point is not None:
        lines += _marker(frame, q_point, "Q", "#1e8449")
    if qb_point is not None:
        lines += _marker(frame, qb_point, "Q_β", "#7d3c98")

    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def _boundary_cycle(P: LatticePolytope) -> list[RatVec]:
    """Vertices in boundary order, starting from the first stored vertex."""
    adjacency: dict[RatVec, list[RatVec]] = {v: [] for v in P.vertices}
    for facet in P.facets:
        ends = [v for v in P.vertices if facet.active_at(v)]
        adjacency[ends[0]].append(ends[1])
        adjacency[ends[1]].append(ends[0])
    start = P.vertices[0]
    cycle = [start]
    prev = None
    while True:
        candidates = [v for v in sorted(adjacency[cycle[-1]]) if v != prev]
        nxt = candidates[0]
        if nxt == start:
            break
        prev = cycle[-1]
        cycle.append(nxt)
    return cycle
