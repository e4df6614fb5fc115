"""Deterministic SVG figures of a staircase with its Newton polygon.

Fixed scale of 24 px per lattice unit with a one-unit margin; no timestamps
and no randomness, so identical inputs give byte-identical files.
"""

from __future__ import annotations

from .newton import newton_vertices
from .staircase import MonomialIdeal

SCALE = 24
MARGIN = 1  # lattice units on every side

_REGION_FILL = "#cfdcec"
_GEN_FILL = "#1f4e79"
_VERTEX_FILL = "#000000"
_EDGE_STROKE = "#b02418"
_AXIS = "#404040"


def render_svg(ideal: MonomialIdeal) -> str:
    if ideal.is_unit:
        raise ValueError("cannot render the unit ideal")
    np_ = newton_vertices(ideal)
    xmax = ideal.a0 + 1
    ymax = ideal.br + 1
    width = (xmax + 2 * MARGIN) * SCALE
    height = (ymax + 2 * MARGIN) * SCALE

    def pt(u: float, v: float) -> tuple[float, float]:
        return ((u + MARGIN) * SCALE, height - (v + MARGIN) * SCALE)

    def fmt(x: float) -> str:
        return f"{x:.1f}".rstrip("0").rstrip(".")

    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<rect width="{width}" height="{height}" fill="#ffffff"/>',
    ]

    # shaded staircase region, clipped to the plot window
    path = [pt(xmax, 0), pt(ideal.a0, 0)]
    for (a_i, b_i), (a_next, b_next) in zip(ideal.gens, ideal.gens[1:]):
        path.append(pt(a_i, b_next))
        path.append(pt(a_next, b_next))
    path.append(pt(0, ymax))
    path.append(pt(xmax, ymax))
    d = "M " + " L ".join(f"{fmt(x)} {fmt(y)}" for x, y in path) + " Z"
    lines.append(f'<path d="{d}" fill="{_REGION_FILL}" stroke="none"/>')

    # axes with integer ticks
    ox, oy = pt(0, 0)
    ax_x, _ = pt(xmax, 0)
    _, ax_y = pt(0, ymax)
    lines.append(
        f'<line x1="{fmt(ox)}" y1="{fmt(oy)}" x2="{fmt(ax_x)}" y2="{fmt(oy)}" '
        f'stroke="{_AXIS}" stroke-width="1"/>'
    )
    lines.append(
        f'<line x1="{fmt(ox)}" y1="{fmt(oy)}" x2="{fmt(ox)}" y2="{fmt(ax_y)}" '
        f'stroke="{_AXIS}" stroke-width="1"/>'
    )
    for u in range(1, xmax + 1):
        x, y = pt(u, 0)
        lines.append(
            f'<line x1="{fmt(x)}" y1="{fmt(y - 3)}" x2="{fmt(x)}" y2="{fmt(y + 3)}" '
            f'stroke="{_AXIS}" stroke-width="1"/>'
        )
    for v in range(1, ymax + 1):
        x, y = pt(0, v)
        lines.append(
            f'<line x1="{fmt(x - 3)}" y1="{fmt(y)}" x2="{fmt(x + 3)}" y2="{fmt(y)}" '
            f'stroke="{_AXIS}" stroke-width="1"/>'
        )

    # Newton polygon edges
    pts = " ".join(f"{fmt(x)},{fmt(y)}" for x, y in (pt(u, v) for u, v in np_.vertices))
    lines.append(
        f'<polyline points="{pts}" fill="none" stroke="{_EDGE_STROKE}" stroke-width="2"/>'
    )

    # generator points, then emphasized hull vertices on top
    for u, v in ideal.gens:
        x, y = pt(u, v)
        lines.append(f'<circle cx="{fmt(x)}" cy="{fmt(y)}" r="3" fill="{_GEN_FILL}"/>')
    for u, v in np_.vertices:
        x, y = pt(u, v)
        lines.append(f'<circle cx="{fmt(x)}" cy="{fmt(y)}" r="4.5" fill="{_VERTEX_FILL}"/>')

    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def render(ideal: MonomialIdeal, out: str) -> None:
    svg = render_svg(ideal)
    with open(out, "w", encoding="utf-8") as fh:
        fh.write(svg)
