"""Figure-style SVG rendering of covers.

Visual language: the grid in light gray, stars as filled center dots with
bold arms toward their leaves (arms stop short of the leaf like the usual
hand-drawn figures), 4-cycles as shaded unit squares with bold outlines,
and thick (multiply covered) edges highlighted in red.  Row 1 renders at
the bottom.  One lattice step is 32 px with a 16 px margin, and the output
is byte-for-byte deterministic for identical input.
"""

from __future__ import annotations

from .diagnostics import thick_edges
from .grid import Cover, FourCycle, Grid, Star, Vertex

UNIT = 32
MARGIN = 16


def _xy(grid: Grid, v: Vertex) -> tuple[int, int]:
    c, r = v
    return MARGIN + (c - 1) * UNIT, MARGIN + (grid.p - r) * UNIT


def render_svg(cover: Cover) -> str:
    grid = cover.grid
    width = MARGIN * 2 + (grid.q - 1) * UNIT
    height = MARGIN * 2 + (grid.p - 1) * UNIT
    parts: list[str] = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<rect width="{width}" height="{height}" fill="white"/>',
        '<g class="grid" stroke="#cccccc" stroke-width="1">',
    ]
    for u, v in grid.edges:
        (x1, y1), (x2, y2) = _xy(grid, u), _xy(grid, v)
        parts.append(f'<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}"/>')
    parts.append("</g>")

    squares = [b for b in cover if isinstance(b, FourCycle)]
    if squares:
        parts.append('<g class="cycles" fill="#c8c8c8" stroke="#222222" stroke-width="3">')
        for sq in squares:
            x, y = _xy(grid, (sq.anchor[0], sq.anchor[1] + 1))
            parts.append(
                f'<rect class="cycle" x="{x}" y="{y}" width="{UNIT}" height="{UNIT}"/>'
            )
        parts.append("</g>")

    stars = [b for b in cover if isinstance(b, Star)]
    if stars:
        parts.append('<g class="stars" stroke="#222222" stroke-width="3">')
        for s in stars:
            cx, cy = _xy(grid, s.center)
            for leaf in sorted(s.leaves):
                lx, ly = _xy(grid, leaf)
                # arm stops 6 px short of the leaf vertex
                ex = lx - (6 if lx > cx else -6 if lx < cx else 0)
                ey = ly - (6 if ly > cy else -6 if ly < cy else 0)
                parts.append(
                    f'<line class="arm" x1="{cx}" y1="{cy}" x2="{ex}" y2="{ey}"/>'
                )
            parts.append(
                f'<circle class="star-center" cx="{cx}" cy="{cy}" r="5" fill="#222222"/>'
            )
        parts.append("</g>")

    thick = sorted(thick_edges(grid, cover), key=grid.edge_index.__getitem__)
    if thick:
        parts.append('<g class="thick" stroke="#cc2222" stroke-width="5">')
        for u, v in thick:
            (x1, y1), (x2, y2) = _xy(grid, u), _xy(grid, v)
            parts.append(f'<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}"/>')
        parts.append("</g>")

    parts.append("</svg>")
    return "\n".join(parts) + "\n"
