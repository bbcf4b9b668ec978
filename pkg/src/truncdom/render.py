"""Plane drawings of finite graphs: SVG with true tiling geometry, and a
character-cell sketch for terminals.

Geometry: every edge has unit length, so squares are diamonds of side 1 and
octagons are regular with side 1. Square centers sit on a grid of pitch
1 + sqrt(2). Broadcasting vertices are drawn circled with a translucent
disk suggesting their reach (radius t - 1 in edge lengths); the disk is a
visual cue, not the exact graph-metric ball.
"""

import math

from .lattice import BOTTOM, LEFT, RIGHT, TOP

PITCH = 1.0 + math.sqrt(2.0)
_HALF = math.sqrt(2.0) / 2.0
_OFFSETS = {
    TOP: (0.0, _HALF),
    RIGHT: (_HALF, 0.0),
    BOTTOM: (0.0, -_HALF),
    LEFT: (-_HALF, 0.0),
}


def vertex_xy(v):
    """Plane position of a vertex, y pointing up."""
    ox, oy = _OFFSETS[v.a]
    return PITCH * v.x + ox, PITCH * v.y + oy


def to_svg(g, broadcast=None) -> str:
    """An SVG drawing of the graph, optionally with a broadcast overlaid."""
    scale = 40.0
    pad = 1.5 * scale
    pts = [vertex_xy(v) for v in g.coords]
    xs = [p[0] for p in pts]
    ys = [p[1] for p in pts]
    x0, y1 = min(xs), max(ys)

    def at(i):
        x, y = pts[i]
        return (x - x0) * scale + pad, (y1 - y) * scale + pad

    width = (max(xs) - x0) * scale + 2 * pad
    height = (y1 - min(ys)) * scale + 2 * pad
    towers = sorted(broadcast.vertices) if broadcast else []
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width:.0f}" '
        f'height="{height:.0f}" viewBox="0 0 {width:.0f} {height:.0f}">'
    ]
    if towers:
        reach = (broadcast.t - 1 + 0.35) * scale
        for i in towers:
            cx, cy = at(i)
            out.append(
                f'<circle cx="{cx:.1f}" cy="{cy:.1f}" r="{reach:.1f}" '
                'fill="#fa8c3c" fill-opacity="0.15" stroke="none"/>'
            )
    for i, j in g.edges():
        (x1, y1_), (x2, y2_) = at(i), at(j)
        out.append(
            f'<line x1="{x1:.1f}" y1="{y1_:.1f}" x2="{x2:.1f}" y2="{y2_:.1f}" '
            'stroke="#555" stroke-width="2"/>'
        )
    tower_set = set(towers)
    for i in range(g.vertex_count):
        cx, cy = at(i)
        out.append(f'<circle cx="{cx:.1f}" cy="{cy:.1f}" r="4" fill="#222"/>')
        if i in tower_set:
            out.append(
                f'<circle cx="{cx:.1f}" cy="{cy:.1f}" r="8" fill="none" '
                'stroke="#d0021b" stroke-width="2.5"/>'
            )
    out.append("</svg>")
    return "\n".join(out)


_ASCII_PITCH = 6
_ASCII_OFFSETS = {TOP: (0, 2), RIGHT: (2, 0), BOTTOM: (0, -2), LEFT: (-2, 0)}
_DIAGONALS = {
    (TOP, RIGHT): "\\",
    (RIGHT, BOTTOM): "/",
    (BOTTOM, LEFT): "\\",
    (LEFT, TOP): "/",
}


def _ascii_cell(v):
    dx, dy = _ASCII_OFFSETS[v.a]
    return _ASCII_PITCH * v.x + dx, _ASCII_PITCH * v.y + dy


def to_ascii(g, broadcast=None) -> str:
    """A character sketch: 'o' per vertex ('#' for broadcasters), slashes
    for square sides and '|' '-' for the square-to-square edges."""
    canvas = {}
    for i, j in g.edges():
        u, w = g.coords[i], g.coords[j]
        (ux, uy), (wx, wy) = _ascii_cell(u), _ascii_cell(w)
        if u.x == w.x and u.y == w.y:
            key = (u.a, w.a) if (u.a, w.a) in _DIAGONALS else (w.a, u.a)
            canvas[((ux + wx) // 2, (uy + wy) // 2)] = _DIAGONALS[key]
        elif ux == wx:
            canvas[(ux, (uy + wy) // 2)] = "|"
        else:
            canvas[((ux + wx) // 2, uy)] = "-"
    towers = set(broadcast.vertices) if broadcast else set()
    for i, v in enumerate(g.coords):
        canvas[_ascii_cell(v)] = "#" if i in towers else "o"
    xs = [c[0] for c in canvas]
    ys = [c[1] for c in canvas]
    lines = []
    for y in range(max(ys), min(ys) - 1, -1):
        line = "".join(canvas.get((x, y), " ") for x in range(min(xs), max(xs) + 1))
        lines.append(line.rstrip())
    return "\n".join(lines)
