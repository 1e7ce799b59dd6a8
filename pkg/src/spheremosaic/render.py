"""Render a spherical mosaic's planar net (cross/T layout) as SVG or ASCII.

The six faces are drawn in the net arrangement (U above F; L,F,R,B in a
row; D below F) with tile artwork and the seven identified boundary edge
pairs marked: color-coded bands in SVG, letter pairs a..g in ASCII.
Output is byte-deterministic for a fixed input.
"""

from __future__ import annotations

from .sphere import FACE_ORDER, FaceId, SphericalMosaic, _GLUE_HALF
from .tiles import Side, Tile, has_connection

# face -> (column, row) position in the net, in units of n cells
NET_POS = {
    FaceId.U: (1, 0),
    FaceId.L: (0, 1),
    FaceId.F: (1, 1),
    FaceId.R: (2, 1),
    FaceId.B: (3, 1),
    FaceId.D: (1, 2),
}

# gluings drawn as shared edges inside the net; the rest get markers
_NET_INTERNAL = {
    frozenset({(FaceId.U, Side.BOTTOM), (FaceId.F, Side.TOP)}),
    frozenset({(FaceId.L, Side.RIGHT), (FaceId.F, Side.LEFT)}),
    frozenset({(FaceId.F, Side.RIGHT), (FaceId.R, Side.LEFT)}),
    frozenset({(FaceId.R, Side.RIGHT), (FaceId.B, Side.LEFT)}),
    frozenset({(FaceId.F, Side.BOTTOM), (FaceId.D, Side.TOP)}),
}

_COLORS = ("#e41a1c", "#377eb8", "#4daf4a", "#984ea3", "#ff7f00", "#00bfbf", "#a65628")


def identified_pairs():
    """The seven glued side pairs not adjacent in the net, fixed order."""
    pairs = []
    for fa, sa, fb, sb, rev in _GLUE_HALF:
        key = frozenset({(fa, sa), (fb, sb)})
        if key not in _NET_INTERNAL:
            pairs.append(((fa, sa), (fb, sb), rev))
    return tuple(pairs)


def render(m: SphericalMosaic, style: str = "svg") -> str:
    if style == "svg":
        return render_svg(m)
    if style == "ascii":
        return render_ascii(m)
    raise ValueError(f"unknown style {style!r}")


# --- SVG ---------------------------------------------------------------------

_S = 40  # cell size in px
_M = 24  # outer margin


def _face_origin(face: FaceId, n: int) -> tuple[int, int]:
    cx, cy = NET_POS[face]
    return _M + cx * n * _S, _M + cy * n * _S


def _tile_paths(t: Tile, x: float, y: float) -> list[str]:
    """SVG path fragments for one tile with top-left corner (x, y)."""
    h = _S / 2
    top = (x + h, y)
    right = (x + _S, y + h)
    bottom = (x + h, y + _S)
    left = (x, y + h)
    gap = _S / 6

    def arc(p, q):
        return f"M {p[0]:g} {p[1]:g} A {h:g} {h:g} 0 0 1 {q[0]:g} {q[1]:g}"

    def line(p, q):
        return f"M {p[0]:g} {p[1]:g} L {q[0]:g} {q[1]:g}"

    if t == Tile.T0:
        return []
    if t == Tile.T1:
        return [arc(left, bottom)]
    if t == Tile.T2:
        return [arc(bottom, right)]
    if t == Tile.T3:
        return [arc(right, top)]
    if t == Tile.T4:
        return [arc(top, left)]
    if t == Tile.T5:
        return [line(left, right)]
    if t == Tile.T6:
        return [line(top, bottom)]
    if t == Tile.T7:
        return [arc(top, left), arc(bottom, right)]
    if t == Tile.T8:
        return [arc(right, top), arc(left, bottom)]
    cx, cy = x + h, y + h
    if t == Tile.T9:  # horizontal over, vertical broken
        return [
            line(top, (cx, cy - gap)),
            line((cx, cy + gap), bottom),
            line(left, right),
        ]
    return [  # T10: vertical over, horizontal broken
        line(left, (cx - gap, cy)),
        line((cx + gap, cy), right),
        line(top, bottom),
    ]


def render_svg(m: SphericalMosaic) -> str:
    n = m.n
    width = 4 * n * _S + 2 * _M
    height = 3 * n * _S + 2 * _M
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<rect width="{width}" height="{height}" fill="white"/>',
    ]
    for face in FACE_ORDER:
        ox, oy = _face_origin(face, n)
        out.append(
            f'<g class="face" data-face="{face.name}">'
        )
        for i in range(n + 1):
            out.append(
                f'<line class="grid" x1="{ox}" y1="{oy + i*_S}" x2="{ox + n*_S}" '
                f'y2="{oy + i*_S}" stroke="#bbb" stroke-width="1"/>'
            )
            out.append(
                f'<line class="grid" x1="{ox + i*_S}" y1="{oy}" x2="{ox + i*_S}" '
                f'y2="{oy + n*_S}" stroke="#bbb" stroke-width="1"/>'
            )
        out.append(
            f'<text class="facelabel" x="{ox + 4}" y="{oy + 14}" '
            f'font-family="monospace" font-size="12">{face.name}</text>'
        )
        for r in range(n):
            for c in range(n):
                t = m.grids[int(face)][r][c]
                for d in _tile_paths(t, ox + c * _S, oy + r * _S):
                    out.append(
                        f'<path class="strand" d="{d}" fill="none" '
                        f'stroke="black" stroke-width="2.5"/>'
                    )
        out.append("</g>")
    for color, ((fa, sa), (fb, sb), rev) in zip(_COLORS, identified_pairs()):
        for face, side in ((fa, sa), (fb, sb)):
            out.append(_ident_band(face, side, n, color, rev))
    out.append("</svg>")
    return "\n".join(out) + "\n"


def _ident_band(face: FaceId, side: Side, n: int, color: str, rev: bool) -> str:
    ox, oy = _face_origin(face, n)
    w = n * _S
    off = 5
    if side == Side.TOP:
        x1, y1, x2, y2 = ox, oy - off, ox + w, oy - off
    elif side == Side.BOTTOM:
        x1, y1, x2, y2 = ox, oy + w + off, ox + w, oy + w + off
    elif side == Side.LEFT:
        x1, y1, x2, y2 = ox - off, oy, ox - off, oy + w
    else:
        x1, y1, x2, y2 = ox + w + off, oy, ox + w + off, oy + w
    dash = ' stroke-dasharray="6 3"' if rev else ""
    return (
        f'<line class="ident" data-face="{face.name}" data-side="{side.name}" '
        f'x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" stroke="{color}" '
        f'stroke-width="4"{dash}/>'
    )


# --- ASCII -------------------------------------------------------------------

_CENTER = {
    Tile.T0: " ", Tile.T1: "\\", Tile.T2: "/", Tile.T3: "\\", Tile.T4: "/",
    Tile.T5: "-", Tile.T6: "|", Tile.T7: "(", Tile.T8: ")",
    Tile.T9: "=", Tile.T10: "H",
}


def render_ascii(m: SphericalMosaic) -> str:
    n = m.n
    cell = 3
    width = 4 * n * cell + 2
    height = 3 * n * cell + 2
    canvas = [[" "] * width for _ in range(height)]

    def put(x, y, ch):
        canvas[y][x] = ch

    for face in FACE_ORDER:
        cx, cy = NET_POS[face]
        ox, oy = 1 + cx * n * cell, 1 + cy * n * cell
        for r in range(n):
            for c in range(n):
                t = m.grids[int(face)][r][c]
                bx, by = ox + c * cell, oy + r * cell
                if has_connection(t, Side.TOP):
                    put(bx + 1, by, "|")
                if has_connection(t, Side.BOTTOM):
                    put(bx + 1, by + 2, "|")
                if has_connection(t, Side.LEFT):
                    put(bx, by + 1, "-")
                if has_connection(t, Side.RIGHT):
                    put(bx + 2, by + 1, "-")
                put(bx + 1, by + 1, _CENTER[t])
        put(ox, oy, face.name)

    legend = []
    for label, ((fa, sa), (fb, sb), rev) in zip("abcdefg", identified_pairs()):
        for face, side in ((fa, sa), (fb, sb)):
            cx, cy = NET_POS[face]
            ox, oy = 1 + cx * n * cell, 1 + cy * n * cell
            mid = n * cell // 2
            if side == Side.TOP:
                put(ox + mid, oy - 1, label)
            elif side == Side.BOTTOM:
                put(ox + mid, oy + n * cell, label)
            elif side == Side.LEFT:
                put(ox - 1, oy + mid, label)
            else:
                put(ox + n * cell, oy + mid, label)
        arrow = "reversed" if rev else "straight"
        legend.append(
            f"# {label}: {fa.name}.{sa.name.lower()} ~ {fb.name}.{sb.name.lower()} ({arrow})"
        )
    body = "\n".join("".join(row).rstrip() for row in canvas)
    return body + "\n" + "\n".join(legend) + "\n"
