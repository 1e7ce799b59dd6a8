"""Spherical and classical mosaics: faces, cube-edge gluing, validation.

A spherical n-mosaic tiles all six faces of an n x n x n cube.  Faces are
stored as they appear in the cross-shaped net (U above F; L, F, R, B in a
row; D below F), every face drawn as seen from outside the cube, so no
extra per-face orientation data is needed: it all lives in the gluing
table below.

Face frames fold consistently onto the cube [0,n]^3 (x right, y up,
z toward the viewer, F at z=n).  The lattice point of face ``f`` at net
row r, column c sits at ``ORIGIN[f]*n + RIGHT[f]*c + DOWN[f]*r``; tests
use this embedding as an independent oracle for the gluing table.
"""

from __future__ import annotations

import enum
import functools
from dataclasses import dataclass

from .errors import InvalidInput
from .tiles import Side, Tile, has_connection, mirror_tile, rotate_tile

Vec = tuple[int, int, int]
Mat = tuple[Vec, Vec, Vec]


class FaceId(enum.IntEnum):
    U = 0
    L = 1
    F = 2
    R = 3
    B = 4
    D = 5


FACE_ORDER = (FaceId.U, FaceId.L, FaceId.F, FaceId.R, FaceId.B, FaceId.D)

# unit-cube embedding of each face's net frame (scaled by n at use sites)
ORIGIN: dict[FaceId, Vec] = {
    FaceId.U: (0, 1, 0),
    FaceId.L: (0, 1, 0),
    FaceId.F: (0, 1, 1),
    FaceId.R: (1, 1, 1),
    FaceId.B: (1, 1, 0),
    FaceId.D: (0, 0, 1),
}
RIGHT: dict[FaceId, Vec] = {
    FaceId.U: (1, 0, 0),
    FaceId.L: (0, 0, 1),
    FaceId.F: (1, 0, 0),
    FaceId.R: (0, 0, -1),
    FaceId.B: (-1, 0, 0),
    FaceId.D: (1, 0, 0),
}
DOWN: dict[FaceId, Vec] = {
    FaceId.U: (0, 0, 1),
    FaceId.L: (0, -1, 0),
    FaceId.F: (0, -1, 0),
    FaceId.R: (0, -1, 0),
    FaceId.B: (0, -1, 0),
    FaceId.D: (0, 0, -1),
}
NORMAL: dict[FaceId, Vec] = {
    FaceId.U: (0, 1, 0),
    FaceId.L: (-1, 0, 0),
    FaceId.F: (0, 0, 1),
    FaceId.R: (1, 0, 0),
    FaceId.B: (0, 0, -1),
    FaceId.D: (0, -1, 0),
}


@dataclass(frozen=True, order=True)
class CellAddr:
    face: FaceId
    row: int
    col: int


# (face, side) -> (face, side, index reversed).  Along Top/Bottom the index
# is the column, along Left/Right the row; "reversed" maps index i to
# n-1-i.  12 cube edges, each listed from both sides; involutive.
_GLUE_HALF: tuple[tuple[FaceId, Side, FaceId, Side, bool], ...] = (
    (FaceId.U, Side.BOTTOM, FaceId.F, Side.TOP, False),
    (FaceId.L, Side.RIGHT, FaceId.F, Side.LEFT, False),
    (FaceId.F, Side.RIGHT, FaceId.R, Side.LEFT, False),
    (FaceId.R, Side.RIGHT, FaceId.B, Side.LEFT, False),
    (FaceId.F, Side.BOTTOM, FaceId.D, Side.TOP, False),
    (FaceId.U, Side.LEFT, FaceId.L, Side.TOP, False),
    (FaceId.U, Side.RIGHT, FaceId.R, Side.TOP, True),
    (FaceId.U, Side.TOP, FaceId.B, Side.TOP, True),
    (FaceId.L, Side.LEFT, FaceId.B, Side.RIGHT, False),
    (FaceId.D, Side.LEFT, FaceId.L, Side.BOTTOM, True),
    (FaceId.D, Side.RIGHT, FaceId.R, Side.BOTTOM, False),
    (FaceId.D, Side.BOTTOM, FaceId.B, Side.BOTTOM, True),
)


def glue_table() -> dict[tuple[FaceId, Side], tuple[FaceId, Side, bool]]:
    """The fixed cube-edge gluing of the cross net, as an involutive map."""
    table: dict[tuple[FaceId, Side], tuple[FaceId, Side, bool]] = {}
    for fa, sa, fb, sb, rev in _GLUE_HALF:
        table[(fa, sa)] = (fb, sb, rev)
        table[(fb, sb)] = (fa, sa, rev)
    return table


GLUE = glue_table()


def _side_cell(n: int, face: FaceId, side: Side, index: int) -> CellAddr:
    if side == Side.TOP:
        return CellAddr(face, 0, index)
    if side == Side.BOTTOM:
        return CellAddr(face, n - 1, index)
    if side == Side.LEFT:
        return CellAddr(face, index, 0)
    return CellAddr(face, index, n - 1)


def _side_index(cell: CellAddr, side: Side) -> int:
    return cell.col if side in (Side.TOP, Side.BOTTOM) else cell.row


def neighbor(n: int, cell: CellAddr, side: Side) -> tuple[CellAddr, Side]:
    """Cell and side abutting ``(cell, side)``; an involution without
    fixed points."""
    r, c = cell.row, cell.col
    if side == Side.TOP and r > 0:
        return CellAddr(cell.face, r - 1, c), Side.BOTTOM
    if side == Side.BOTTOM and r < n - 1:
        return CellAddr(cell.face, r + 1, c), Side.TOP
    if side == Side.LEFT and c > 0:
        return CellAddr(cell.face, r, c - 1), Side.RIGHT
    if side == Side.RIGHT and c < n - 1:
        return CellAddr(cell.face, r, c + 1), Side.LEFT
    face2, side2, rev = GLUE[(cell.face, side)]
    i = _side_index(cell, side)
    if rev:
        i = n - 1 - i
    return _side_cell(n, face2, side2, i), side2


@functools.lru_cache(maxsize=32)
def neighbor_table(n: int) -> tuple[tuple[int, int], ...]:
    """Flat lookup: index ``cell_index*4 + side`` -> (cell_index, side).

    Cell indices run over faces in U,L,F,R,B,D order, row-major per face.
    """
    table = []
    for face in FACE_ORDER:
        for r in range(n):
            for c in range(n):
                for side in Side:
                    cell2, side2 = neighbor(n, CellAddr(face, r, c), Side(side))
                    idx2 = (int(cell2.face) * n + cell2.row) * n + cell2.col
                    table.append((idx2, int(side2)))
    return tuple(table)


def cell_index(n: int, cell: CellAddr) -> int:
    return (int(cell.face) * n + cell.row) * n + cell.col


def cell_from_index(n: int, idx: int) -> CellAddr:
    face, rem = divmod(idx, n * n)
    r, c = divmod(rem, n)
    return CellAddr(FaceId(face), r, c)


Grid = tuple[tuple[Tile, ...], ...]


def _check_grid(grid, n: int) -> Grid:
    rows = tuple(tuple(Tile(t) for t in row) for row in grid)
    if len(rows) != n or any(len(row) != n for row in rows):
        raise InvalidInput(f"grid is not {n}x{n}")
    return rows


@dataclass(frozen=True)
class SphericalMosaic:
    """Six n x n tile grids in U,L,F,R,B,D order, net orientation."""

    n: int
    grids: tuple[Grid, Grid, Grid, Grid, Grid, Grid]

    def __post_init__(self):
        if self.n < 1:
            raise InvalidInput("n must be positive")
        object.__setattr__(
            self, "grids", tuple(_check_grid(g, self.n) for g in self.grids)
        )
        if len(self.grids) != 6:
            raise InvalidInput("expected six face grids")

    @classmethod
    def empty(cls, n: int) -> "SphericalMosaic":
        blank = tuple(tuple(Tile.T0 for _ in range(n)) for _ in range(n))
        return cls(n, tuple(blank for _ in range(6)))

    @classmethod
    def from_faces(cls, n: int, faces: dict[FaceId, object]) -> "SphericalMosaic":
        blank = tuple(tuple(Tile.T0 for _ in range(n)) for _ in range(n))
        grids = [faces.get(f, blank) for f in FACE_ORDER]
        return cls(n, tuple(grids))

    @classmethod
    def from_flat(cls, n: int, flat) -> "SphericalMosaic":
        """Rebuild from 6n^2 tile tokens in cell-index order."""
        if len(flat) != 6 * n * n:
            raise InvalidInput("wrong number of tiles")
        grids = []
        for f in range(6):
            base = f * n * n
            grids.append(
                tuple(
                    tuple(Tile(flat[base + r * n + c]) for c in range(n))
                    for r in range(n)
                )
            )
        return cls(n, tuple(grids))

    def tile(self, cell: CellAddr) -> Tile:
        return self.grids[int(cell.face)][cell.row][cell.col]

    def flat(self) -> tuple[int, ...]:
        return tuple(
            int(t) for grid in self.grids for row in grid for t in row
        )

    def cells(self):
        for face in FACE_ORDER:
            for r in range(self.n):
                for c in range(self.n):
                    yield CellAddr(face, r, c)

    def with_tile(self, cell: CellAddr, tile: Tile) -> "SphericalMosaic":
        grids = [list(map(list, g)) for g in self.grids]
        grids[int(cell.face)][cell.row][cell.col] = Tile(tile)
        return SphericalMosaic(
            self.n, tuple(tuple(map(tuple, g)) for g in grids)
        )


@dataclass(frozen=True)
class ClassicalMosaic:
    """A plain n x n mosaic (one grid, no gluing)."""

    n: int
    grid: Grid

    def __post_init__(self):
        if self.n < 1:
            raise InvalidInput("n must be positive")
        object.__setattr__(self, "grid", _check_grid(self.grid, self.n))

    def tile(self, r: int, c: int) -> Tile:
        return self.grid[r][c]

    def rotated(self, quarter_turns: int) -> "ClassicalMosaic":
        """Whole-grid ccw rotation, tiles included."""
        g = self.grid
        n = self.n
        for _ in range(quarter_turns % 4):
            g = tuple(
                tuple(rotate_tile(g[r][n - 1 - c], 1) for r in range(n))
                for c in range(n)
            )
        return ClassicalMosaic(n, g)


@dataclass(frozen=True)
class Mismatch:
    """One oriented edge-midpoint mismatch: the tile at ``cell`` disagrees
    with the abutting tile about the shared midpoint."""

    cell: CellAddr
    side: Side
    other: CellAddr
    other_side: Side


@dataclass(frozen=True)
class ValidationReport:
    mismatches: tuple[Mismatch, ...]

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def __bool__(self) -> bool:  # truthiness == validity
        return self.ok


def validate(m: SphericalMosaic) -> ValidationReport:
    """Check suitable connectedness; mismatches are data, not failures.

    Every edge midpoint is inspected from both sides, so one dangling
    connection point yields two oriented mismatch records.
    """
    bad = []
    n = m.n
    for cell in m.cells():
        t = m.tile(cell)
        for side in Side:
            other, other_side = neighbor(n, cell, side)
            if has_connection(t, side) != has_connection(m.tile(other), other_side):
                bad.append(Mismatch(cell, side, other, other_side))
    return ValidationReport(tuple(bad))


def validate_classical(k: ClassicalMosaic) -> ValidationReport:
    """Suitable connectedness for a planar mosaic: interior midpoints must
    agree and boundary midpoints must be blank."""
    bad = []
    n = k.n
    offs = {Side.TOP: (-1, 0), Side.RIGHT: (0, 1), Side.BOTTOM: (1, 0), Side.LEFT: (0, -1)}
    for r in range(n):
        for c in range(n):
            t = k.tile(r, c)
            cell = CellAddr(FaceId.F, r, c)
            for side in Side:
                dr, dc = offs[side]
                r2, c2 = r + dr, c + dc
                if 0 <= r2 < n and 0 <= c2 < n:
                    if has_connection(t, side) != has_connection(
                        k.tile(r2, c2), side.opposite()
                    ):
                        bad.append(
                            Mismatch(cell, side, CellAddr(FaceId.F, r2, c2), side.opposite())
                        )
                elif has_connection(t, side):
                    bad.append(Mismatch(cell, side, cell, side))
    return ValidationReport(tuple(bad))


def mirror_mosaic(m: SphericalMosaic) -> SphericalMosaic:
    """Switch every crossing; represents the mirror knot."""
    return SphericalMosaic(
        m.n,
        tuple(
            tuple(tuple(mirror_tile(t) for t in row) for row in grid)
            for grid in m.grids
        ),
    )


# --- the rotation group of the cube (24 orientation-preserving elements) ---


def _matmul(a: Mat, b: Mat) -> Mat:
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(3)) for j in range(3))
        for i in range(3)
    )


def _apply(m: Mat, v: Vec) -> Vec:
    return tuple(sum(m[i][k] * v[k] for k in range(3)) for i in range(3))


@functools.lru_cache(maxsize=1)
def cube_rotations() -> tuple[Mat, ...]:
    """All 24 rotation matrices, in a fixed sorted order."""
    ident: Mat = ((1, 0, 0), (0, 1, 0), (0, 0, 1))
    gens = (
        ((1, 0, 0), (0, 0, -1), (0, 1, 0)),  # quarter turn about x
        ((0, 0, 1), (0, 1, 0), (-1, 0, 0)),  # about y
        ((0, -1, 0), (1, 0, 0), (0, 0, 1)),  # about z
    )
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for m in frontier:
            for g in gens:
                p = _matmul(g, m)
                if p not in seen:
                    seen.add(p)
                    nxt.append(p)
        frontier = nxt
    rots = tuple(sorted(seen))
    assert len(rots) == 24
    return rots


_FACE_BY_NORMAL = {v: f for f, v in NORMAL.items()}


def _cell_center(n: int, face: FaceId, r: int, c: int) -> Vec:
    """Cell center in doubled coordinates (even cube size 2n)."""
    o, ri, dn = ORIGIN[face], RIGHT[face], DOWN[face]
    return tuple(
        2 * n * o[i] + (2 * c + 1) * ri[i] + (2 * r + 1) * dn[i] for i in range(3)
    )


@functools.lru_cache(maxsize=32)
def rotation_cell_maps(n: int) -> tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]:
    """For each of the 24 rotations: (destination index per cell index,
    ccw tile quarter-turns per cell index), over flat cell indices."""
    ctr = (n, n, n)
    maps = []
    for g in cube_rotations():
        perm = [0] * (6 * n * n)
        turns = [0] * (6 * n * n)
        for face in FACE_ORDER:
            nf = _FACE_BY_NORMAL[_apply(g, NORMAL[face])]
            new_right = _apply(g, RIGHT[face])
            if new_right == RIGHT[nf]:
                k = 0
            elif new_right == tuple(-x for x in DOWN[nf]):
                k = 1
            elif new_right == tuple(-x for x in RIGHT[nf]):
                k = 2
            else:
                k = 3
            for r in range(n):
                for c in range(n):
                    p = _cell_center(n, face, r, c)
                    q = tuple(
                        _apply(g, tuple(p[i] - ctr[i] for i in range(3)))[j] + ctr[j]
                        for j in range(3)
                    )
                    d = tuple(q[i] - 2 * n * ORIGIN[nf][i] for i in range(3))
                    c2 = (sum(d[i] * RIGHT[nf][i] for i in range(3)) - 1) // 2
                    r2 = (sum(d[i] * DOWN[nf][i] for i in range(3)) - 1) // 2
                    src = (int(face) * n + r) * n + c
                    perm[src] = (int(nf) * n + r2) * n + c2
                    turns[src] = k
        maps.append((tuple(perm), tuple(turns)))
    return tuple(maps)


def rotate_flat(n: int, flat, cell_map) -> tuple[int, ...]:
    """Apply one rotation_cell_maps entry to a flat tile tuple."""
    perm, turns = cell_map
    out = [0] * len(flat)
    for src, t in enumerate(flat):
        out[perm[src]] = int(rotate_tile(Tile(t), turns[src]))
    return tuple(out)


def rotate_mosaic(m: SphericalMosaic, g: Mat) -> SphericalMosaic:
    """Rotate the whole drawn diagram by the cube rotation ``g``."""
    idx = cube_rotations().index(g)
    cell_map = rotation_cell_maps(m.n)[idx]
    return SphericalMosaic.from_flat(m.n, rotate_flat(m.n, m.flat(), cell_map))


def euler_characteristic(n: int) -> int:
    """V - E + F of the quotient cell complex of the six glued grids.

    Computed from the gluing table alone (no embedding): equals 2 exactly
    when the gluing closes up into a sphere.
    """
    faces = 6 * n * n

    # edges: horizontal and vertical unit segments per face, boundary ones
    # identified via the gluing; vertices likewise, via segment endpoints.
    parent: dict = {}

    def find(x):
        while parent.setdefault(x, x) != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb

    # lattice points: (face, r, c) with 0 <= r, c <= n
    def point(face, r, c):
        return ("v", int(face), r, c)

    # segment between consecutive lattice points along a face edge line
    def seg(face, r1, c1, r2, c2):
        a, b = sorted([(r1, c1), (r2, c2)])
        return ("e", int(face), a, b)

    for face in FACE_ORDER:
        for r in range(n + 1):
            for c in range(n + 1):
                find(point(face, r, c))
        for r in range(n + 1):
            for c in range(n):
                find(seg(face, r, c, r, c + 1))
        for r in range(n):
            for c in range(n + 1):
                find(seg(face, r, c, r + 1, c))

    def boundary_points(face, side, i):
        # endpoints (lattice) of the i-th boundary segment along a side
        if side == Side.TOP:
            return (0, i), (0, i + 1)
        if side == Side.BOTTOM:
            return (n, i), (n, i + 1)
        if side == Side.LEFT:
            return (i, 0), (i + 1, 0)
        return (i, n), (i + 1, n)

    for fa, sa, fb, sb, rev in _GLUE_HALF:
        for i in range(n):
            j = n - 1 - i if rev else i
            (r1, c1), (r2, c2) = boundary_points(fa, sa, i)
            (r3, c3), (r4, c4) = boundary_points(fb, sb, j)
            if rev:
                (r3, c3), (r4, c4) = (r4, c4), (r3, c3)
            union(seg(fa, r1, c1, r2, c2), seg(fb, r3, c3, r4, c4))
            union(point(fa, r1, c1), point(fb, r3, c3))
            union(point(fa, r2, c2), point(fb, r4, c4))

    verts = {find(k) for k in list(parent) if k[0] == "v"}
    edges = {find(k) for k in list(parent) if k[0] == "e"}
    return len(verts) - len(edges) + faces
