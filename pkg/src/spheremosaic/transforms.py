"""Constructive maps between classical and spherical mosaics.

These realize size/tile reductions by wrapping a planar mosaic around cube
corners so clipped connection points rejoin across the gluing, plus the
maximal-crossing belt construction.  Placement details follow the fixed
gluing table; post-construction validation is the correctness arbiter, so
a failed validation raises ConnectionBroken (an implementation bug, never
a legal outcome).
"""

from __future__ import annotations

import enum
import random

from .errors import (
    BoundaryHasFourConnectionTile,
    ConnectionBroken,
    IneligiblePosition,
    InternalError,
    InvalidInput,
)
from .sphere import (
    CellAddr,
    ClassicalMosaic,
    FACE_ORDER,
    FaceId,
    SphericalMosaic,
    rotate_mosaic,
    validate,
    validate_classical,
)
from .tiles import Side, Tile, rotate_tile
from .trace import components, find_belts


class CornerChoice(enum.Enum):
    TOP_LEFT = "tl"
    TOP_RIGHT = "tr"
    BOTTOM_RIGHT = "br"
    BOTTOM_LEFT = "bl"


# ccw quarter turns bringing each corner to the top-left
_TURNS = {
    CornerChoice.TOP_LEFT: 0,
    CornerChoice.TOP_RIGHT: 1,
    CornerChoice.BOTTOM_RIGHT: 2,
    CornerChoice.BOTTOM_LEFT: 3,
}

# 120-degree corner rotation used by reduce_tiling: F -> U, U -> R, R -> F
_CORNER_ROT = ((0, 1, 0), (0, 0, 1), (1, 0, 0))


def _require_knot(k: ClassicalMosaic) -> None:
    if not validate_classical(k).ok:
        raise InvalidInput("classical mosaic is not suitably connected")
    if len(components(embed_unchecked(k, FaceId.F))) != 1:
        raise InvalidInput("classical mosaic is not a knot mosaic")


def embed_unchecked(k: ClassicalMosaic, face: FaceId) -> SphericalMosaic:
    return SphericalMosaic.from_faces(k.n, {face: k.grid})


def embed(k: ClassicalMosaic, face: FaceId = FaceId.F) -> SphericalMosaic:
    """Copy a classical knot mosaic onto one face of a blank sphere."""
    _require_knot(k)
    m = embed_unchecked(k, face)
    if not validate(m).ok:
        raise ConnectionBroken("embedding broke connectivity")
    return m


def wrap_shrink_one(k: ClassicalMosaic, corner: CornerChoice = CornerChoice.TOP_LEFT) -> SphericalMosaic:
    """Shrink an n-mosaic to a spherical (n-1)-mosaic by deleting one
    corner tile and folding the two clipped strips over the cube edges.

    The sub-mosaic opposite the corner lands on F; the clipped top strip
    lands on U's bottom row and the left strip on L's rightmost column,
    whose loose ends meet across the U/L edge exactly where the deleted
    corner's connection points used to meet.
    """
    _require_knot(k)
    if k.n < 2:
        raise InvalidInput("need n >= 2 to shrink")
    k = k.rotated(_TURNS[corner])
    n, big = k.n - 1, k.grid
    if big[0][0] not in (Tile.T0, Tile.T1, Tile.T2, Tile.T3, Tile.T4):
        raise InvalidInput("corner tile must be empty or a single arc")
    f_grid = tuple(tuple(big[r + 1][c + 1] for c in range(n)) for r in range(n))
    u_grid = [[Tile.T0] * n for _ in range(n)]
    l_grid = [[Tile.T0] * n for _ in range(n)]
    for c in range(n):
        u_grid[n - 1][c] = big[0][c + 1]
    for r in range(n):
        l_grid[r][n - 1] = big[r + 1][0]
    m = SphericalMosaic.from_faces(
        n,
        {
            FaceId.F: f_grid,
            FaceId.U: tuple(map(tuple, u_grid)),
            FaceId.L: tuple(map(tuple, l_grid)),
        },
    )
    if not validate(m).ok:
        raise ConnectionBroken("shrink-one construction failed validation")
    return m


def wrap_shrink_two(k: ClassicalMosaic) -> SphericalMosaic:
    """Shrink an n-mosaic to a spherical (n-2)-mosaic: the interior block
    goes on F and the boundary ring folds onto U, D, L, R with all four
    corner tiles deleted."""
    _require_knot(k)
    if k.n < 3:
        raise InvalidInput("need n >= 3 to shrink twice")
    big = k.grid
    nb = k.n
    ring = [big[0][c] for c in range(nb)] + [big[nb - 1][c] for c in range(nb)]
    ring += [big[r][0] for r in range(nb)] + [big[r][nb - 1] for r in range(nb)]
    if any(t in (Tile.T7, Tile.T8, Tile.T9, Tile.T10) for t in ring):
        raise BoundaryHasFourConnectionTile("boundary ring must hold only T0..T6")
    n = nb - 2
    f_grid = tuple(tuple(big[r + 1][c + 1] for c in range(n)) for r in range(n))
    u_grid = [[Tile.T0] * n for _ in range(n)]
    d_grid = [[Tile.T0] * n for _ in range(n)]
    l_grid = [[Tile.T0] * n for _ in range(n)]
    r_grid = [[Tile.T0] * n for _ in range(n)]
    for c in range(n):
        u_grid[n - 1][c] = big[0][c + 1]
        d_grid[0][c] = big[nb - 1][c + 1]
    for r in range(n):
        l_grid[r][n - 1] = big[r + 1][0]
        r_grid[r][0] = big[r + 1][nb - 1]
    m = SphericalMosaic.from_faces(
        n,
        {
            FaceId.F: f_grid,
            FaceId.U: tuple(map(tuple, u_grid)),
            FaceId.D: tuple(map(tuple, d_grid)),
            FaceId.L: tuple(map(tuple, l_grid)),
            FaceId.R: tuple(map(tuple, r_grid)),
        },
    )
    if not validate(m).ok:
        raise ConnectionBroken("shrink-two construction failed validation")
    return m


def reduce_tiling(k: ClassicalMosaic, pos: tuple[int, int]) -> SphericalMosaic:
    """Delete an eligible corner-arc tile and wrap the three remaining
    regions around a cube corner, saving one non-empty tile.

    Eligibility: the tile at pos is T3 and every cell strictly below its
    row or strictly left of its column is empty.  The block diagonally
    up-right of it lands on the top face, the row strip to its right on
    the front-right face, and the column strip above it on the front-left
    face; the T3's two freed connection points meet across the cube edge
    between the two front faces.
    """
    _require_knot(k)
    r0, c0 = pos
    nb = k.n
    if not (0 <= r0 < nb and 0 <= c0 < nb) or k.grid[r0][c0] != Tile.T3:
        raise IneligiblePosition("tile at pos must be T3")
    for r in range(r0 + 1, nb):
        if any(t != Tile.T0 for t in k.grid[r]):
            raise IneligiblePosition("rows below pos must be empty")
    for r in range(nb):
        if any(k.grid[r][c] != Tile.T0 for c in range(c0)):
            raise IneligiblePosition("columns left of pos must be empty")
    if nb < 2:
        raise IneligiblePosition("need n >= 2")
    n = nb - 1
    if r0 > n or nb - 1 - c0 > n:
        raise IneligiblePosition("regions do not fit on the smaller faces")
    f_grid = [[Tile.T0] * n for _ in range(n)]
    u_grid = [[Tile.T0] * n for _ in range(n)]
    r_grid = [[Tile.T0] * n for _ in range(n)]
    # 180-degree wrap about the deleted tile's upper-right lattice point
    for r in range(r0):
        for c in range(c0 + 1, nb):
            f_grid[r0 - 1 - r][c0 + n - c] = rotate_tile(k.grid[r][c], 2)
    for c in range(c0 + 1, nb):
        u_grid[n - 1][c0 + n - c] = rotate_tile(k.grid[r0][c], 2)
    for r in range(r0):
        r_grid[r0 - 1 - r][0] = rotate_tile(k.grid[r][c0], 2)
    m = SphericalMosaic.from_faces(
        n,
        {
            FaceId.F: tuple(map(tuple, f_grid)),
            FaceId.U: tuple(map(tuple, u_grid)),
            FaceId.R: tuple(map(tuple, r_grid)),
        },
    )
    # land the block on U and the strips on R and F, as in the proof
    m = rotate_mosaic(m, _CORNER_ROT)
    if not validate(m).ok:
        raise ConnectionBroken("tiling reduction failed validation")
    return m


def _alternating_crossings(n: int) -> SphericalMosaic:
    """All-crossing mosaic whose every belt alternates over/under.

    Per-belt phase parities are solved with a parity union-find over the
    constraint that at each cell exactly one of its two belts is over.
    """
    base = SphericalMosaic.from_flat(n, [int(Tile.T9)] * (6 * n * n))
    belts = find_belts(base)
    if len(belts) != 3 * n:
        raise InternalError(f"expected {3*n} belts, found {len(belts)}")
    _H = frozenset({Side.LEFT, Side.RIGHT})
    incidence: dict[CellAddr, list[tuple[int, int, frozenset]]] = {}
    for b_idx, belt in enumerate(belts):
        for pos, (cell, axis) in enumerate(zip(belt.cells, belt.axes)):
            incidence.setdefault(cell, []).append((b_idx, pos, axis))

    # parity union-find: phase[b] xor phase[root] tracked per belt
    parent = list(range(len(belts)))
    offset = [0] * len(belts)

    def find(b):
        if parent[b] == b:
            return b, 0
        root, off = find(parent[b])
        parent[b] = root
        offset[b] ^= off
        return root, offset[b]

    for cell, incs in incidence.items():
        if len(incs) != 2:
            raise InternalError("each cell must lie on exactly two belts")
        (b1, p1, _), (b2, p2, _) = incs
        want = (p1 + p2 + 1) % 2  # phase1 xor phase2
        r1, o1 = find(b1)
        r2, o2 = find(b2)
        if r1 == r2:
            if o1 ^ o2 != want:
                raise InternalError("alternation constraints are inconsistent")
        else:
            parent[r1] = r2
            offset[r1] = o1 ^ o2 ^ want
    phases = [find(b)[1] for b in range(len(belts))]

    flat = [0] * (6 * n * n)
    from .sphere import cell_index

    for cell, incs in incidence.items():
        tiles = set()
        for b_idx, pos, axis in incs:
            over_here = (pos + phases[b_idx]) % 2 == 0
            if axis == _H:
                tiles.add(Tile.T9 if over_here else Tile.T10)
            else:
                tiles.add(Tile.T10 if over_here else Tile.T9)
        if len(tiles) != 1:
            raise InternalError("belt assignments disagree at a cell")
        flat[cell_index(n, cell)] = int(tiles.pop())
    return SphericalMosaic.from_flat(n, flat)


def max_crossing_construction(
    n: int, alternating: bool = False, seed: int = 0
) -> SphericalMosaic:
    """Spherical knot n-mosaic with the maximal 6n^2 - 3n + 1 crossing
    tiles: start from the all-crossing link and merge its 3n belt
    components one replacement at a time.

    Each replacement picks (deterministically from the seed-permuted cell
    order) a crossing whose two strands lie on distinct components and
    swaps it for the double-arc tile that merges them.
    """
    if n < 1:
        raise InvalidInput("n must be positive")
    m = _alternating_crossings(n) if alternating else SphericalMosaic.from_flat(
        n, [int(Tile.T9)] * (6 * n * n)
    )
    order = list(m.cells())
    random.Random(seed).shuffle(order)

    comps = components(m)
    if len(comps) != 3 * n:
        raise InternalError(f"expected {3*n} initial components")
    replacements = 0
    while len(comps) > 1:
        comp_of: dict[tuple[CellAddr, frozenset], int] = {}
        for idx, comp in enumerate(comps):
            for step in comp.steps:
                comp_of[(step.cell, frozenset({step.entry, step.exit}))] = idx
        chosen = None
        for cell in order:
            if m.tile(cell) not in (Tile.T9, Tile.T10):
                continue
            h = comp_of[(cell, frozenset({Side.LEFT, Side.RIGHT}))]
            v = comp_of[(cell, frozenset({Side.TOP, Side.BOTTOM}))]
            if h != v:
                chosen = cell
                break
        if chosen is None:
            raise InternalError("no eligible crossing joins two components")
        before = len(comps)
        for replacement in (Tile.T7, Tile.T8):
            candidate = m.with_tile(chosen, replacement)
            new_comps = components(candidate)
            if len(new_comps) == before - 1:
                m, comps = candidate, new_comps
                break
        else:
            raise InternalError("neither double-arc tile merged the components")
        replacements += 1
    if replacements != 3 * n - 1:
        raise InternalError(f"{replacements} replacements, expected {3*n - 1}")
    return m
