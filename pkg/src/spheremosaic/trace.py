"""Strand tracing over a spherical mosaic: components, stats, belts."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotSuitablyConnected
from .sphere import CellAddr, FACE_ORDER, SphericalMosaic, neighbor, validate
from .tiles import CROSSING_TILES, Side, Tile, connection_points, strand_exit


@dataclass(frozen=True)
class StrandStep:
    """One passage of a strand through a tile."""

    cell: CellAddr
    entry: Side
    exit: Side
    role: str  # over / under / flat


@dataclass(frozen=True)
class Component:
    """A closed strand: consecutive steps are neighbor-linked."""

    steps: tuple[StrandStep, ...]

    def __len__(self) -> int:
        return len(self.steps)


@dataclass(frozen=True)
class Belt:
    """A closed straight band of line/crossing tiles girdling the cube."""

    cells: tuple[CellAddr, ...]
    axes: tuple[frozenset[Side], ...]  # straight-through side pair per cell


@dataclass(frozen=True)
class MosaicStats:
    non_empty_tiles: int
    non_empty_faces: int
    crossing_tiles: int
    components: int


def _require_valid(m: SphericalMosaic) -> None:
    report = validate(m)
    if not report.ok:
        raise NotSuitablyConnected(
            f"{len(report.mismatches)} edge-midpoint mismatches"
        )


def components(m: SphericalMosaic) -> list[Component]:
    """Partition all strand passages into closed components.

    Traversal starts at the lexicographically least unvisited
    (face, row, col, side) connection point, so the output order is
    deterministic.  Crossing tiles contribute two distinct passages.
    """
    _require_valid(m)
    n = m.n
    visited: set[tuple[CellAddr, Side]] = set()
    out: list[Component] = []
    for cell in m.cells():
        for side in Side:
            if (cell, side) in visited:
                continue
            if side not in connection_points(m.tile(cell)):
                continue
            steps = []
            cur_cell, entry = cell, side
            while True:
                exit_side, role = strand_exit(m.tile(cur_cell), entry)
                visited.add((cur_cell, entry))
                visited.add((cur_cell, exit_side))
                steps.append(StrandStep(cur_cell, entry, exit_side, role))
                cur_cell, entry = neighbor(n, cur_cell, exit_side)
                if cur_cell == cell and entry == side:
                    break
            out.append(Component(tuple(steps)))
    return out


def is_knot_mosaic(m: SphericalMosaic) -> bool:
    """True iff suitably connected with exactly one closed component."""
    if not validate(m).ok:
        return False
    return len(components(m)) == 1


def stats(m: SphericalMosaic) -> MosaicStats:
    _require_valid(m)
    non_empty = 0
    crossings = 0
    faces = 0
    for grid in m.grids:
        face_tiles = [t for row in grid for t in row if t != Tile.T0]
        non_empty += len(face_tiles)
        crossings += sum(1 for t in face_tiles if t in CROSSING_TILES)
        if face_tiles:
            faces += 1
    return MosaicStats(non_empty, faces, crossings, len(components(m)))


_BELT_TILES = frozenset({Tile.T5, Tile.T6, Tile.T9, Tile.T10})
_H = frozenset({Side.LEFT, Side.RIGHT})
_V = frozenset({Side.TOP, Side.BOTTOM})


def _axes_of(tile: Tile) -> tuple[frozenset[Side], ...]:
    if tile in (Tile.T9, Tile.T10):
        return (_H, _V)
    if tile == Tile.T5:
        return (_H,)
    if tile == Tile.T6:
        return (_V,)
    return ()


def _surface_components_without(m: SphericalMosaic, removed: frozenset[CellAddr]) -> int:
    """Connected components of the cell-adjacency graph minus ``removed``."""
    n = m.n
    remaining = [c for c in m.cells() if c not in removed]
    remaining_set = set(remaining)
    seen: set[CellAddr] = set()
    count = 0
    for start in remaining:
        if start in seen:
            continue
        count += 1
        stack = [start]
        seen.add(start)
        while stack:
            cell = stack.pop()
            for side in Side:
                other, _ = neighbor(n, cell, side)
                if other in remaining_set and other not in seen:
                    seen.add(other)
                    stack.append(other)
    return count


def find_belts(m: SphericalMosaic) -> list[Belt]:
    """All spherical mosaic belts, in deterministic order.

    A candidate is a maximal closed straight path through T5/T6/T9/T10
    tiles (connection points on opposite edges at every step); it is a
    belt when deleting its cells disconnects the surface cell-adjacency
    graph.  At a crossing tile the belt follows the straight-through
    strand of its own axis.
    """
    _require_valid(m)
    n = m.n
    seen: set[tuple[CellAddr, frozenset[Side]]] = set()
    belts = []
    for cell in m.cells():
        for axis in _axes_of(m.tile(cell)):
            if (cell, axis) in seen:
                continue
            cells = []
            axes = []
            start = (cell, axis, max(axis))
            cur, cur_axis, exit_side = start
            closed = True
            while True:
                if (cur, cur_axis) in seen:
                    # joined a path already classified (open scrap)
                    closed = False
                    break
                seen.add((cur, cur_axis))
                cells.append(cur)
                axes.append(cur_axis)
                nxt, entry = neighbor(n, cur, exit_side)
                nxt_axis = frozenset({entry, entry.opposite()})
                if (
                    m.tile(nxt) not in _BELT_TILES
                    or nxt_axis not in _axes_of(m.tile(nxt))
                ):
                    closed = False
                    break
                cur, cur_axis, exit_side = nxt, nxt_axis, entry.opposite()
                if (cur, cur_axis, exit_side) == start:
                    break
            if closed and _surface_components_without(m, frozenset(cells)) >= 2:
                belts.append(Belt(tuple(cells), tuple(axes)))
    return belts
