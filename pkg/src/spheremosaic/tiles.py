"""The 11 mosaic tiles: connection points, strand pairings, symmetries.

Tiles are drawn on a unit cell viewed in the face's local frame (row 0 at
the top).  Side convention, fixed once for every text format:

    T0  empty
    T1  arc Left-Bottom        T2  arc Bottom-Right
    T3  arc Right-Top          T4  arc Top-Left
    T5  line Left-Right        T6  line Top-Bottom
    T7  double arc (Top-Left)(Bottom-Right)
    T8  double arc (Top-Right)(Bottom-Left)
    T9  crossing, Left-Right strand over, Top-Bottom under
    T10 crossing, Top-Bottom strand over, Left-Right under

T7/T8 and T9/T10 labels are arbitrary up to relabeling; this assignment is
frozen so serialized mosaics stay stable.
"""

from __future__ import annotations

import enum
from typing import Iterable


class Side(enum.IntEnum):
    """Edge of a tile (or face), in the face's local frame."""

    TOP = 0
    RIGHT = 1
    BOTTOM = 2
    LEFT = 3

    def opposite(self) -> "Side":
        return Side((self + 2) % 4)


def rotate_side(side: Side, quarter_turns: int) -> Side:
    """Image of a side under rotating the cell ccw by 90 deg per turn.

    One ccw turn carries Left to Bottom, Bottom to Right, Right to Top and
    Top to Left (cw is the inverse).
    """
    return Side((side - quarter_turns) % 4)


class Tile(enum.IntEnum):
    T0 = 0
    T1 = 1
    T2 = 2
    T3 = 3
    T4 = 4
    T5 = 5
    T6 = 6
    T7 = 7
    T8 = 8
    T9 = 9
    T10 = 10


FLAT = "flat"
OVER = "over"
UNDER = "under"

# (pair of sides, crossing role) per tile; pairs partition the tile's
# connection points.
_PAIRS: dict[Tile, tuple[tuple[frozenset[Side], str], ...]] = {
    Tile.T0: (),
    Tile.T1: ((frozenset({Side.LEFT, Side.BOTTOM}), FLAT),),
    Tile.T2: ((frozenset({Side.BOTTOM, Side.RIGHT}), FLAT),),
    Tile.T3: ((frozenset({Side.RIGHT, Side.TOP}), FLAT),),
    Tile.T4: ((frozenset({Side.TOP, Side.LEFT}), FLAT),),
    Tile.T5: ((frozenset({Side.LEFT, Side.RIGHT}), FLAT),),
    Tile.T6: ((frozenset({Side.TOP, Side.BOTTOM}), FLAT),),
    Tile.T7: (
        (frozenset({Side.TOP, Side.LEFT}), FLAT),
        (frozenset({Side.BOTTOM, Side.RIGHT}), FLAT),
    ),
    Tile.T8: (
        (frozenset({Side.TOP, Side.RIGHT}), FLAT),
        (frozenset({Side.BOTTOM, Side.LEFT}), FLAT),
    ),
    Tile.T9: (
        (frozenset({Side.LEFT, Side.RIGHT}), OVER),
        (frozenset({Side.TOP, Side.BOTTOM}), UNDER),
    ),
    Tile.T10: (
        (frozenset({Side.TOP, Side.BOTTOM}), OVER),
        (frozenset({Side.LEFT, Side.RIGHT}), UNDER),
    ),
}

CROSSING_TILES = frozenset({Tile.T9, Tile.T10})

# tile -> tile under one ccw quarter turn
_ROTATE_CCW = (0, 2, 3, 4, 1, 6, 5, 8, 7, 10, 9)


def strand_pairs(tile: Tile) -> tuple[tuple[frozenset[Side], str], ...]:
    """Strand pairing of a tile: side pairs tagged over/under/flat."""
    return _PAIRS[Tile(tile)]


def connection_points(tile: Tile) -> frozenset[Side]:
    """Sides of the tile carrying a connection point."""
    return _CONN[Tile(tile)]


_CONN = {t: frozenset().union(*[p for p, _ in ps]) if ps else frozenset() for t, ps in _PAIRS.items()}

# (tile, side) -> (exit side, role); one entry per connection point
_PARTNER: dict[tuple[Tile, Side], tuple[Side, str]] = {}
for _t, _ps in _PAIRS.items():
    for _pair, _role in _ps:
        _a, _b = sorted(_pair)
        _PARTNER[(_t, _a)] = (_b, _role)
        _PARTNER[(_t, _b)] = (_a, _role)


def strand_exit(tile: Tile, entry: Side) -> tuple[Side, str]:
    """Exit side and crossing role of the strand entering ``tile`` at ``entry``.

    Raises KeyError when the side is not a connection point of the tile.
    """
    return _PARTNER[(Tile(tile), Side(entry))]


def rotate_tile(tile: Tile, quarter_turns: int) -> Tile:
    """Tile whose drawn curve is the input's rotated ccw by 90 deg per turn."""
    t = int(tile)
    for _ in range(quarter_turns % 4):
        t = _ROTATE_CCW[t]
    return Tile(t)


def mirror_tile(tile: Tile) -> Tile:
    """Swap over/under at crossings; all non-crossing tiles are fixed."""
    if tile == Tile.T9:
        return Tile.T10
    if tile == Tile.T10:
        return Tile.T9
    return Tile(tile)


def has_connection(tile: Tile, side: Side) -> bool:
    return side in _CONN[Tile(tile)]


def tiles_with_connections(sides: Iterable[Side]) -> tuple[Tile, ...]:
    """All tiles whose connection-point set equals the given side set."""
    target = frozenset(sides)
    return tuple(t for t in Tile if _CONN[t] == target)
