from spheremosaic.tiles import (
    FLAT,
    OVER,
    Side,
    Tile,
    UNDER,
    connection_points,
    mirror_tile,
    rotate_side,
    rotate_tile,
    strand_exit,
    strand_pairs,
)


def test_connection_point_counts():
    assert connection_points(Tile.T0) == frozenset()
    for t in (Tile.T1, Tile.T2, Tile.T3, Tile.T4, Tile.T5, Tile.T6):
        assert len(connection_points(t)) == 2
    for t in (Tile.T7, Tile.T8, Tile.T9, Tile.T10):
        assert len(connection_points(t)) == 4


def test_canonical_side_sets():
    assert connection_points(Tile.T1) == {Side.LEFT, Side.BOTTOM}
    assert connection_points(Tile.T2) == {Side.BOTTOM, Side.RIGHT}
    assert connection_points(Tile.T3) == {Side.RIGHT, Side.TOP}
    assert connection_points(Tile.T4) == {Side.TOP, Side.LEFT}
    assert connection_points(Tile.T5) == {Side.LEFT, Side.RIGHT}
    assert connection_points(Tile.T6) == {Side.TOP, Side.BOTTOM}
    assert connection_points(Tile.T9) == set(Side)


def test_strand_pairs_partition_connection_points():
    for t in Tile:
        sides = []
        for pair, _role in strand_pairs(t):
            sides.extend(pair)
        assert sorted(sides) == sorted(connection_points(t))


def test_crossing_roles():
    pairs9 = dict(strand_pairs(Tile.T9))
    assert pairs9[frozenset({Side.LEFT, Side.RIGHT})] == OVER
    assert pairs9[frozenset({Side.TOP, Side.BOTTOM})] == UNDER
    pairs10 = dict(strand_pairs(Tile.T10))
    assert pairs10[frozenset({Side.TOP, Side.BOTTOM})] == OVER
    for t in (Tile.T1, Tile.T5, Tile.T7, Tile.T8):
        assert all(role == FLAT for _, role in strand_pairs(t))


def test_strand_exit():
    assert strand_exit(Tile.T2, Side.BOTTOM) == (Side.RIGHT, FLAT)
    assert strand_exit(Tile.T9, Side.LEFT) == (Side.RIGHT, OVER)
    assert strand_exit(Tile.T9, Side.TOP) == (Side.BOTTOM, UNDER)


def test_rotate_tile_cycles():
    assert rotate_tile(Tile.T0, 1) == Tile.T0
    assert rotate_tile(Tile.T1, 1) == Tile.T2
    assert rotate_tile(Tile.T2, 1) == Tile.T3
    assert rotate_tile(Tile.T3, 1) == Tile.T4
    assert rotate_tile(Tile.T4, 1) == Tile.T1
    assert rotate_tile(Tile.T5, 1) == Tile.T6
    assert rotate_tile(Tile.T7, 1) == Tile.T8
    assert rotate_tile(Tile.T9, 1) == Tile.T10
    for t in Tile:
        assert rotate_tile(t, 4) == t


def test_rotation_matches_side_rotation():
    # the rotated tile's connection points are the rotated connection points
    for t in Tile:
        for q in range(4):
            expected = {rotate_side(s, q) for s in connection_points(t)}
            assert connection_points(rotate_tile(t, q)) == expected


def test_rotation_preserves_pair_structure():
    for t in Tile:
        rotated = rotate_tile(t, 1)
        expected = {
            (frozenset(rotate_side(s, 1) for s in pair), role)
            for pair, role in strand_pairs(t)
        }
        assert set(strand_pairs(rotated)) == expected


def test_mirror_tile():
    assert mirror_tile(Tile.T9) == Tile.T10
    assert mirror_tile(Tile.T10) == Tile.T9
    assert mirror_tile(Tile.T7) == Tile.T7
    for t in Tile:
        assert mirror_tile(mirror_tile(t)) == t
        # mirror commutes with rotation
        assert mirror_tile(rotate_tile(t, 1)) == rotate_tile(mirror_tile(t), 1)


def test_side_rotation_has_order_four():
    for s in Side:
        assert rotate_side(s, 4) == s
        assert len({rotate_side(s, q) for q in range(4)}) == 4
