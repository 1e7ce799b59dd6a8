import pytest

from spheremosaic.errors import InvalidInput
from spheremosaic.sphere import (
    CellAddr,
    DOWN,
    FACE_ORDER,
    FaceId,
    GLUE,
    ORIGIN,
    RIGHT,
    SphericalMosaic,
    cube_rotations,
    euler_characteristic,
    glue_table,
    mirror_mosaic,
    neighbor,
    rotate_mosaic,
    validate,
)
from spheremosaic.tiles import Side, Tile
from spheremosaic.trace import components


def test_glue_table_examples():
    table = glue_table()
    assert table[(FaceId.F, Side.TOP)] == (FaceId.U, Side.BOTTOM, False)
    assert table[(FaceId.U, Side.LEFT)] == (FaceId.L, Side.TOP, False)
    assert table[(FaceId.U, Side.TOP)] == (FaceId.B, Side.TOP, True)


def test_glue_table_is_a_complete_involution():
    table = glue_table()
    assert len(table) == 24
    for key, (f2, s2, rev) in table.items():
        assert table[(f2, s2)] == (key[0], key[1], rev)
        assert (f2, s2) != key


def _lattice_point(n, face, r, c):
    o, ri, dn = ORIGIN[face], RIGHT[face], DOWN[face]
    return tuple(n * o[i] + c * ri[i] + r * dn[i] for i in range(3))


def _side_segment(n, face, side, i):
    if side == Side.TOP:
        a, b = (0, i), (0, i + 1)
    elif side == Side.BOTTOM:
        a, b = (n, i), (n, i + 1)
    elif side == Side.LEFT:
        a, b = (i, 0), (i + 1, 0)
    else:
        a, b = (i, n), (i + 1, n)
    return {_lattice_point(n, face, *a), _lattice_point(n, face, *b)}


@pytest.mark.parametrize("n", [1, 2, 3, 5])
def test_fold_oracle(n):
    # folding the net onto the cube sends glued boundary segments to the
    # same 3D segment, index reversal included
    for (fa, sa), (fb, sb, rev) in GLUE.items():
        for i in range(n):
            j = n - 1 - i if rev else i
            assert _side_segment(n, fa, sa, i) == _side_segment(n, fb, sb, j)


@pytest.mark.parametrize("n", [1, 2])
def test_neighbor_involution_no_fixpoints(n):
    for face in FACE_ORDER:
        for r in range(n):
            for c in range(n):
                for s in Side:
                    cell = CellAddr(face, r, c)
                    other, s2 = neighbor(n, cell, s)
                    assert (other, s2) != (cell, s)
                    assert neighbor(n, other, s2) == (cell, s)


def test_neighbor_examples():
    assert neighbor(2, CellAddr(FaceId.F, 0, 0), Side.RIGHT) == (
        CellAddr(FaceId.F, 0, 1),
        Side.LEFT,
    )
    assert neighbor(2, CellAddr(FaceId.F, 0, 0), Side.TOP) == (
        CellAddr(FaceId.U, 1, 0),
        Side.BOTTOM,
    )
    assert neighbor(2, CellAddr(FaceId.U, 0, 0), Side.TOP) == (
        CellAddr(FaceId.B, 0, 1),
        Side.TOP,
    )


@pytest.mark.parametrize("n", range(1, 9))
def test_euler_characteristic_sphere(n):
    assert euler_characteristic(n) == 2


def test_validate_empty_mosaic():
    for n in (1, 2, 3):
        assert validate(SphericalMosaic.empty(n)).ok


def test_validate_dangling_arcs():
    m = (
        SphericalMosaic.empty(1)
        .with_tile(CellAddr(FaceId.U, 0, 0), Tile.T2)
        .with_tile(CellAddr(FaceId.F, 0, 0), Tile.T3)
    )
    report = validate(m)
    assert not report.ok
    assert len(report.mismatches) == 4


def test_corner_unknot_valid(corner_unknot):
    assert validate(corner_unknot).ok


def test_some_three_tile_placement_closes():
    # place the three quarter-arc tiles T2, T3, T4 on all ordered triples of
    # distinct faces: at least one placement is suitably connected
    import itertools

    hits = []
    for faces in itertools.permutations(FaceId, 3):
        m = SphericalMosaic.empty(1)
        for face, tile in zip(faces, (Tile.T2, Tile.T3, Tile.T4)):
            m = m.with_tile(CellAddr(face, 0, 0), tile)
        if validate(m).ok:
            hits.append(faces)
    assert hits
    for faces in hits:
        m = SphericalMosaic.empty(1)
        for face, tile in zip(faces, (Tile.T2, Tile.T3, Tile.T4)):
            m = m.with_tile(CellAddr(face, 0, 0), tile)
        assert len(components(m)) == 1


def test_rotation_group_size_and_identity(corner_unknot):
    rots = cube_rotations()
    assert len(rots) == 24
    ident = ((1, 0, 0), (0, 1, 0), (0, 0, 1))
    assert rotate_mosaic(corner_unknot, ident) == corner_unknot


def test_rotation_orders_divide_group(corner_unknot):
    for g in cube_rotations():
        m = corner_unknot
        for order in range(1, 5):
            m = rotate_mosaic(m, g)
            if m == corner_unknot:
                break
        else:
            raise AssertionError("rotation order exceeds 4")


def test_rotation_preserves_validity_and_components():
    from spheremosaic.search import sample_mosaics

    for n in (1, 2):
        for m in sample_mosaics(n, 12, seed=5):
            assert validate(m).ok
            base = sorted(len(c) for c in components(m))
            for g in cube_rotations():
                m2 = rotate_mosaic(m, g)
                assert validate(m2).ok
                assert sorted(len(c) for c in components(m2)) == base


def test_mirror_mosaic(corner_unknot, all_crossings):
    assert mirror_mosaic(SphericalMosaic.empty(2)) == SphericalMosaic.empty(2)
    assert mirror_mosaic(mirror_mosaic(corner_unknot)) == corner_unknot
    m = all_crossings(1)
    flipped = mirror_mosaic(m)
    assert all(t == Tile.T10 for grid in flipped.grids for row in grid for t in row)


def test_rejects_bad_sizes():
    with pytest.raises(InvalidInput):
        SphericalMosaic.empty(0)
    with pytest.raises(InvalidInput):
        SphericalMosaic(2, tuple(((Tile.T0,),) for _ in range(6)))
