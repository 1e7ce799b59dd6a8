import pytest

from spheremosaic.errors import NotSuitablyConnected
from spheremosaic.sphere import (
    CellAddr,
    FaceId,
    SphericalMosaic,
    cube_rotations,
    rotate_mosaic,
)
from spheremosaic.tiles import Tile, strand_pairs
from spheremosaic.trace import Belt, components, find_belts, is_knot_mosaic, stats


def test_empty_mosaic_has_no_components():
    for n in (1, 2, 4):
        assert components(SphericalMosaic.empty(n)) == []
        assert not is_knot_mosaic(SphericalMosaic.empty(n))


@pytest.mark.parametrize("n", [1, 2, 3])
def test_all_crossing_components(all_crossings, n):
    comps = components(all_crossings(n))
    assert len(comps) == 3 * n
    assert all(len(c) == 4 * n for c in comps)


def test_all_crossing_is_link_not_knot(all_crossings):
    assert not is_knot_mosaic(all_crossings(1))


def test_corner_unknot_is_knot(corner_unknot):
    assert is_knot_mosaic(corner_unknot)
    st = stats(corner_unknot)
    assert st.non_empty_tiles == 3
    assert st.non_empty_faces == 3
    assert st.crossing_tiles == 0
    assert st.components == 1


def test_stats_empty():
    st = stats(SphericalMosaic.empty(2))
    assert (st.non_empty_tiles, st.non_empty_faces, st.crossing_tiles, st.components) == (
        0,
        0,
        0,
        0,
    )


def test_strand_passage_count_invariant():
    from spheremosaic.search import sample_mosaics

    for m in sample_mosaics(2, 15, seed=9):
        total_steps = sum(len(c) for c in components(m))
        passages = sum(len(strand_pairs(m.tile(cell))) for cell in m.cells())
        assert total_steps == passages


def test_component_multiset_rotation_invariant():
    from spheremosaic.search import sample_mosaics

    for m in sample_mosaics(1, 20, seed=3):
        base = sorted(len(c) for c in components(m))
        for g in cube_rotations():
            assert sorted(len(c) for c in components(rotate_mosaic(m, g))) == base


def test_components_requires_validity():
    broken = SphericalMosaic.empty(1).with_tile(CellAddr(FaceId.F, 0, 0), Tile.T5)
    with pytest.raises(NotSuitablyConnected):
        components(broken)
    with pytest.raises(NotSuitablyConnected):
        stats(broken)
    assert not is_knot_mosaic(broken)


@pytest.mark.parametrize("n,count", [(1, 3), (2, 6), (3, 9)])
def test_all_crossing_belts(all_crossings, n, count):
    belts = find_belts(all_crossings(n))
    assert len(belts) == count
    assert all(len(b.cells) == 4 * n for b in belts)
    for b in belts:
        assert all(
            all_crossings(n).tile(c) in (Tile.T5, Tile.T6, Tile.T9, Tile.T10)
            for c in b.cells
        )


def test_all_crossing_components_are_belts(all_crossings):
    # in an all-crossing mosaic every component runs along a belt
    for n in (1, 2, 3, 4):
        m = all_crossings(n)
        comps = components(m)
        belts = find_belts(m)
        assert len(comps) == len(belts) == 3 * n
        belt_cellsets = {frozenset(zip(b.cells, b.axes)) for b in belts}
        comp_cellsets = {
            frozenset((s.cell, frozenset({s.entry, s.exit})) for s in c.steps)
            for c in comps
        }
        assert belt_cellsets == comp_cellsets


def test_arc_tiles_are_not_belts(corner_unknot):
    assert find_belts(corner_unknot) == []


def test_open_straight_paths_are_not_belts():
    # a straight line segment capped by arcs closes into a loop but its
    # line tiles do not form a closed straight band
    m = (
        SphericalMosaic.empty(2)
        .with_tile(CellAddr(FaceId.F, 0, 0), Tile.T2)
        .with_tile(CellAddr(FaceId.F, 0, 1), Tile.T1)
        .with_tile(CellAddr(FaceId.F, 1, 0), Tile.T3)
        .with_tile(CellAddr(FaceId.F, 1, 1), Tile.T4)
    )
    assert is_knot_mosaic(m)
    assert find_belts(m) == []


def test_belt_through_line_tiles():
    # an equatorial band of T5 lines is a single belt
    n = 2
    m = SphericalMosaic.empty(n)
    for face in (FaceId.L, FaceId.F, FaceId.R, FaceId.B):
        for c in range(n):
            m = m.with_tile(CellAddr(face, 0, c), Tile.T5)
    assert is_knot_mosaic(m)
    belts = find_belts(m)
    assert len(belts) == 1
    assert isinstance(belts[0], Belt)
    assert len(belts[0].cells) == 4 * n
