import pytest

from spheremosaic.sphere import CellAddr, ClassicalMosaic, FaceId, SphericalMosaic
from spheremosaic.tiles import Tile


@pytest.fixture(scope="session")
def corner_unknot():
    """The three-arc unknot closing around the U/F/R cube corner."""
    return (
        SphericalMosaic.empty(1)
        .with_tile(CellAddr(FaceId.F, 0, 0), Tile.T3)
        .with_tile(CellAddr(FaceId.U, 0, 0), Tile.T2)
        .with_tile(CellAddr(FaceId.R, 0, 0), Tile.T4)
    )


@pytest.fixture(scope="session")
def unknot2():
    T = Tile
    return ClassicalMosaic(2, ((T.T2, T.T1), (T.T3, T.T4)))


@pytest.fixture(scope="session")
def all_crossings():
    def make(n, tile=Tile.T9):
        return SphericalMosaic.from_flat(n, [int(tile)] * (6 * n * n))

    return make


@pytest.fixture(scope="session")
def table():
    from spheremosaic.knotid import load_table

    return load_table()
