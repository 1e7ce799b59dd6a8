"""Knot mosaics on the surface of a cube.

Represents, validates, classifies, transforms and exhaustively searches
mosaics tiled over all six faces of an n x n x n cube (a topological
sphere), including the cube-specific invariants those mosaics carry.
"""

from .sphere import CellAddr, ClassicalMosaic, FaceId, SphericalMosaic
from .tiles import Side, Tile

__all__ = [
    "CellAddr",
    "ClassicalMosaic",
    "FaceId",
    "Side",
    "SphericalMosaic",
    "Tile",
]

__version__ = "0.1.0"
