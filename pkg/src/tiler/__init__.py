"""Tileability of simply connected lattice regions, decided from the boundary alone.

The package decides whether a region of the square lattice can be tiled by
dominoes (and a triangular-grid variant tiled by lozenges) in time that is
near-linear in the *perimeter* of the region, not its area.  After a
perimeter-sized preprocessing pass, the tiling itself can be read off one
cell at a time through an incremental oracle.

Reference implementations that walk the full area (height-field relaxation,
bipartite matching, exhaustive enumeration) live in :mod:`tiler.reference`
and back every fast path in the test suite.
"""

from tiler.lozenge import decide_lozenge, parse_lozenge
from tiler.oracle import DominoPlacement, TilingOracle
from tiler.region import parse_boundary
from tiler.solver import TileabilityVerdict, decide_tileable

__all__ = [
    "DominoPlacement",
    "TileabilityVerdict",
    "TilingOracle",
    "decide_lozenge",
    "decide_tileable",
    "parse_boundary",
    "parse_lozenge",
]
__version__ = "0.1.0"
