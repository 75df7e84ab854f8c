"""Biclique covers of grid graphs.

Exact covering numbers, certified optimal constructions, cover
verification and normalization, boundary diagnostics, and an independent
branch-and-bound solver for small grids.
"""

from .construct import (
    checkerboard_cover,
    optimal_cover,
    square_diagonal_cover,
    stitched_cover,
)
from .diagnostics import (
    BoundaryAnalysis,
    Fence,
    Link,
    Staircase,
    StaircaseClassification,
    WasteIdentityReport,
    boundary_analysis,
    classify_staircases,
    staircase_of,
    thick_edges,
    waste_identity_check,
)
from .grid import (
    Biclique,
    Cover,
    FourCycle,
    Grid,
    Star,
    biclique_edges,
    enumerate_maximal_bicliques,
    is_maximal,
    make_grid,
    maximalize,
    outer_cycle,
    transpose_cover,
)
from .jsonio import FormatError, dumps_cover, loads_cover
from .render import render_svg
from .solver import SolveResult, lower_bound_hint, solve_exact
from .theory import (
    Decomposition,
    SpecialEdgeSet,
    bc_value,
    lower_bound,
    representable,
    special_edge_set,
)
from .verify import CoverReport, is_normalized, normalize_cover, verify_cover

__all__ = [
    "Biclique",
    "BoundaryAnalysis",
    "Cover",
    "CoverReport",
    "Decomposition",
    "Fence",
    "FormatError",
    "FourCycle",
    "Grid",
    "Link",
    "SolveResult",
    "SpecialEdgeSet",
    "Staircase",
    "StaircaseClassification",
    "Star",
    "WasteIdentityReport",
    "bc_value",
    "biclique_edges",
    "boundary_analysis",
    "checkerboard_cover",
    "classify_staircases",
    "dumps_cover",
    "enumerate_maximal_bicliques",
    "is_maximal",
    "is_normalized",
    "loads_cover",
    "lower_bound",
    "lower_bound_hint",
    "make_grid",
    "maximalize",
    "normalize_cover",
    "optimal_cover",
    "outer_cycle",
    "render_svg",
    "representable",
    "solve_exact",
    "special_edge_set",
    "square_diagonal_cover",
    "staircase_of",
    "stitched_cover",
    "thick_edges",
    "transpose_cover",
    "verify_cover",
]

__version__ = "0.1.0"
