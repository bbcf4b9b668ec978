"""Broadcast domination on the truncated square tiling.

Exact minimum broadcast sizes for finite octagon grids, closed-form lower
and upper bounds with machine-verified witness constructions, and
verification plus search of lattice-periodic broadcasts of the infinite
tiling.
"""

from .bounds import (
    BoundsReport,
    construct_22,
    construct_33,
    construct_rows_21,
    lower_ball,
    lower_degree,
    report,
    upper_22,
    upper_2x2,
    upper_33,
    upper_rows_21,
    upper_tiling_21,
)
from .grid import (
    UNREACHED,
    FiniteGraph,
    bfs_distances,
    build_grid,
    build_torus,
    eccentricity,
    graph_from_json,
    graph_to_json,
    radius,
)
from .intlattice import PeriodLattice, hnf_lattices
from .lattice import (
    BOTTOM,
    LEFT,
    RIGHT,
    TOP,
    Vertex,
    ball,
    ball_size,
    coordination,
    distance,
    neighbors,
)
from .patterns import (
    InjectivityError,
    PatternCheck,
    PeriodicPattern,
    SearchOutcome,
    catalog,
    catalog_pattern,
    density,
    density_search,
    pattern_from_json,
    torus_gamma,
    verify_infinite,
)
from .reception import (
    BroadcastCheck,
    BroadcastSet,
    broadcast_from_json,
    broadcast_to_json,
    is_broadcast,
    reception_map,
)
from .solver import (
    SolveResult,
    SolveTimeout,
    conjecture61_report,
    exists_broadcast,
    gamma,
    greedy_broadcast,
    single_tower_threshold,
)

__version__ = "0.1.0"
