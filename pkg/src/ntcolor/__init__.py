"""Dynamic list coloring of near-triangulations.

Reduction engine, exact oracles, graph generators and a CLI for
experimenting with 3-dynamic colorings from 6-color lists.
"""

from .coloring import (
    Coloring,
    ListAssignment,
    is_proper,
    is_r_dynamic,
    respects_lists,
    uniform_lists,
    valid_extensions,
)
from .embedding import (
    BoundaryStats,
    Face,
    PlanarEmbedding,
    add_edge_in_face,
    boundary_stats,
    from_document,
    is_near_triangulation,
    neighbors_ccw,
    remove_vertex,
    to_document,
    trace_faces,
)
from .generators import GeneratorSpec, fan, random_near_triangulation, stacked, wheel
from .oracle import SearchBudget, chi_r_dynamic, rainbow_greedy, solve_list_r_dynamic
from .reducer import (
    ReducibleConfig,
    ReductionCase,
    ReductionStep,
    ReductionTrace,
    apply_reduction,
    color_near_triangulation,
    extend_coloring,
    find_reducible,
)

__version__ = "0.1.0"
