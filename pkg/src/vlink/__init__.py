"""Exact invariants of virtual and welded links from Gauss diagrams."""

from .alexander import (
    PreconditionError, alexander_polynomial, coloring_divisor, coloring_matrix,
    determinant, elementary_ideal_gcd, eval_at_minus_one, fox_jacobian,
    is_alternating_poly, long_arcs, mod_p_labeling, wirtinger,
)
from .arborescence import (
    Digraph, alexander_via_trees, count_eulerian_circuits, count_rooted_trees,
    enumerate_arborescences, graph_matrix,
)
from .bracket import bracket_state_sum, jones_polynomial
from .gauss import (
    GaussCodeError, GaussDiagram, canonical_code, connected_sum, find_nugatory,
    is_alternating, is_semi_alternating, is_visibly_split, oriented_smoothing,
    parse_gauss_code, reduce, serialize, stats,
)
from .laurent import LaurentPoly
from .linalg import BoundExceeded
from .moves import MoveInstance, MoveKind, apply_move, enumerate_moves, equivalent_bounded
from .numbering import (
    is_cheng_colorable, is_checkerboard_colorable, numbering, source_sink_graph, vlk,
    vlk_table,
)

__version__ = "0.1.0"
