"""Exact Ricci curvature of directed graphs.

Curvature compares lazy random-walk measures through the 1-Wasserstein
distance under the (asymmetric) hop metric. Everything is computed in exact
arithmetic; the alpha -> 1 limit uses first-order infinitesimals.
"""

from .curvature import (
    ConditionVerdict,
    CurvatureReport,
    alpha_ricci,
    check_condition,
    curvature_report,
    ricci,
    ricci_ladder,
    ricci_upper_bound,
)
from .families import (
    TreeSpec,
    binary_tree,
    caterpillar_tree,
    circulant,
    cycle_product,
    directed_cycle,
    oriented_complete,
    rooted_in_tree,
    star_tree,
)
from .graph import (
    DirectedGraph,
    build_graph,
    degree_triple,
    gamma_decomposition,
    is_strongly_connected,
    shortest_distances,
)
from .measure import SparseMeasure, build_walk_measure
from .scalar import Infinitesimal
from .transport import TransportResult, lipschitz_objective, oracle_wasserstein, wasserstein

__version__ = "0.1.0"
