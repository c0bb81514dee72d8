"""tmlab: an exact verification laboratory for total matching polytopes.

A total matching of a graph picks vertices and edges that are pairwise
non-adjacent; the convex hull of their incidence vectors lives in dimension
n + m.  This package enumerates and optimizes total matchings, generates the
known valid inequality families, re-derives the lifted family by sequential
lifting, converts between vertex and facet descriptions with exact rational
double description, and checks complete linear descriptions at desk scale.
"""

from .graph import (
    Biclique,
    Graph,
    adjacent,
    bipartition,
    enumerate_induced_bicliques,
    format_graph,
    is_tree,
    parse_graph,
    total_graph,
)
from .ineq import (
    LiftStep,
    LinearInequality,
    all_ones_biclique_inequality,
    balanced_biclique_inequalities,
    basic_inequalities,
    edge_lift_counterexample,
    format_inequalities,
    is_valid,
    lifted_biclique_inequalities,
    parse_inequalities,
    sequential_lift,
)
from .polylab import (
    DEFAULT_DIM_CAP,
    CompletenessReport,
    PolytopeRep,
    affine_rank,
    check_complete_description,
    face_dimension,
    hull,
    is_facet,
    matrix_rank,
    polytope_dimension,
    vertices,
)
from .separation import SeparationResult, separate
from .totalmatch import (
    DEFAULT_ELEMENT_CAP,
    CapExceededError,
    alpha,
    enumerate_total_matchings,
    incidence,
    is_total_matching,
    nu,
    nu_T,
    tau,
    tree_max,
)

__version__ = "0.1.0"

__all__ = [
    "Biclique",
    "CapExceededError",
    "CompletenessReport",
    "DEFAULT_DIM_CAP",
    "DEFAULT_ELEMENT_CAP",
    "Graph",
    "LiftStep",
    "LinearInequality",
    "PolytopeRep",
    "SeparationResult",
    "adjacent",
    "affine_rank",
    "all_ones_biclique_inequality",
    "alpha",
    "balanced_biclique_inequalities",
    "basic_inequalities",
    "bipartition",
    "check_complete_description",
    "edge_lift_counterexample",
    "enumerate_induced_bicliques",
    "enumerate_total_matchings",
    "face_dimension",
    "format_graph",
    "format_inequalities",
    "hull",
    "incidence",
    "is_facet",
    "is_total_matching",
    "is_tree",
    "is_valid",
    "lifted_biclique_inequalities",
    "matrix_rank",
    "nu",
    "nu_T",
    "parse_graph",
    "parse_inequalities",
    "polytope_dimension",
    "separate",
    "sequential_lift",
    "tau",
    "total_graph",
    "tree_max",
    "vertices",
]
