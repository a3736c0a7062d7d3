"""Extreme rays of tropical (max-plus) polyhedral cones.

The extremality test at the heart of the double description driver reduces
to counting the minimal strongly connected components of a directed
hypergraph, which :func:`min_scc_count` does in almost linear time.
"""

from .cone import (
    AffineSystem,
    IneqSystem,
    dehomogenize,
    homogenize,
    member,
    residual,
    residuation_extreme,
    satisfies,
)
from .ddm import (
    EliminationTrace,
    combine,
    compute_extreme,
    compute_extreme_residuation,
    double_description,
    intersect_halfspace,
    order_heuristic,
    tropical_upper_bound,
    upper_bound,
)
from .extremality import (
    build_tangent_hypergraph,
    extreme_type,
    is_extreme,
    is_extreme_oracle,
    zero_one_tangent_elements,
)
from .hypergraph import Hypergraph, hsize, reachable_set, scc_oracle, sub_digraph
from .maxplus import BOTTOM, UNIT, normalize, proportional
from .minscc import MinSccResult, UnionFind, min_scc_count, min_scc_count_digraph, minimal_classes

__all__ = [
    "AffineSystem",
    "BOTTOM",
    "EliminationTrace",
    "Hypergraph",
    "IneqSystem",
    "MinSccResult",
    "UNIT",
    "UnionFind",
    "build_tangent_hypergraph",
    "combine",
    "compute_extreme",
    "compute_extreme_residuation",
    "dehomogenize",
    "double_description",
    "extreme_type",
    "homogenize",
    "hsize",
    "intersect_halfspace",
    "is_extreme",
    "is_extreme_oracle",
    "member",
    "min_scc_count",
    "min_scc_count_digraph",
    "minimal_classes",
    "normalize",
    "order_heuristic",
    "proportional",
    "reachable_set",
    "residual",
    "residuation_extreme",
    "satisfies",
    "scc_oracle",
    "sub_digraph",
    "tropical_upper_bound",
    "upper_bound",
    "zero_one_tangent_elements",
]

__version__ = "0.1.0"
