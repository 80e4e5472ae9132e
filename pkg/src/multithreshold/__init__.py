"""Exact verification, construction and decision of multithreshold graph
representations."""

from .constructions import pk2_c_t, pk2_two_threshold, two_k3_c_t
from .graphs import (
    Complement,
    CompleteMultipartite,
    DisjointUnion,
    FamilySpec,
    Graph,
    build_family,
    complement,
    contains_induced_2k2,
    is_threshold,
    pK2,
    pK3,
)
from .representation import (
    RankAssignment,
    Representation,
    ThresholdVector,
    affine_normalize,
    edge_color,
    induced_graph,
    parity_adjacent,
    verify,
    weight,
)
from .solver import SearchStats, SearchTimeout, decide_fixed, decide_k, theta_number, threshold_set
from .theorems import (
    cozzens_tdim,
    pigeonhole_bound,
    rainbow_check,
    tdim_bruteforce,
    theta_lower_pk3,
    triangle_multisets,
)

__version__ = "0.1.0"
