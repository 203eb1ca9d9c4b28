"""Exact graph-polynomial computation, prime-field point counting, and
executable verification of the induced deletion-contraction class identities.
"""

from .counting import (
    BudgetExceededError,
    ConsistencyError,
    CountRecord,
    DEFAULT_BUDGET,
    NoProjectiveHypersurfaceError,
    NotRegularEdgeError,
    count_brute,
    count_fibered,
    count_graph,
    count_projective,
    count_Z,
    sweep_zero_patterns,
)
from .families import FamilySpec, catalog_by_name, generate_family, standard_catalog
from .graphs import (
    Edge,
    EdgeKind,
    GraphError,
    GraphParseError,
    LoopContractionError,
    Multigraph,
    UnknownLabelError,
    betti_1,
    classify_edge,
    component_count,
    contract_edge,
    delete_edge,
    disjoint_union,
    edge_census,
    graph_id,
    has_non_loop_edge,
    is_forest,
    relabel_dense,
    spanning_forests,
)
from .motive import (
    ClassPoly,
    CongruenceVerdict,
    InsufficientPrimesError,
    NotPolynomiallyConsistent,
    check_modL_congruence,
    check_projective_congruence,
    dc_identity_check,
    dc_identity_matrix,
    hodge_form,
    interpolate_class,
    predicted_sb_constant,
)
from .primes import NotPrimeError, first_primes, is_prime
from .symanzik import (
    MultilinearPoly,
    NonMultilinearError,
    evaluate,
    evaluate_int,
    psi_by_deletion_contraction,
    psi_by_matrix_tree,
    psi_by_trees,
    split_last_var,
)
from .cli import VerifyConfig, run_verify

__version__ = "0.1.0"
