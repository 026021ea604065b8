"""Exact spanning-tree counting and effective resistance on weighted multigraphs."""

from .formulas import (
    FormulaDomainError,
    cayley,
    gmnp_resistances,
    kf_gmnp,
    kf_shi_chen,
    moon_forest,
    ratio_matching,
    ratio_tree_s,
    ratio_tree_t,
    tau_gmnp,
    tau_kmn,
    tau_matching,
    tau_tree,
)
from .graph import (
    GraphError,
    Multigraph,
    build_gmnp,
    build_kmn_over_matching,
    build_kmn_over_tree,
    complete_bipartite,
    complete_graph,
    contract_edge,
    contract_edge_set,
    identify_vertices,
    simplify_parallel,
)
from .linalg import DimensionError, ExactMatrix, SingularMatrixError, det_exact, schur_det, solve_exact
from .resistance import (
    DisconnectedError,
    FlowAssignment,
    NotSeriesParallelError,
    effective_resistance,
    effective_resistance_tau,
    foster_residual,
    fundamental_cycle_basis,
    kcl_residuals,
    kirchhoff_index,
    kvl_residuals,
    local_rule_residual,
    explicit_flow_matching,
    explicit_flow_tree,
    series_parallel_reduce,
)
from .spanning import tau, tau_brute, tau_containing

__version__ = "0.1.0"
