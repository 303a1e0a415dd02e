"""Two-walk operator analytics: wedge counting, triadic/open decomposition,
incidence factorizations, spectral triangle bounds, ego contractions, and
quotient transfer diagnostics, with brute-force oracles and a CLI.
"""

from ._kernels import BACKEND
from .errors import (
    ConvergenceError,
    EdgeListParseError,
    InvariantViolation,
    PartitionAssignmentError,
    ResourceLimitError,
)
from .graph import (
    EdgeListResult,
    Graph,
    VertexSet,
    generate,
    induced_subgraph,
    load_edge_list,
    parse_edge_list,
    save_edge_list,
)
from .oracle import (
    ORACLE_MAX_VERTICES,
    Wedge,
    WedgeList,
    enumerate_triangles,
    enumerate_wedges,
    naive_block_two_walks,
)
from .partition import (
    Partition,
    QuotientDiagnostics,
    TraversingTypes,
    classify_traversing,
    core_dominating_set,
    ego_traversing_partition,
    greedy_dominating_set,
    is_equitable,
    is_wedge_equitable,
    load_partition,
    parse_partition,
    quotient_edge_sum,
    aggregated_two_walk,
    transfer_diagnostics,
    weighted_transfer_diagnostics,
)
from .spectral import (
    BoundReport,
    Spectrum,
    closure_norm_bound,
    symmetric_spectrum,
    triangle_spectral_bound,
)
from .verify import (
    CheckResult,
    check_decomposition,
    check_equitable_hierarchy,
    check_nonedge_sum,
    check_openness,
    check_oracle_blocks,
    check_oracle_counts,
    check_spectral_bounds,
    check_transfer,
    check_triangle_gram,
    check_two_path_gram,
    graph_checks,
    partition_checks,
    random_suite,
)
from .wedge import (
    IncidenceMatrix,
    OperatorParts,
    WedgeSummary,
    classify_vertices,
    directed_wedge_operators,
    edge_triangle_multiplicities,
    is_cluster_graph,
    local_clustering,
    triadic_open_decomposition,
    triangle_incidence,
    two_incidence,
    two_walk_operator,
    wedge_summary,
)

__version__ = "1.0.0"

__all__ = [
    "BACKEND",
    "__version__",
    "ConvergenceError",
    "EdgeListParseError",
    "InvariantViolation",
    "PartitionAssignmentError",
    "ResourceLimitError",
    "EdgeListResult",
    "Graph",
    "VertexSet",
    "generate",
    "induced_subgraph",
    "load_edge_list",
    "parse_edge_list",
    "save_edge_list",
    "ORACLE_MAX_VERTICES",
    "Wedge",
    "WedgeList",
    "enumerate_triangles",
    "enumerate_wedges",
    "naive_block_two_walks",
    "Partition",
    "QuotientDiagnostics",
    "TraversingTypes",
    "classify_traversing",
    "core_dominating_set",
    "ego_traversing_partition",
    "greedy_dominating_set",
    "is_equitable",
    "is_wedge_equitable",
    "load_partition",
    "parse_partition",
    "quotient_edge_sum",
    "aggregated_two_walk",
    "transfer_diagnostics",
    "weighted_transfer_diagnostics",
    "BoundReport",
    "Spectrum",
    "closure_norm_bound",
    "symmetric_spectrum",
    "triangle_spectral_bound",
    "CheckResult",
    "check_decomposition",
    "check_equitable_hierarchy",
    "check_nonedge_sum",
    "check_openness",
    "check_oracle_blocks",
    "check_oracle_counts",
    "check_spectral_bounds",
    "check_transfer",
    "check_triangle_gram",
    "check_two_path_gram",
    "graph_checks",
    "partition_checks",
    "random_suite",
    "IncidenceMatrix",
    "OperatorParts",
    "WedgeSummary",
    "classify_vertices",
    "directed_wedge_operators",
    "edge_triangle_multiplicities",
    "is_cluster_graph",
    "local_clustering",
    "triadic_open_decomposition",
    "triangle_incidence",
    "two_incidence",
    "two_walk_operator",
    "wedge_summary",
]
