"""Sparse hypergraphs: orientations, spanning structures, flows and
set-by-vertex encodings."""

from .core import (
    DirectedGraph,
    Hypergraph,
    Orientation,
    UndirectedGraph,
    as_graph,
    connected_components,
    induced_subhypergraph,
    is_connected,
    parse_digraph,
    parse_hypergraph,
    preimage_counts,
    serialize_digraph,
    serialize_hypergraph,
    serialize_orientation,
)
from .errors import (
    CapExceeded,
    ClassOverflow,
    Disconnected,
    InvalidFlow,
    MalformedPartition,
    MalformedTree,
    NoHomomorphism,
    NoHyperpath,
    NotAGraph,
    NotATreeNode,
    NotKSparse,
    NotSparseDistribution,
    ParseError,
    RankTooSmall,
    SparseHGError,
)
from .sparsity import (
    SparsityReport,
    antisymmetric_orientation,
    bounded_orientation,
    check_h_orientation,
    directed_quotient,
    find_homomorphism,
    is_k_sparse,
    is_k_sparse_bruteforce,
    orientation_weight,
)
from .spanning import (
    DepthFirstSpanningTree,
    PriorityTree,
    VertexOrder,
    aux_order,
    aux_preorder,
    auxiliary_nodes,
    b_set,
    branches,
    build_dfst,
    build_priority_tree,
    dfst_orientation,
    edge_order,
    edge_ordering,
    find_hyperpath,
    is_hyperpath,
    neighbourhood_ordering,
    priority_tree_linear_order,
    tree_order_violations,
    validate_dfst,
    validate_priority_tree,
    vertex_equiv,
)
from .flows import (
    Flow,
    PathFamily,
    border,
    bounds,
    cancel_cycles,
    check_delta_flow,
    compute_delta_flow,
    decompose_flow_paths,
    defect,
    distribution_sum,
    function_from_flow,
    induced_distribution,
    is_k_sparse_distribution,
    is_k_sparse_distribution_bruteforce,
    parse_distribution,
    parse_flow,
    serialize_distribution,
    serialize_flow,
    validate_path_family,
)
from .encoding import (
    FiniteSetFunction,
    parse_set_function,
    refine_to_injective,
    serialize_gmap,
    serialize_set_function,
    set_order,
    sort_sets,
    spanning_forest,
    verify_encoding,
    vertex_lex_order,
)

__version__ = "0.1.0"
