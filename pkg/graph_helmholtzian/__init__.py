from graph_helmholtzian._complex import (
    Graph,
    OrientedComplex,
    Triangle,
    complex_from_json,
    complex_to_json,
    component_count,
    contract_edge,
    cut_edges,
    delete_pendant,
    enumerate_triangles,
    from_edge_list,
    induced_subgraph,
    reorient_edges,
    reorient_triangles,
    split_components,
    subdivide_edge,
    to_edge_list,
    to_networkx,
    triangle_degree,
)
from graph_helmholtzian._exceptions import (
    CommonNeighbor,
    DimensionMismatch,
    DuplicateEdge,
    EmptyGraph,
    Error,
    GraphError,
    IndexOutOfRange,
    InputError,
    InvalidComplex,
    InvalidVertexId,
    NonFiniteValues,
    NotPendant,
    NotSymmetric,
    ParseError,
    SelfLoop,
    UnknownVertex,
    UsageError,
    VerificationFailure,
)
from graph_helmholtzian._generators import (
    FAMILIES,
    complete_graph,
    cycle_graph,
    from_networkx,
    generate,
    gnp_graph,
    path_graph,
    random_orientation,
    random_tree,
    star_graph,
)
from graph_helmholtzian._helmholtzian import (
    EquivalenceReport,
    HelmholtzianMatrix,
    assemble,
    assemble_entrywise,
    assemble_product,
    verify_equivalence,
)
from graph_helmholtzian._hodge import (
    HodgeDecomposition,
    NullityReport,
    RankingResult,
    StructuralCheck,
    StructuralReport,
    harmonic_basis,
    helmholtz_decompose,
    nullity_exact,
    nullity_predicted,
    rank_flows,
    structural_nullity_checks,
    triangle_count_predicted,
)
from graph_helmholtzian._incidence import EdgeFlow, TriangleCochain, VertexPotential, build_B, build_C, curl, div, grad
from graph_helmholtzian._linalg import (
    DEFAULT_TOL,
    RationalVectorBasis,
    exact_rank,
    kernel_basis,
    least_squares_project,
    near_zero_count,
    symmetric_eigenvalues,
)
from graph_helmholtzian._matrices import IntegerMatrix, vstack

__all__ = [
    "Graph",
    "Triangle",
    "OrientedComplex",
    "from_edge_list",
    "to_edge_list",
    "enumerate_triangles",
    "triangle_degree",
    "to_networkx",
    "component_count",
    "induced_subgraph",
    "split_components",
    "cut_edges",
    "delete_pendant",
    "contract_edge",
    "subdivide_edge",
    "reorient_edges",
    "reorient_triangles",
    "complex_to_json",
    "complex_from_json",
    "FAMILIES",
    "from_networkx",
    "path_graph",
    "cycle_graph",
    "complete_graph",
    "star_graph",
    "gnp_graph",
    "random_tree",
    "random_orientation",
    "generate",
    "IntegerMatrix",
    "vstack",
    "VertexPotential",
    "EdgeFlow",
    "TriangleCochain",
    "build_B",
    "build_C",
    "grad",
    "curl",
    "div",
    "HelmholtzianMatrix",
    "EquivalenceReport",
    "assemble_product",
    "assemble_entrywise",
    "verify_equivalence",
    "assemble",
    "DEFAULT_TOL",
    "RationalVectorBasis",
    "exact_rank",
    "kernel_basis",
    "symmetric_eigenvalues",
    "near_zero_count",
    "least_squares_project",
    "NullityReport",
    "HodgeDecomposition",
    "RankingResult",
    "StructuralCheck",
    "StructuralReport",
    "nullity_exact",
    "nullity_predicted",
    "triangle_count_predicted",
    "harmonic_basis",
    "helmholtz_decompose",
    "rank_flows",
    "structural_nullity_checks",
    "Error",
    "GraphError",
    "ParseError",
    "SelfLoop",
    "DuplicateEdge",
    "EmptyGraph",
    "UnknownVertex",
    "InvalidVertexId",
    "InvalidComplex",
    "NotPendant",
    "CommonNeighbor",
    "IndexOutOfRange",
    "DimensionMismatch",
    "NonFiniteValues",
    "NotSymmetric",
    "VerificationFailure",
    "InputError",
    "UsageError",
]
