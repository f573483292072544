"""coronares: exact resistance distances on corona-style product graphs.

Core layers:

- `graphs`     simple undirected graphs and A, D, L
- `linalg`     exact rational matrices, Kronecker products, fraction-free
               inversion, Schur complements, group inverses
- `products`   corona / neighborhood-corona constructions and their
               partitioned block Laplacians
- `resistance` {1}-inverses of product Laplacians and resistance matrices,
               theorem path plus an independent whole-Laplacian oracle
- `graphspec`  text grammar for graphs and a DOT subset reader
- `service`    FastAPI app and pydantic documents
- `cli`        command-line front end (thin client of the service layer)
"""

__version__ = "0.1.0"

from .errors import (
    CoronaresError,
    DimMismatch,
    EmptyGraph,
    InvalidVertex,
    IsolatedVertex,
    KernelMismatch,
    LoopEdge,
    NotConnected,
    NotRegular,
    ParseError,
    Singular,
    TooSmall,
)
from .graphs import (
    Graph,
    adjacency_matrix,
    complete_graph,
    cycle_graph,
    degree_matrix,
    graph_from_edges,
    is_connected,
    is_regular,
    laplacian,
    path_graph,
)
from .graphspec import graph_to_spec, parse_dot, parse_graph_spec
from .linalg import (
    Matrix,
    PartitionedMatrix,
    all_ones,
    block_inverse,
    group_inverse_laplacian_like,
    identity,
    invert,
    kronecker,
    ones_vector,
    schur_complement,
    verify_group_inverse,
    verify_one_inverse,
    zeros,
)
from .products import (
    BlockLaplacian,
    copy_vertex,
    corona,
    corona_block_laplacian,
    ncorona_block_laplacian,
    neighborhood_corona,
)
from .resistance import (
    GInverse,
    ResistanceMatrix,
    g_inverse_corona,
    g_inverse_direct,
    g_inverse_ncorona,
    kirchhoff_index,
    one_inverse_from_blocks,
    resistance_direct,
    resistance_from_ginverse,
    schur_S_corona,
    schur_S_ncorona,
)

__all__ = [
    "__version__",
    "CoronaresError",
    "DimMismatch",
    "EmptyGraph",
    "InvalidVertex",
    "IsolatedVertex",
    "KernelMismatch",
    "LoopEdge",
    "NotConnected",
    "NotRegular",
    "ParseError",
    "Singular",
    "TooSmall",
    "Graph",
    "adjacency_matrix",
    "complete_graph",
    "cycle_graph",
    "degree_matrix",
    "graph_from_edges",
    "is_connected",
    "is_regular",
    "laplacian",
    "path_graph",
    "graph_to_spec",
    "parse_dot",
    "parse_graph_spec",
    "Matrix",
    "PartitionedMatrix",
    "all_ones",
    "block_inverse",
    "group_inverse_laplacian_like",
    "identity",
    "invert",
    "kronecker",
    "ones_vector",
    "schur_complement",
    "verify_group_inverse",
    "verify_one_inverse",
    "zeros",
    "BlockLaplacian",
    "copy_vertex",
    "corona",
    "corona_block_laplacian",
    "ncorona_block_laplacian",
    "neighborhood_corona",
    "GInverse",
    "ResistanceMatrix",
    "g_inverse_corona",
    "g_inverse_direct",
    "g_inverse_ncorona",
    "kirchhoff_index",
    "one_inverse_from_blocks",
    "resistance_direct",
    "resistance_from_ginverse",
    "schur_S_corona",
    "schur_S_ncorona",
]
