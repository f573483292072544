"""Corona and neighborhood-corona products with their block Laplacians.

Vertex-ordering contract for both products on hosts G1 (n1 vertices) and
pattern G2 (n2 vertices): host vertices v1..v_{n1} come first, then the
copy vertices grouped by G2-vertex index j — group j holds w_j^1..w_j^{n1}
with the copy index i varying fastest. Under this ordering the host/copy
coupling block of the Laplacian is a Kronecker product (-1^T (x) I for the
corona, -1^T (x) A(G1) for the neighborhood corona), which is exactly what
the closed-form Schur complements below rely on.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DimMismatch, EmptyGraph, NotRegular
from .graphs import (
    Graph,
    adjacency_matrix,
    degree_matrix,
    is_regular,
    laplacian,
)
from .linalg import Matrix, PartitionedMatrix, identity, kronecker, ones_vector

CORONA = "corona"
NCORONA = "ncorona"


def copy_vertex(n1: int, i: int, j: int) -> int:
    """1-based index of w_j^i (copy i of G2-vertex j) in the product ordering."""
    return n1 + (j - 1) * n1 + i


@dataclass(frozen=True)
class BlockLaplacian:
    """Partitioned Laplacian [[l1, l2], [l2^T, l3]] of a product graph.

    l1 is n1 x n1 (host block), l2 is n1 x n1*n2 (coupling), l3 is
    n1*n2 x n1*n2 (copy block). `ordering` records which product's
    vertex-ordering contract the partition follows.
    """

    l1: Matrix
    l2: Matrix
    l3: Matrix
    ordering: str

    def __post_init__(self) -> None:
        if not (self.l1.is_square and self.l3.is_square):
            raise DimMismatch("l1 and l3 must be square")
        if self.l2.rows != self.l1.rows or self.l2.cols != self.l3.rows:
            raise DimMismatch("l2 must be n1 x (n1*n2)")
        if self.l3.rows % self.l1.rows != 0:
            raise DimMismatch("l3 size must be a multiple of n1")
        if self.ordering not in (CORONA, NCORONA):
            raise ValueError(f"unknown ordering tag: {self.ordering!r}")

    @property
    def n1(self) -> int:
        return self.l1.rows

    @property
    def n2(self) -> int:
        return self.l3.rows // self.l1.rows

    def assemble(self) -> Matrix:
        return PartitionedMatrix(
            a11=self.l1, a12=self.l2, a21=self.l2.T, a22=self.l3
        ).assemble()


def _product_edges(g1: Graph, g2: Graph, host_targets) -> frozenset[tuple[int, int]]:
    """Shared edge builder; host_targets(i) lists host vertices joined to copy i."""
    n1 = g1.n
    edges = set(g1.edges)
    for i in range(1, n1 + 1):
        targets = host_targets(i)
        for j in range(1, g2.n + 1):
            w = copy_vertex(n1, i, j)
            for t in targets:
                edges.add((t, w) if t < w else (w, t))
        for a, b in g2.edges:
            wa, wb = copy_vertex(n1, i, a), copy_vertex(n1, i, b)
            edges.add((wa, wb) if wa < wb else (wb, wa))
    return frozenset(edges)


def corona(g1: Graph, g2: Graph) -> Graph:
    """G1 o G2: one copy of G1, n1 copies of G2, host i joined to all of copy i."""
    if g2.n < 1:
        raise EmptyGraph("corona pattern graph must be nonempty")
    return Graph(g1.n * (1 + g2.n), _product_edges(g1, g2, lambda i: (i,)))


def neighborhood_corona(g1: Graph, g2: Graph) -> Graph:
    """G1 <> G2: every neighbor of host i joined to every vertex of copy i."""
    if g2.n < 1:
        raise EmptyGraph("neighborhood corona pattern graph must be nonempty")
    return Graph(g1.n * (1 + g2.n), _product_edges(g1, g2, g1.neighbors))


def _check_regular(g1: Graph, require_regular: bool) -> None:
    if require_regular and is_regular(g1) is None:
        raise NotRegular("strict mode: host graph must be regular")


def corona_block_laplacian(
    g1: Graph, g2: Graph, require_regular: bool = False
) -> BlockLaplacian:
    """Blocks of L(G1 o G2) under the corona vertex ordering.

    l1 = L(G1) + n2*I, l2 = -1^T_{n2} (x) I_{n1},
    l3 = (L(G2) + I_{n2}) (x) I_{n1}.

    The closed-form Schur complement downstream only needs l1 nonsingular,
    which holds for any G1 here; the classical hypothesis additionally
    demands a regular host, and require_regular=True enforces that.
    """
    if g2.n < 1:
        raise EmptyGraph("corona pattern graph must be nonempty")
    _check_regular(g1, require_regular)
    n1, n2 = g1.n, g2.n
    i1 = identity(n1)
    l1 = laplacian(g1) + Fraction(n2) * i1
    l2 = -kronecker(ones_vector(n2).T, i1)
    l3 = kronecker(laplacian(g2) + identity(n2), i1)
    return BlockLaplacian(l1=l1, l2=l2, l3=l3, ordering=CORONA)


def ncorona_block_laplacian(
    g1: Graph, g2: Graph, require_regular: bool = False
) -> BlockLaplacian:
    """Blocks of L(G1 <> G2) under the neighborhood-corona vertex ordering.

    l1 = L(G1) + n2*D(G1), l2 = -1^T_{n2} (x) A(G1),
    l3 = L(G2) (x) I_{n1} + I_{n2} (x) D(G1).
    """
    if g2.n < 1:
        raise EmptyGraph("neighborhood corona pattern graph must be nonempty")
    _check_regular(g1, require_regular)
    n1, n2 = g1.n, g2.n
    i1 = identity(n1)
    l1 = laplacian(g1) + Fraction(n2) * degree_matrix(g1)
    l2 = -kronecker(ones_vector(n2).T, adjacency_matrix(g1))
    l3 = kronecker(laplacian(g2), i1) + kronecker(identity(n2), degree_matrix(g1))
    return BlockLaplacian(l1=l1, l2=l2, l3=l3, ordering=NCORONA)
