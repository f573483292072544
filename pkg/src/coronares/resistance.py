"""Resistance distances via symmetric {1}-inverses of product-graph Laplacians.

Two computation paths exist on purpose. The theorem path builds a {1}-inverse
of L(G1 o G2) or L(G1 <> G2) from the closed-form Schur complement of the
block Laplacian and applies the four-term resistance formula
r_ij = h_ii + h_jj - h_ij - h_ji, which is valid for any {1}-inverse. The
direct path takes the group inverse of the full Laplacian and uses the
two-term form r_ij = h_ii + h_jj - 2*h_ij; it is the independent oracle the
theorem path is checked against.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DimMismatch, IsolatedVertex, NotConnected
from .graphs import Graph, is_connected, laplacian
from .linalg import (
    Matrix,
    PartitionedMatrix,
    all_ones,
    group_inverse_laplacian_like,
    invert,
    kronecker,
)
from .products import (
    CORONA,
    NCORONA,
    BlockLaplacian,
    corona_block_laplacian,
    ncorona_block_laplacian,
)

THEOREM_SOURCES = {CORONA: "corona-theorem", NCORONA: "ncorona-theorem"}
ORACLE_SOURCE = "direct-oracle"


@dataclass(frozen=True)
class GInverse:
    """A symmetric {1}-inverse of some Laplacian, tagged with its origin."""

    h: Matrix
    source: str


@dataclass(frozen=True)
class ResistanceMatrix:
    """Symmetric hollow matrix of pairwise effective resistances."""

    r: Matrix

    @property
    def n(self) -> int:
        return self.r.rows

    def between(self, i: int, j: int) -> Fraction:
        """Resistance between vertices i and j, 1-based."""
        return self.r[i - 1, j - 1]


def schur_S_corona(bl: BlockLaplacian) -> Matrix:
    """S = l3 - J_{n2 x n2} (x) l1^(-1) for a corona block Laplacian."""
    if bl.ordering != CORONA:
        raise ValueError("expected a corona block Laplacian")
    return bl.l3 - kronecker(all_ones(bl.n2), invert(bl.l1))


def schur_S_ncorona(bl: BlockLaplacian) -> Matrix:
    """S = l3 - J_{n2 x n2} (x) [A^T l1^(-1) A] for a neighborhood corona.

    A = A(G1) is recovered from the coupling block: l2 = -1^T (x) A, so its
    first n1 columns are -A.
    """
    if bl.ordering != NCORONA:
        raise ValueError("expected a neighborhood-corona block Laplacian")
    n1 = bl.n1
    a = -bl.l2.submatrix(0, n1, 0, n1)
    core = a.T @ invert(bl.l1) @ a
    return bl.l3 - kronecker(all_ones(bl.n2), core)


def one_inverse_from_blocks(bl: BlockLaplacian, s_sharp: Matrix) -> GInverse:
    """Assemble the symmetric {1}-inverse from l1, l2 and S^#.

    X = [[l1^(-1) + l1^(-1) l2 S^# l2^T l1^(-1),  -l1^(-1) l2 S^#],
         [-S^# l2^T l1^(-1),                       S^#]].
    """
    if not s_sharp.is_square or s_sharp.rows != bl.l3.rows:
        raise DimMismatch("S^# must match the copy block size")
    l1_inv = invert(bl.l1)
    t = l1_inv @ bl.l2
    ts = t @ s_sharp
    x = PartitionedMatrix(
        a11=l1_inv + ts @ t.T, a12=-ts, a21=-ts.T, a22=s_sharp
    ).assemble()
    return GInverse(h=x, source=THEOREM_SOURCES[bl.ordering])


def g_inverse_corona(g1: Graph, g2: Graph, require_regular: bool = False) -> GInverse:
    """Symmetric {1}-inverse of L(G1 o G2) via the closed-form Schur complement."""
    if not is_connected(g1):
        raise NotConnected("corona host graph must be connected")
    bl = corona_block_laplacian(g1, g2, require_regular)
    s_sharp = group_inverse_laplacian_like(schur_S_corona(bl))
    return one_inverse_from_blocks(bl, s_sharp)


def g_inverse_ncorona(g1: Graph, g2: Graph, require_regular: bool = False) -> GInverse:
    """Symmetric {1}-inverse of L(G1 <> G2) via the closed-form Schur complement."""
    if not is_connected(g1):
        raise NotConnected("neighborhood corona host graph must be connected")
    if 0 in g1.degrees():
        raise IsolatedVertex(
            "neighborhood corona host graph must have no isolated vertex"
        )
    bl = ncorona_block_laplacian(g1, g2, require_regular)
    s_sharp = group_inverse_laplacian_like(schur_S_ncorona(bl))
    return one_inverse_from_blocks(bl, s_sharp)


def g_inverse_direct(g: Graph) -> GInverse:
    """Oracle path: the group inverse of the whole Laplacian of any connected graph."""
    if not is_connected(g):
        raise NotConnected("graph must be connected")
    return GInverse(h=group_inverse_laplacian_like(laplacian(g)), source=ORACLE_SOURCE)


def resistance_from_ginverse(h: GInverse) -> ResistanceMatrix:
    """Four-term formula r_ij = h_ii + h_jj - h_ij - h_ji, valid for any {1}-inverse."""
    m = h.h
    n = m.rows
    zero = Fraction(0)
    rows = tuple(
        tuple(
            zero if i == j else m[i, i] + m[j, j] - m[i, j] - m[j, i]
            for j in range(n)
        )
        for i in range(n)
    )
    return ResistanceMatrix(Matrix(rows))


def resistance_direct(g: Graph) -> ResistanceMatrix:
    """Oracle path: two-term formula r_ij = h_ii + h_jj - 2*h_ij on the group inverse."""
    m = g_inverse_direct(g).h
    n = m.rows
    zero = Fraction(0)
    rows = tuple(
        tuple(
            zero if i == j else m[i, i] + m[j, j] - 2 * m[i, j]
            for j in range(n)
        )
        for i in range(n)
    )
    return ResistanceMatrix(Matrix(rows))


def kirchhoff_index(r: ResistanceMatrix) -> Fraction:
    """Sum of resistances over unordered vertex pairs."""
    total = Fraction(0)
    for i in range(r.n):
        row = r.r.row(i)
        for j in range(i + 1, r.n):
            total += row[j]
    return total
