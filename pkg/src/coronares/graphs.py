"""Simple undirected graphs and their classic matrices.

Vertices are 1-based externally (v1..vn); matrices index them 0-based in
row/column order. Graphs are immutable after construction, so products and
matrices can derive from them safely.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional

from .errors import EmptyGraph, InvalidVertex, LoopEdge, TooSmall
from .linalg import Matrix, zeros

Edge = tuple[int, int]


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph: vertex count plus a canonical edge set.

    Edges are stored as (a, b) with a < b, 1-based. Construction validates
    the invariants, so every Graph in circulation is well-formed.
    """

    n: int
    edges: frozenset[Edge] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        if self.n < 1:
            raise EmptyGraph("a graph needs at least one vertex")
        for a, b in self.edges:
            if a == b:
                raise LoopEdge(f"loop edge at vertex {a}")
            if not (1 <= a < b <= self.n):
                raise InvalidVertex(f"edge ({a},{b}) outside 1..{self.n}")

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        if not 1 <= v <= self.n:
            raise InvalidVertex(f"vertex {v} outside 1..{self.n}")
        return sum(1 for a, b in self.edges if a == v or b == v)

    def degrees(self) -> list[int]:
        degs = [0] * (self.n + 1)
        for a, b in self.edges:
            degs[a] += 1
            degs[b] += 1
        return degs[1:]

    def neighbors(self, v: int) -> list[int]:
        if not 1 <= v <= self.n:
            raise InvalidVertex(f"vertex {v} outside 1..{self.n}")
        out = [b for a, b in self.edges if a == v]
        out += [a for a, b in self.edges if b == v]
        return sorted(out)

    def has_edge(self, a: int, b: int) -> bool:
        if a > b:
            a, b = b, a
        return (a, b) in self.edges

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)


def graph_from_edges(n: int, edge_list: Iterable[Edge]) -> Graph:
    """Build a graph from a vertex count and edge pairs.

    Duplicate edges (in either orientation) are silently deduplicated.
    Raises InvalidVertex for out-of-range endpoints, LoopEdge for (i,i).
    """
    if n < 1:
        raise EmptyGraph("a graph needs at least one vertex")
    canon = set()
    for a, b in edge_list:
        if a == b:
            raise LoopEdge(f"loop edge at vertex {a}")
        if not (1 <= a <= n and 1 <= b <= n):
            raise InvalidVertex(f"edge ({a},{b}) outside 1..{n}")
        canon.add((a, b) if a < b else (b, a))
    return Graph(n, frozenset(canon))


def path_graph(n: int) -> Graph:
    """Path v1-v2-...-vn with n-1 edges; n=1 is a single isolated vertex."""
    if n < 1:
        raise EmptyGraph("path graph needs at least one vertex")
    return Graph(n, frozenset((i, i + 1) for i in range(1, n)))


def cycle_graph(n: int) -> Graph:
    """Cycle on n >= 3 vertices; 2-regular."""
    if n < 3:
        raise TooSmall("cycle graph needs at least three vertices")
    edges = {(i, i + 1) for i in range(1, n)}
    edges.add((1, n))
    return Graph(n, frozenset(edges))


def complete_graph(n: int) -> Graph:
    """Complete graph on n vertices."""
    if n < 1:
        raise EmptyGraph("complete graph needs at least one vertex")
    return Graph(n, frozenset((a, b) for a in range(1, n) for b in range(a + 1, n + 1)))


def adjacency_matrix(g: Graph) -> Matrix:
    rows = [[Fraction(0)] * g.n for _ in range(g.n)]
    one = Fraction(1)
    for a, b in g.edges:
        rows[a - 1][b - 1] = one
        rows[b - 1][a - 1] = one
    return Matrix(tuple(tuple(r) for r in rows))


def degree_matrix(g: Graph) -> Matrix:
    degs = g.degrees()
    rows = zeros(g.n, g.n).to_rows()
    for i, d in enumerate(degs):
        rows[i][i] = Fraction(d)
    return Matrix(tuple(tuple(r) for r in rows))


def laplacian(g: Graph) -> Matrix:
    """L(G) = D(G) - A(G): symmetric, zero row sums, degrees on the diagonal."""
    return degree_matrix(g) - adjacency_matrix(g)


def is_regular(g: Graph) -> Optional[int]:
    """The common degree r if the graph is r-regular, else None."""
    degs = g.degrees()
    return degs[0] if all(d == degs[0] for d in degs) else None


def is_connected(g: Graph) -> bool:
    """True iff the graph has a single connected component (n=1 counts)."""
    adj: list[list[int]] = [[] for _ in range(g.n + 1)]
    for a, b in g.edges:
        adj[a].append(b)
        adj[b].append(a)
    seen = {1}
    stack = [1]
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == g.n
