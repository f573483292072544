from fractions import Fraction

import pytest

from coronares import (
    EmptyGraph,
    InvalidVertex,
    LoopEdge,
    Matrix,
    TooSmall,
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


def test_graph_from_edges_basic():
    g = graph_from_edges(2, [(1, 2)])
    assert g.n == 2 and g.m == 1

    triangle = graph_from_edges(3, [(1, 2), (2, 3), (1, 3)])
    assert triangle.m == 3
    assert triangle == complete_graph(3)

    c4 = graph_from_edges(4, [(1, 2), (2, 3), (3, 4), (1, 4)])
    assert c4 == cycle_graph(4)


def test_graph_from_edges_dedups_both_orientations():
    g = graph_from_edges(3, [(1, 2), (2, 1), (1, 2)])
    assert g.m == 1
    assert g.has_edge(2, 1)


def test_graph_from_edges_errors():
    with pytest.raises(InvalidVertex):
        graph_from_edges(3, [(1, 4)])
    with pytest.raises(InvalidVertex):
        graph_from_edges(3, [(0, 2)])
    with pytest.raises(LoopEdge):
        graph_from_edges(3, [(2, 2)])
    with pytest.raises(EmptyGraph):
        graph_from_edges(0, [])


def test_families():
    assert path_graph(1).m == 0
    assert path_graph(2) == complete_graph(2)
    assert path_graph(3).edges == frozenset({(1, 2), (2, 3)})
    assert cycle_graph(3) == complete_graph(3)
    assert cycle_graph(5).m == 5
    assert complete_graph(1).m == 0
    assert complete_graph(4).m == 6
    assert is_regular(complete_graph(4)) == 3

    with pytest.raises(EmptyGraph):
        path_graph(0)
    with pytest.raises(TooSmall):
        cycle_graph(2)
    with pytest.raises(EmptyGraph):
        complete_graph(0)


def test_adjacency_matrix_examples():
    assert adjacency_matrix(complete_graph(2)) == Matrix.from_rows([[0, 1], [1, 0]])
    assert adjacency_matrix(path_graph(3)) == Matrix.from_rows(
        [[0, 1, 0], [1, 0, 1], [0, 1, 0]]
    )
    a = adjacency_matrix(cycle_graph(3))
    assert all(a[i, j] == (0 if i == j else 1) for i in range(3) for j in range(3))


def test_degree_matrix_examples():
    assert degree_matrix(complete_graph(2)) == Matrix.from_rows([[1, 0], [0, 1]])
    assert degree_matrix(path_graph(3)) == Matrix.from_rows(
        [[1, 0, 0], [0, 2, 0], [0, 0, 1]]
    )
    d = degree_matrix(cycle_graph(4))
    assert all(d[i, i] == 2 for i in range(4))


def test_laplacian_examples():
    assert laplacian(complete_graph(2)) == Matrix.from_rows([[1, -1], [-1, 1]])
    assert laplacian(cycle_graph(3)) == Matrix.from_rows(
        [[2, -1, -1], [-1, 2, -1], [-1, -1, 2]]
    )
    assert laplacian(path_graph(3)) == Matrix.from_rows(
        [[1, -1, 0], [-1, 2, -1], [0, -1, 1]]
    )


@pytest.mark.parametrize(
    "g",
    [
        path_graph(5),
        cycle_graph(6),
        complete_graph(4),
        graph_from_edges(5, [(1, 2), (2, 3), (3, 4), (1, 4), (1, 5)]),
    ],
)
def test_matrix_identities(g):
    a, d, lap = adjacency_matrix(g), degree_matrix(g), laplacian(g)
    assert lap == d - a
    assert all(s == 0 for s in lap.row_sums())
    assert a.is_symmetric()
    assert all(a[i, i] == 0 for i in range(g.n))
    assert sum(d[i, i] for i in range(g.n)) == Fraction(2 * g.m)
    assert all(lap[i, i] == Fraction(g.degree(i + 1)) for i in range(g.n))


def test_is_regular():
    assert is_regular(cycle_graph(4)) == 2
    assert is_regular(path_graph(3)) is None
    assert is_regular(complete_graph(4)) == 3
    assert is_regular(path_graph(1)) == 0


def test_is_connected():
    assert is_connected(path_graph(3))
    assert not is_connected(graph_from_edges(2, []))
    assert is_connected(cycle_graph(4))
    assert is_connected(path_graph(1))
    assert not is_connected(graph_from_edges(4, [(1, 2), (3, 4)]))


def test_cycle_invariants():
    for n in (3, 4, 7):
        g = cycle_graph(n)
        assert is_connected(g) and is_regular(g) == 2
    assert is_connected(path_graph(9))


def test_graph_immutable():
    g = path_graph(3)
    with pytest.raises(AttributeError):
        g.n = 5  # type: ignore[misc]


def test_degree_and_neighbors():
    g = graph_from_edges(4, [(1, 2), (2, 3), (1, 3), (1, 4)])
    assert g.degrees() == [3, 2, 2, 1]
    assert g.neighbors(1) == [2, 3, 4]
    assert g.neighbors(4) == [1]
    with pytest.raises(InvalidVertex):
        g.degree(5)
