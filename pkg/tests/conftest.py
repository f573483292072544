from fractions import Fraction

import pytest

from coronares import Matrix, graph_from_edges


@pytest.fixture
def paw():
    """Fixed non-regular 4-vertex graph: triangle with a pendant vertex."""
    return graph_from_edges(4, [(1, 2), (2, 3), (1, 3), (1, 4)])


def naive_inverse(m: Matrix) -> Matrix:
    """Independent oracle: plain rational Gauss-Jordan, no Bareiss tricks."""
    n = m.rows
    aug = [list(m.row(i)) + [Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for k in range(n):
        pivot = next((i for i in range(k, n) if aug[i][k]), None)
        if pivot is None:
            raise ZeroDivisionError("singular")
        aug[k], aug[pivot] = aug[pivot], aug[k]
        pv = aug[k][k]
        aug[k] = [x / pv for x in aug[k]]
        for i in range(n):
            if i != k and aug[i][k]:
                f = aug[i][k]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[k])]
    return Matrix.from_rows([row[n:] for row in aug])
