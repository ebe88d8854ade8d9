import pytest
from sympy import QQ

from errors import DimensionMismatchError, ParseError
from linalg import rational_matrix as rm


def test_parse_and_format_rational():
    assert rm.parse_rational("-3/6") == QQ(-1, 2)
    assert rm.parse_rational(" 4 ") == QQ(4)
    assert rm.format_rational(QQ(4, 2)) == "2"
    assert rm.format_rational(QQ(-1, 2)) == "-1/2"


@pytest.mark.parametrize("text", ["x", "1/0", ""])
def test_parse_rational_rejects_garbage(text):
    with pytest.raises(ParseError):
        rm.parse_rational(text)


def test_matrix_shape_is_checked():
    with pytest.raises(DimensionMismatchError):
        rm.matrix([[1, 2], [3]], 2, 2)


def test_rank_and_kernel():
    M = rm.matrix([[1, 2], [2, 4]])
    assert rm.rank(M) == 1
    K = rm.kernel_basis(M)
    assert K.shape == (2, 1)
    assert (M * K).is_zero_matrix
    assert rm.image_basis(M).shape == (2, 1)


def test_kernel_edge_shapes():
    assert rm.kernel_basis(rm.zeros(0, 3)) == rm.identity(3)
    assert rm.kernel_basis(rm.zeros(2, 0)).shape == (0, 0)
    assert rm.kernel_basis(rm.identity(3)).shape == (3, 0)


def test_row_reduce_is_consistent():
    M = rm.matrix([[1, 0, 1], [0, 1, 1], [1, 1, 2]])
    reduction = rm.row_reduce(M)
    assert reduction.rank == 2
    assert reduction.kernel.shape == (3, 1)
    assert (M * reduction.kernel).is_zero_matrix


def test_determinant():
    assert rm.determinant(rm.zeros(0, 0)) == 1
    assert rm.determinant(rm.matrix([[1, 2], [3, 4]])) == -2
    assert rm.determinant(rm.matrix([["1/2", 0], [0, "2/3"]])) == QQ(1, 3)
    with pytest.raises(DimensionMismatchError):
        rm.determinant(rm.zeros(2, 3))


def test_solve():
    A = rm.matrix([[1, 1], [0, 0]])
    assert rm.solve(A, rm.matrix([[1], [1]])) is None
    B = rm.matrix([[2], [0]])
    X = rm.solve(A, B)
    assert A * X == B


def test_inverse_and_nonsingular():
    M = rm.matrix([[2, 1], [1, 1]])
    assert rm.is_nonsingular(M)
    assert M * rm.inverse(M) == rm.identity(2)
    assert not rm.is_nonsingular(rm.matrix([[1, 2], [2, 4]]))
    assert rm.is_nonsingular(rm.zeros(0, 0))


def test_modular_rank_is_a_lower_bound():
    p = 7
    M = rm.matrix([[p, 0], [0, 1]])
    assert rm.rank_mod_p(M, p) == 1
    assert rm.rank(M) == 2


def test_large_matrices_use_the_modular_screen():
    n = 45
    M = rm.identity(n)
    assert rm.rank(M) == n
    assert rm.is_nonsingular(M)
    singular = rm.block_diagonal([rm.identity(n - 1), rm.zeros(1, 1)])
    assert rm.rank(singular) == n - 1
    assert not rm.is_nonsingular(singular)


def test_stacking():
    A = rm.matrix([[1, 2]])
    B = rm.matrix([[3, 4]])
    assert rm.vstack([A, B], 2) == rm.matrix([[1, 2], [3, 4]])
    assert rm.hstack([A, B], 1) == rm.matrix([[1, 2, 3, 4]])
