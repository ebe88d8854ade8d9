import pytest
from sympy.polys.matrices import DomainMatrix

from errors import SymbolicLimitExceeded
from linalg import rational_matrix as rm
from linalg.charpoly import char_poly, char_poly_rational_split, evaluate_at
from linalg.poly_matrix import (
    evaluate_poly_matrix,
    evaluate_polynomial,
    format_polynomial,
    polynomial_ring,
    symbolic_determinant,
)


def test_symbolic_determinant_and_evaluation():
    K = polynomial_ring(["x", "y"])
    x, y = K.gens
    M = DomainMatrix([[x, y], [y, x]], (2, 2), K)
    det = symbolic_determinant(M)
    assert det == x ** 2 - y ** 2
    assert evaluate_polynomial(det, [3, 1]) == 8
    assert evaluate_poly_matrix(M, [3, 1]) == rm.matrix([[3, 1], [1, 3]])


def test_symbolic_determinant_respects_the_limit():
    K = polynomial_ring(["x"])
    M = DomainMatrix([[K.gens[0]] * 3 for _ in range(3)], (3, 3), K)
    with pytest.raises(SymbolicLimitExceeded):
        symbolic_determinant(M, limit=2)
    assert not symbolic_determinant(M, limit=3)


def test_empty_symbolic_determinant_is_one():
    K = polynomial_ring(["x"])
    assert symbolic_determinant(DomainMatrix([], (0, 0), K)) == K.one


def test_polynomial_ring_needs_variables():
    with pytest.raises(ValueError):
        polynomial_ring([])


def test_format_polynomial():
    K = polynomial_ring(["t1", "t2"])
    assert format_polynomial(K.zero) == "0"
    assert format_polynomial(K.gens[0] * K.gens[1]) == "t1*t2"


def test_char_poly_split():
    rotation = rm.matrix([[0, -1], [1, 0]])
    factors = char_poly_rational_split(rotation)
    assert len(factors) == 1
    assert factors[0][0].degree() == 2
    assert factors[0][1] == 1

    diagonal = rm.matrix([[1, 0], [0, 2]])
    assert [f.degree() for f, _ in char_poly_rational_split(diagonal)] == [1, 1]


def test_cayley_hamilton():
    M = rm.matrix([[1, 2, 0], [0, 1, 3], [4, 0, 1]])
    assert evaluate_at(M, char_poly(M)).is_zero_matrix
