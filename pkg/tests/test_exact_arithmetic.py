from fractions import Fraction

import pytest

from symbols import exact_linalg
from symbols.cyclotomic import CyclotomicNumber, RootOfUnity, cyclotomic_polynomial
from symbols.rational_tools import falling_factorial, pochhammer, to_rational
from tools.exceptions import DimensionMismatchError, FileFormatError, SingularSystemError


@pytest.mark.parametrize("order, expected", [
    (1, (-1, 1)),
    (2, (1, 1)),
    (3, (1, 1, 1)),
    (4, (1, 0, 1)),
    (6, (1, -1, 1)),
    (12, (1, 0, -1, 0, 1)),
])
def test_cyclotomic_polynomials(order, expected):
    assert cyclotomic_polynomial(order) == expected


def test_cyclotomic_polynomial_with_large_coefficient():
    coefficients = cyclotomic_polynomial(105)
    assert len(coefficients) == 49
    assert -2 in coefficients
    with pytest.raises(ValueError):
        cyclotomic_polynomial(0)


def test_roots_of_unity_sum_to_zero():
    for order in (2, 3, 5, 6):
        total = CyclotomicNumber.from_powers(order, {k: Fraction(1) for k in range(order)})
        assert total.is_zero()


def test_products_are_reduced():
    zeta = CyclotomicNumber.from_powers(3, {1: Fraction(1)})
    assert zeta * zeta * zeta == 1
    assert (zeta * zeta + zeta + 1).is_zero()


def test_mixed_orders_are_lifted():
    minus_one = CyclotomicNumber.from_powers(2, {1: Fraction(1)})
    zeta3 = CyclotomicNumber.from_powers(3, {1: Fraction(1)})
    value = minus_one * zeta3
    assert value.order == 6
    assert abs(value.to_complex() - RootOfUnity(1, 2).to_complex() * RootOfUnity(1, 3).to_complex()) < 1e-12


def test_rational_values():
    half = CyclotomicNumber.rational(Fraction(1, 2), 5)
    assert half.is_rational()
    assert half + half == 1
    assert not CyclotomicNumber.from_powers(5, {2: Fraction(1)}).is_rational()


def test_combinatorial_products():
    assert falling_factorial(Fraction(5), 3) == 60
    assert falling_factorial(Fraction(1, 2), 0) == 1
    assert pochhammer(Fraction(-1, 2), 2) == Fraction(-1, 4)
    assert pochhammer(Fraction(3), 4) == 360


def test_to_rational():
    assert to_rational("3/9") == Fraction(1, 3)
    assert to_rational("0.25") == Fraction(1, 4)
    with pytest.raises(FileFormatError):
        to_rational("1/0")
    with pytest.raises(TypeError):
        to_rational(True)


def test_exact_solve():
    matrix = exact_linalg.as_matrix([[2, 1], [1, 3]])
    assert exact_linalg.solve(matrix, [1, 2]) == [Fraction(1, 5), Fraction(3, 5)]
    with pytest.raises(SingularSystemError):
        exact_linalg.solve(exact_linalg.as_matrix([[1, 2], [2, 4]]), [1, 1])
    with pytest.raises(DimensionMismatchError):
        exact_linalg.mat_vec(matrix, [1, 2, 3])


def test_inverse_and_product():
    matrix = exact_linalg.as_matrix([[1, 2, 0], [0, 1, 4], [5, 6, 0]])
    assert exact_linalg.mat_mul(matrix, exact_linalg.inverse(matrix)) == exact_linalg.identity(3)
    with pytest.raises(SingularSystemError):
        exact_linalg.inverse(exact_linalg.as_matrix([[1, 2], [2, 4]]))
    assert exact_linalg.inverse([]) == []
    assert exact_linalg.solve([], []) == []


def test_nullspace_and_rank():
    matrix = exact_linalg.as_matrix([[1, 1, 1], [2, 2, 2]])
    assert exact_linalg.rank(matrix) == 1
    basis = exact_linalg.nullspace(matrix)
    assert len(basis) == 2
    assert all(not any(exact_linalg.mat_vec(matrix, vector)) for vector in basis)
    assert basis == [[-1, 1, 0], [-1, 0, 1]]
    assert exact_linalg.nullspace(exact_linalg.identity(3)) == []


def test_basis_extension():
    start = [[Fraction(1), Fraction(-1), Fraction(0)]]
    basis = exact_linalg.extend_to_basis(start, 3)
    assert len(basis) == 3
    assert basis[0] == start[0]
    assert exact_linalg.rank(basis) == 3
    assert exact_linalg.in_span(basis[:1], [Fraction(-2), Fraction(2), Fraction(0)])
    assert not exact_linalg.in_span(basis[:1], [Fraction(1), Fraction(0), Fraction(0)])


def test_span_basis():
    vectors = [[Fraction(1), Fraction(2), Fraction(3)], [Fraction(2), Fraction(4), Fraction(6)],
               [Fraction(0), Fraction(1), Fraction(1)]]
    basis = exact_linalg.span_basis(vectors)
    assert basis == [[1, 0, 1], [0, 1, 1]]
    assert exact_linalg.in_span(basis, [Fraction(3), Fraction(5), Fraction(8)])
    assert not exact_linalg.in_span(basis, [Fraction(0), Fraction(0), Fraction(1)])
    assert exact_linalg.span_basis([]) == []
