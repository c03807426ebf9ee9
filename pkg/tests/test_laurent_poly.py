from fractions import Fraction

import pytest

from schemes.dubuc_deslauriers import dd_coefficients
from schemes.box_splines import first_directions_factor
from schemes.mask import Dilation
from schemes.anisotropic_interpolatory import aniso_interp_symbol
from symbols.cyclotomic import RootOfUnity
from symbols.laurent_poly import LaurentPoly
from symbols.rational_tools import parse_rational, render_rational
from tools.exceptions import ArityMismatchError, FileFormatError

Z = LaurentPoly.variable(0, 1)
Z1 = LaurentPoly.variable(0)
Z2 = LaurentPoly.variable(1)


def test_addition_cancels_terms():
    assert (Z + 1) + (-Z) == LaurentPoly.constant(1, 1)
    assert ((Z + 1) + (-Z)).nonzero_count() == 1


def test_zero_is_additive_identity():
    p = Z1 * Z2 + Fraction(1, 3) * Z2 ** 2
    assert p + LaurentPoly(arity=2) == p


def test_square_of_binomial():
    assert (1 + Z) * (1 + Z) == LaurentPoly.from_coefficients([1, 2, 1])


def test_one_is_multiplicative_identity():
    p = Z1 ** -1 + 2 * Z2
    assert p * 1 == p


def test_mixing_arities_raises():
    with pytest.raises(ArityMismatchError):
        Z + Z1


def test_tensor_lift_builds_linear_box_mask():
    hat2 = LaurentPoly({(-1,): "1/2", (0,): 1, (1,): "1/2"}, 1)
    hat3 = LaurentPoly({(-2,): "1/3", (-1,): "2/3", (0,): 1, (1,): "2/3", (2,): "1/3"}, 1)
    product_mask = hat2.lift(0) * hat3.lift(1)
    assert product_mask.coefficient((0, 0)) == 1
    assert product_mask.coefficient((1, 2)) == Fraction(1, 6)
    assert product_mask.coefficient_sum() == 6
    assert product_mask.support_box() == ((-1, 1), (-2, 2))


def test_tensor_sum_with_order_one_gives_interpolatory_mask():
    lifted = dd_coefficients(2, 1).lift(0) * dd_coefficients(3, 1).lift(1)
    assert lifted == aniso_interp_symbol(Dilation(2, 3), 1).symbol


def test_derivative_of_monomial():
    assert (Z1 ** 2 * Z2).derivative((1, 0)) == 2 * Z1 * Z2
    p = Z1 ** 3 - Z1 * Z2 ** -2
    assert p.derivative((0, 0)) == p


def test_partial_derivatives_commute():
    p = Z1 ** -2 * Z2 ** 3 + Fraction(5, 7) * Z1 ** 4 * Z2 - Z2 ** -1
    assert p.derivative((1, 0)).derivative((0, 1)) == p.derivative((0, 1)).derivative((1, 0))


def test_second_derivative_of_box_factor():
    # first_directions_factor^n has D^(2,0) = n/2 at (1,1), so six times it gives 3n
    for n in range(1, 4):
        value = (6 * first_directions_factor() ** n).derivative((2, 0)).evaluate((1, 1))
        assert value == 3 * n


def test_negative_derivative_order_raises():
    with pytest.raises(ValueError):
        Z1.derivative((-1, 0))


def test_cyclotomic_identity():
    assert (1 + Z + Z ** 2).evaluate_at_roots((RootOfUnity(-1, 3),)).is_zero()
    assert (1 + Z + Z ** 2).evaluate_at_roots((RootOfUnity(1, 3),)).is_zero()


def test_interpolatory_mask_values_at_special_points():
    symbol = aniso_interp_symbol(Dilation(2, 3), 1).symbol
    assert symbol.evaluate((1, 1)) == 6
    assert symbol.evaluate((-1, 1)) == 0
    assert symbol.evaluate_at_roots((RootOfUnity(1, 2), RootOfUnity(0, 3))).is_zero()


@pytest.mark.parametrize("point", [(RootOfUnity(1, 2), RootOfUnity(2, 3)), (RootOfUnity(0, 4), RootOfUnity(1, 5))])
def test_evaluation_is_multiplicative(point):
    p = Z1 ** 2 - Fraction(1, 2) * Z2 + Z1 ** -1 * Z2 ** 3
    q = 3 * Z1 * Z2 - Z2 ** -2 + 1
    assert (p * q).evaluate_at_roots(point) == p.evaluate_at_roots(point) * q.evaluate_at_roots(point)


def test_ring_axioms():
    p = Z1 - 2 * Z2 ** -1
    q = Fraction(1, 3) * Z1 * Z2 + 4
    r = Z2 ** 2 - Z1 ** -3
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p * q == q * p


def test_reflection_and_symmetry():
    assert not (Z1 + 1).is_symmetric()
    assert (Z1 + Z1 ** -1).is_symmetric()
    assert (Z1 * Z2 + Z1 ** -1 * Z2 ** -1).is_symmetric()
    assert not (Z1 * Z2 + Z1 ** -1 * Z2 ** -1).is_fully_symmetric()


def test_json_terms_read_back():
    p = Fraction(-4, 81) * Z1 ** -3 * Z2 + Z2 ** 2
    assert LaurentPoly.from_json(p.to_json()) == p
    with pytest.raises(FileFormatError):
        LaurentPoly.from_json([{"exp": [0, 0], "num": "1"}])


def test_render():
    p = Fraction(1, 2) * Z1 ** -1 + 1
    assert p.render() == "1/2 * z1^-1 + 1"
    assert LaurentPoly(arity=2).render() == "0"


@pytest.mark.parametrize("value", [Fraction(0), Fraction(7), Fraction(-241, 6912), Fraction(20809, 93312)])
def test_rational_text_round_trip(value):
    assert parse_rational(render_rational(value)) == value


def test_float_coefficients_are_rejected():
    with pytest.raises(TypeError):
        LaurentPoly({(0, 0): 0.5})
