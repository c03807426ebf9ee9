"""
Anisotropic four-directional box-spline masks B_n and the approximating family B_{n,l}
built on top of them, both for the dilation diag(2, 3).
"""

from fractions import Fraction
from functools import lru_cache
from typing import Dict, Tuple

from schemes.mask import Dilation, Mask, MaskFamily
from symbols import exact_linalg
from symbols.laurent_poly import LaurentPoly
from tools.exceptions import MaskParameterError

BOX_DILATION = Dilation(2, 3)

Z1 = LaurentPoly.variable(0)
Z2 = LaurentPoly.variable(1)
ONE = LaurentPoly.constant(1)


def _inverse_monomial(e1: int, e2: int, scale: int) -> LaurentPoly:
    """ 1 / (scale * z1^e1 * z2^e2) """
    return LaurentPoly.monomial((-e1, -e2), Fraction(1, scale))


def first_directions_factor() -> LaurentPoly:
    """ (1+z1)^2 / (4 z1) * (1+z2+z2^2)^2 / (9 z2^2), equal to 1 at (1,1). """
    return (ONE + Z1) ** 2 * (ONE + Z2 + Z2 ** 2) ** 2 * _inverse_monomial(1, 2, 36)


def diagonal_directions_factor() -> LaurentPoly:
    """ (2+z2+z1z2+2z1z2^2)(2z1+z2+z1z2+2z2^2) / (36 z1 z2^2), equal to 1 at (1,1). """
    left = 2 * ONE + Z2 + Z1 * Z2 + 2 * Z1 * Z2 ** 2
    right = 2 * Z1 + Z2 + Z1 * Z2 + 2 * Z2 ** 2
    return left * right * _inverse_monomial(1, 2, 36)


def delta_first() -> LaurentPoly:
    """ -(1 - z1^2)^2 / (16 z1^2) """
    return -((ONE - Z1 ** 2) ** 2) * _inverse_monomial(2, 0, 16)


def delta_second() -> LaurentPoly:
    """ -(1 - z2^3)^2 / (27 z2^3) """
    return -((ONE - Z2 ** 3) ** 2) * _inverse_monomial(0, 3, 27)


@lru_cache(maxsize=None)
def _box_symbol(n: int) -> LaurentPoly:
    return 6 * first_directions_factor() ** ((n + 1) // 2) * diagonal_directions_factor() ** (n // 2)


def box_spline_symbol(n: int) -> Mask:
    """
    Box-spline mask B_n = 6 F^ceil(n/2) Q^floor(n/2) with F the factor of the first two
    directions and Q the factor of the two diagonal directions.

    Parameters
    ----------
    n : int
        order, >= 1

    Returns
    -------
    Mask
        the approximating mask, dilation diag(2,3)
    """
    if not isinstance(n, int) or n < 1:
        raise MaskParameterError(f"The box-spline order must be an integer >= 1, got {n}.")
    return Mask(_box_symbol(n), BOX_DILATION, MaskFamily.BOX_SPLINE, n=n, name=f"B_{n}")


def _derivative_at_one(symbol: LaurentPoly, mu: Tuple[int, int]) -> Fraction:
    return symbol.derivative(mu).evaluate((1, 1))


@lru_cache(maxsize=None)
def approx_coefficients(n: int, ell: int) -> Tuple[LaurentPoly, Dict[Tuple[int, int], Fraction]]:
    """
    Symbol of B_{n,l} together with its coefficients c^{(i,j)}.

    Level i adds sum_j c^{(i,j)} B_{n-i} d1^(i-j) d2^j; its i+1 coefficients make all
    derivatives D^{(2(i-j), 2j)} of the partial sum vanish at (1,1).

    Raises
    ------
    MaskParameterError
        if l is not in [0, n-1]
    SingularSystemError
        if a level system is singular
    """
    if not isinstance(n, int) or n < 1:
        raise MaskParameterError(f"The order n must be an integer >= 1, got {n}.")
    if not isinstance(ell, int) or not 0 <= ell <= n - 1:
        raise MaskParameterError(f"The reproduction parameter l must be in [0, {n - 1}], got {ell}.")
    coefficients = {(0, 0): Fraction(1)}
    symbol = _box_symbol(n)
    first, second = delta_first(), delta_second()
    for i in range(1, ell + 1):
        candidates = [_box_symbol(n - i) * first ** (i - j) * second ** j for j in range(i + 1)]
        orders = [(2 * (i - j), 2 * j) for j in range(i + 1)]
        matrix = [[_derivative_at_one(candidate, mu) for candidate in candidates] for mu in orders]
        rhs = [-_derivative_at_one(symbol, mu) for mu in orders]
        solution = exact_linalg.solve(matrix, rhs)
        for j, (value, candidate) in enumerate(zip(solution, candidates)):
            coefficients[(i, j)] = value
            symbol += value * candidate
    return symbol, coefficients


def approx_symbol(n: int, ell: int) -> Mask:
    """
    Approximating mask B_{n,l}: generates polynomials of degree 2n-1 and reproduces
    polynomials of degree 2l+1. B_{n,0} = B_n.
    """
    symbol, _ = approx_coefficients(n, ell)
    return Mask(symbol, BOX_DILATION, MaskFamily.APPROX, n=n, ell=ell, name=f"B_{{{n},{ell}}}")
