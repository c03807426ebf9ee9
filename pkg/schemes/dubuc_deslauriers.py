"""
Univariate (2n)-point Dubuc-Deslauriers interpolatory masks of arity m.
"""

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from schemes.mask import Dilation, Mask, MaskFamily
from symbols.laurent_poly import LaurentPoly
from symbols.rational_tools import pochhammer
from tools.exceptions import MaskParameterError


def _check_parameters(m: int, n: int):
    if not isinstance(m, int) or m < 2:
        raise MaskParameterError(f"The arity m must be an integer >= 2, got {m}.")
    if not isinstance(n, int) or n < 1:
        raise MaskParameterError(f"The order n must be an integer >= 1, got {n}.")


@lru_cache(maxsize=None)
def dd_coefficients(m: int, n: int) -> LaurentPoly:
    """
    Symbol a_{m,n}(z) of the m-ary (2n)-point Dubuc-Deslauriers scheme.

    The coefficient of z^(eps - m*beta), eps = 1..m-1, beta = -n+1..n, is
    (-1)^(beta+n) / ((2n-1)! (eps/m - beta)) * C(2n-1, n-beta) * (-n+1-eps/m)_{2n};
    the coefficient of z^0 is 1 and all other multiples of m vanish.

    Parameters
    ----------
    m : int
        arity, >= 2
    n : int
        half the number of interpolated points, >= 1

    Returns
    -------
    LaurentPoly
        univariate symbol
    """
    _check_parameters(m, n)
    terms = {(0,): Fraction(1)}
    normalization = factorial(2 * n - 1)
    for eps in range(1, m):
        t = Fraction(eps, m)
        rising = pochhammer(-n + 1 - t, 2 * n)
        for beta in range(-n + 1, n + 1):
            sign = -1 if (beta + n) % 2 else 1
            value = sign * comb(2 * n - 1, n - beta) * rising / (normalization * (t - beta))
            terms[(eps - m * beta,)] = value
    return LaurentPoly(terms, 1)


def lagrange_weight(beta: int, t: Fraction, n: int) -> Fraction:
    """
    Fundamental Lagrange polynomial of node beta on the nodes -n+1..n, evaluated at t.
    """
    value = Fraction(1)
    for node in range(-n + 1, n + 1):
        if node != beta:
            value *= (t - node) / Fraction(beta - node)
    return value


def dd_symbol(m: int, n: int) -> Mask:
    """
    Univariate Dubuc-Deslauriers mask a_{m,n} with dilation m.
    """
    return Mask(dd_coefficients(m, n), Dilation(m), MaskFamily.DD1D, n=n, name=f"a_{{{m},{n}}}")
