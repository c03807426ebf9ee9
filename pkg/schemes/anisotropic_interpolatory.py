"""
Bivariate anisotropic interpolatory masks for dilations diag(2, m), m odd.

Two independent constructions are provided:
    1. the tensor-sum formula built from univariate Dubuc-Deslauriers symbols;
    2. the minimal-support construction, solving one exact moment system per coset.
Both produce the same mask.
"""

from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Tuple

from schemes.dubuc_deslauriers import dd_coefficients
from schemes.mask import Dilation, Mask, MaskFamily
from symbols import exact_linalg
from symbols.laurent_poly import LaurentPoly
from tools.exceptions import MaskParameterError

Point = Tuple[int, int]


def _check_order(n: int):
    if not isinstance(n, int) or n < 1:
        raise MaskParameterError(f"The order n must be an integer >= 1, got {n}.")


def diamond_bound(m: int, n: int) -> int:
    """ Right-hand side of the support bound m|a1| + 2|a2| <= 2mn - 2 + m. """
    return 2 * m * n - 2 + m


def in_diamond(alpha: Point, m: int, n: int) -> bool:
    return m * abs(alpha[0]) + 2 * abs(alpha[1]) <= diamond_bound(m, n)


@lru_cache(maxsize=None)
def _tensor_sum_symbol(m: int, n: int) -> LaurentPoly:
    def factor(arity: int, order: int, axis: int) -> LaurentPoly:
        return dd_coefficients(arity, order).lift(axis)

    symbol = LaurentPoly(arity=2)
    for k in range(n):
        symbol += factor(2, n - k, 0) * factor(m, k + 1, 1)
    for k in range(n - 1):
        symbol -= factor(2, n - k - 1, 0) * factor(m, k + 1, 1)
    return symbol


def aniso_interp_symbol(dilation: Dilation, n: int) -> Mask:
    """
    Anisotropic interpolatory mask a_{M,n}:
    sum_{k=0}^{n-1} a_{2,n-k}(z1) a_{m,k+1}(z2) - sum_{k=0}^{n-2} a_{2,n-k-1}(z1) a_{m,k+1}(z2).

    Parameters
    ----------
    dilation : Dilation
        diag(2, m), m odd >= 3
    n : int
        order, >= 1

    Returns
    -------
    Mask
        the interpolatory mask
    """
    dilation.require_anisotropic_pair()
    _check_order(n)
    return Mask(_tensor_sum_symbol(dilation.m2, n), dilation, MaskFamily.ANISO_INTERP, n=n, name=f"a_{{M,{n}}}")


#### MINIMAL SUPPORT CONSTRUCTION ####

def _solve_coset(points: List[Point], weights: List[int], moments: List[Tuple[int, int]]) -> Dict[Point, Fraction]:
    matrix = [[Fraction(w) * Fraction(x1) ** e1 * Fraction(x2) ** e2 for (x1, x2), w in zip(points, weights)]
              for e1, e2 in moments]
    rhs = [Fraction(int(e1 == 0 and e2 == 0)) for e1, e2 in moments]
    solution = exact_linalg.solve(matrix, rhs)
    return dict(zip(points, solution))


def _mixed_coset(k: int, j: int, m: int, n: int) -> Dict[Point, Fraction]:
    # coset (k, j) with j != 0: unknowns folded along the first axis only
    points, weights = [], []
    for a1 in range(n):
        for a2 in range(a1 - n, n - a1):
            x1 = k + 2 * a1
            points.append((x1, j + m * a2))
            weights.append(1 if x1 == 0 else 2)
    moments = [(2 * mu1, mu2) for mu1 in range(n) for mu2 in range(2 * n - 2 * mu1)]
    return _solve_coset(points, weights, moments)


def _odd_even_coset(m: int, n: int) -> Dict[Point, Fraction]:
    # coset (1, 0): unknowns folded along both axes
    points, weights = [], []
    for a1 in range(n):
        for a2 in range(n - a1):
            points.append((1 + 2 * a1, m * a2))
            weights.append(2 * (1 if a2 == 0 else 2))
    moments = [(2 * mu1, 2 * mu2) for mu1 in range(n) for mu2 in range(n - mu1)]
    return _solve_coset(points, weights, moments)


@lru_cache(maxsize=None)
def _minimal_symbol(m: int, n: int) -> LaurentPoly:
    folded: Dict[Point, Fraction] = {(0, 0): Fraction(1)}
    folded.update(_odd_even_coset(m, n))
    for k in (0, 1):
        for j in range(1, (m - 1) // 2 + 1):
            folded.update(_mixed_coset(k, j, m, n))
    terms = {}
    for (x1, x2), value in folded.items():
        for s1 in (1, -1):
            for s2 in (1, -1):
                terms[(s1 * x1, s2 * x2)] = value
    return LaurentPoly(terms, 2)


def minimal_interp_mask(dilation: Dilation, n: int) -> Mask:
    """
    Unique interpolatory mask c_{M,n} supported in the diamond m|a1| + 2|a2| <= 2mn-2+m
    that generates polynomials of degree 2n-1 and is symmetric in both coordinates.

    Each coset of Z^2 / M Z^2 is handled separately: the moments
    sum_{x in coset} c(x) x1^mu1 x2^mu2 must equal the ones of the coset M Z^2
    (i.e. delta_{mu,0}). Symmetry folds the unknowns onto a half (or quarter) plane,
    every folded unknown carrying the number of its mirror images as weight.

    Raises
    ------
    SingularSystemError
        if a coset system is singular
    """
    dilation.require_anisotropic_pair()
    _check_order(n)
    return Mask(_minimal_symbol(dilation.m2, n), dilation, MaskFamily.MINIMAL_INTERP, n=n, name=f"c_{{M,{n}}}")
