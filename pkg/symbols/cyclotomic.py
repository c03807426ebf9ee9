"""
Exact arithmetic in cyclotomic fields Q(zeta_L), zeta_L = exp(-2*pi*i/L).

Elements are stored as rational coefficient vectors in the power basis
1, zeta, ..., zeta^(phi(L)-1): polynomials in zeta reduced modulo the L-th
cyclotomic polynomial with sympy. This makes zero tests at roots of unity exact.
"""

import cmath
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Dict, NamedTuple, Sequence, Tuple

from sympy import QQ, Poly, Symbol, cyclotomic_poly

ZETA = Symbol("zeta")


class RootOfUnity(NamedTuple):
    """
    The root of unity exp(-2*pi*i*numerator/order).
    """
    numerator: int
    order: int

    def to_complex(self) -> complex:
        return cmath.exp(-2j * cmath.pi * self.numerator / self.order)


def lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


@lru_cache(maxsize=None)
def _modulus(order: int) -> Poly:
    if order < 1:
        raise ValueError(f"Invalid cyclotomic order {order}.")
    return Poly(cyclotomic_poly(order, ZETA), ZETA, domain=QQ)


@lru_cache(maxsize=None)
def cyclotomic_polynomial(order: int) -> Tuple[int, ...]:
    """
    Integer coefficients of the order-th cyclotomic polynomial, lowest degree first.

    Parameters
    ----------
    order : int
        order of the primitive roots, >= 1

    Returns
    -------
    Tuple[int, ...]
        coefficients
    """
    return tuple(int(c) for c in reversed(_modulus(order).all_coeffs()))


def _to_poly(coefficients: Sequence[Fraction]) -> Poly:
    # lowest degree first
    highest_first = [QQ(c.numerator, c.denominator) for c in reversed(coefficients)] or [QQ(0)]
    return Poly.from_list(highest_first, ZETA, domain=QQ)


def _reduced(order: int, polynomial: Poly) -> Tuple[Fraction, ...]:
    remainder = polynomial.rem(_modulus(order))
    degree = _modulus(order).degree()
    coefficients = [Fraction(int(c.p), int(c.q)) for c in reversed(remainder.all_coeffs())]
    return tuple(coefficients[:degree] + [Fraction(0)] * (degree - len(coefficients)))


class CyclotomicNumber:
    """
    An element of Q(zeta_L). Immutable.
    """

    __slots__ = ("_order", "_coefficients")

    def __init__(self, order: int, coefficients):
        """
        Constructor. The coefficients must already be reduced
        (at most phi(order) entries); use `from_powers` otherwise.
        """
        degree = len(cyclotomic_polynomial(order)) - 1
        coefficients = [Fraction(c) for c in coefficients]
        if len(coefficients) > degree:
            raise ValueError("Coefficient vector is not reduced.")
        coefficients += [Fraction(0)] * (degree - len(coefficients))
        self._order = order
        self._coefficients = tuple(coefficients)

    @classmethod
    def from_powers(cls, order: int, powers: Dict[int, Fraction]) -> "CyclotomicNumber":
        """
        Builds sum_k powers[k] * zeta_order^k, reducing exponents modulo order
        and the result modulo the cyclotomic polynomial.
        """
        dense = [Fraction(0)] * order
        for exponent, coefficient in powers.items():
            dense[exponent % order] += Fraction(coefficient)
        return cls(order, _reduced(order, _to_poly(dense)))

    @classmethod
    def rational(cls, value, order: int = 1) -> "CyclotomicNumber":
        return cls.from_powers(order, {0: Fraction(value)})

    @property
    def order(self) -> int:
        return self._order

    @property
    def coefficients(self) -> Tuple[Fraction, ...]:
        return self._coefficients

    def lift(self, order: int) -> "CyclotomicNumber":
        """
        Re-expresses the number in Q(zeta_order); order must be a multiple of the current order.
        """
        if order % self._order:
            raise ValueError(f"Cannot lift from order {self._order} to order {order}.")
        step = order // self._order
        return CyclotomicNumber.from_powers(order, {k * step: c for k, c in enumerate(self._coefficients) if c})

    def _aligned(self, other: "CyclotomicNumber"):
        if not isinstance(other, CyclotomicNumber):
            other = CyclotomicNumber.rational(other, self._order)
        common = lcm(self._order, other.order)
        left = self if self._order == common else self.lift(common)
        right = other if other.order == common else other.lift(common)
        return left, right, common

    def __add__(self, other):
        left, right, common = self._aligned(other)
        return CyclotomicNumber(common, [a + b for a, b in zip(left.coefficients, right.coefficients)])

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicNumber(self._order, [-c for c in self._coefficients])

    def __sub__(self, other):
        return self + (-other if isinstance(other, CyclotomicNumber) else -Fraction(other))

    def __mul__(self, other):
        left, right, common = self._aligned(other)
        return CyclotomicNumber(common, _reduced(common, _to_poly(left.coefficients) * _to_poly(right.coefficients)))

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not any(self._coefficients)

    def is_rational(self) -> bool:
        return not any(self._coefficients[1:])

    def to_complex(self) -> complex:
        zeta = cmath.exp(-2j * cmath.pi / self._order)
        return sum((float(c) * zeta ** k for k, c in enumerate(self._coefficients)), 0j)

    def __eq__(self, other):
        if not isinstance(other, CyclotomicNumber):
            try:
                other = CyclotomicNumber.rational(Fraction(other), self._order)
            except (TypeError, ValueError):
                return NotImplemented
        return (self - other).is_zero()

    __hash__ = None

    def __repr__(self):
        terms = [f"{c}*zeta{self._order}^{k}" for k, c in enumerate(self._coefficients) if c]
        return " + ".join(terms) if terms else "0"
