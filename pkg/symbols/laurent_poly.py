"""
Sparse univariate and bivariate Laurent polynomials with exact rational coefficients.
They represent masks and their symbols.
"""

from fractions import Fraction
from functools import reduce
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from symbols.cyclotomic import CyclotomicNumber, RootOfUnity, lcm
from symbols.rational_tools import falling_factorial, render_rational, to_rational
from tools.exceptions import ArityMismatchError, FileFormatError

Exponent = Tuple[int, ...]


class LaurentPoly:
    """
    Immutable sparse Laurent polynomial in 1 or 2 variables.
    Zero coefficients are never stored; terms are kept sorted lexicographically by exponent.
    """

    __slots__ = ("_arity", "_terms")

    def __init__(self, terms: Optional[Mapping[Sequence[int], object]] = None, arity: int = 2):
        """
        Constructor

        Parameters
        ----------
        terms : Mapping[Sequence[int], object], optional
            map exponent vector -> coefficient (int, Fraction or 'num/den')
        arity : int, optional
            number of variables, 1 or 2, by default 2
        """
        if arity not in (1, 2):
            raise ArityMismatchError(f"Only univariate and bivariate polynomials are supported, got arity {arity}.")
        accumulated: Dict[Exponent, Fraction] = {}
        for exponent, coefficient in (terms or {}).items():
            exponent = (exponent,) if isinstance(exponent, int) else tuple(int(e) for e in exponent)
            if len(exponent) != arity:
                raise ArityMismatchError(f"Exponent {exponent} does not have {arity} components.")
            accumulated[exponent] = accumulated.get(exponent, Fraction(0)) + to_rational(coefficient)
        self._arity = arity
        self._terms = {e: accumulated[e] for e in sorted(accumulated) if accumulated[e] != 0}

    #### CONSTRUCTION HELPERS ####

    @classmethod
    def constant(cls, value, arity: int = 2) -> "LaurentPoly":
        return cls({(0,) * arity: value}, arity)

    @classmethod
    def monomial(cls, exponent: Sequence[int], coefficient=1) -> "LaurentPoly":
        exponent = tuple(exponent)
        return cls({exponent: coefficient}, len(exponent))

    @classmethod
    def variable(cls, index: int, arity: int = 2) -> "LaurentPoly":
        """ The polynomial z_{index+1} (0-based index). """
        exponent = [0] * arity
        exponent[index] = 1
        return cls.monomial(exponent)

    @classmethod
    def from_coefficients(cls, coefficients: Sequence, offset: int = 0) -> "LaurentPoly":
        """ Univariate polynomial sum_k coefficients[k] z^(k + offset). """
        return cls({(k + offset,): c for k, c in enumerate(coefficients)}, 1)

    @classmethod
    def from_json(cls, items: Iterable[Mapping], arity: Optional[int] = None) -> "LaurentPoly":
        """
        Reads the list of {exp: [...], num: str, den: str} objects produced by `to_json`.
        """
        terms: Dict[Exponent, Fraction] = {}
        try:
            for item in items:
                exponent = tuple(int(e) for e in item["exp"])
                value = Fraction(int(item["num"]), int(item["den"]))
                terms[exponent] = terms.get(exponent, Fraction(0)) + value
        except (KeyError, TypeError, ValueError, ZeroDivisionError) as exception:
            raise FileFormatError(f"Invalid polynomial term list: {exception}") from exception
        if arity is None:
            arity = len(next(iter(terms))) if terms else 2
        return cls(terms, arity)

    #### ACCESSORS ####

    @property
    def arity(self) -> int:
        return self._arity

    @property
    def terms(self) -> Dict[Exponent, Fraction]:
        return dict(self._terms)

    def coefficient(self, exponent: Sequence[int]) -> Fraction:
        if isinstance(exponent, int):
            exponent = (exponent,)
        return self._terms.get(tuple(exponent), Fraction(0))

    def support(self) -> List[Exponent]:
        return list(self._terms)

    def support_box(self) -> Tuple[Tuple[int, int], ...]:
        """ Per-variable (min, max) exponent; ((0, 0), ...) for the zero polynomial. """
        if not self._terms:
            return tuple((0, 0) for _ in range(self._arity))
        return tuple((min(e[i] for e in self._terms), max(e[i] for e in self._terms)) for i in range(self._arity))

    def is_zero(self) -> bool:
        return not self._terms

    def nonzero_count(self) -> int:
        return len(self._terms)

    def coefficient_sum(self) -> Fraction:
        return sum(self._terms.values(), Fraction(0))

    #### ARITHMETIC ####

    def _check_arity(self, other: "LaurentPoly"):
        if other.arity != self._arity:
            raise ArityMismatchError(f"Cannot combine polynomials of arity {self._arity} and {other.arity}.")

    def _coerce(self, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            self._check_arity(other)
            return other
        return LaurentPoly.constant(to_rational(other), self._arity)

    def __add__(self, other):
        other = self._coerce(other)
        terms = dict(self._terms)
        for exponent, coefficient in other._terms.items():
            terms[exponent] = terms.get(exponent, Fraction(0)) + coefficient
        return LaurentPoly(terms, self._arity)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self._terms.items()}, self._arity)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        terms: Dict[Exponent, Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                exponent = tuple(a + b for a, b in zip(e1, e2))
                terms[exponent] = terms.get(exponent, Fraction(0)) + c1 * c2
        return LaurentPoly(terms, self._arity)

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        scalar = to_rational(scalar)
        return LaurentPoly({e: c / scalar for e, c in self._terms.items()}, self._arity)

    def __pow__(self, power: int):
        if power < 0:
            if len(self._terms) != 1:
                raise ValueError("Negative powers are only defined for monomials.")
            (exponent, coefficient), = self._terms.items()
            return LaurentPoly({tuple(-power * e for e in exponent): Fraction(1) / coefficient ** -power}, self._arity)
        result = LaurentPoly.constant(1, self._arity)
        base = self
        while power:
            if power & 1:
                result = result * base
            base = base * base
            power >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self._arity == other._arity and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self == LaurentPoly.constant(other, self._arity)
        return NotImplemented

    def __hash__(self):
        return hash((self._arity, tuple(self._terms.items())))

    #### TRANSFORMATIONS ####

    def lift(self, axis: int, arity: int = 2) -> "LaurentPoly":
        """
        Embeds a univariate polynomial as a polynomial in variable z_{axis+1} of a
        multivariate ring (tensor lift).
        """
        if self._arity != 1:
            raise ArityMismatchError("Only univariate polynomials can be lifted.")
        terms = {}
        for (power,), coefficient in self._terms.items():
            exponent = [0] * arity
            exponent[axis] = power
            terms[tuple(exponent)] = coefficient
        return LaurentPoly(terms, arity)

    def derivative(self, mu: Sequence[int]) -> "LaurentPoly":
        """
        Formal partial derivative D^mu with respect to the complex variables.
        """
        mu = (mu,) if isinstance(mu, int) else tuple(mu)
        if len(mu) != self._arity:
            raise ArityMismatchError(f"Derivative order {mu} does not match arity {self._arity}.")
        if any(m < 0 for m in mu):
            raise ValueError(f"Derivative orders must be non-negative, got {mu}.")
        terms = {}
        for exponent, coefficient in self._terms.items():
            factor = reduce(lambda acc, pair: acc * falling_factorial(Fraction(pair[0]), pair[1]), zip(exponent, mu), Fraction(1))
            if factor:
                terms[tuple(e - m for e, m in zip(exponent, mu))] = coefficient * factor
        return LaurentPoly(terms, self._arity)

    def reflect(self, axes: Optional[Sequence[int]] = None) -> "LaurentPoly":
        """ Substitutes z_i -> 1/z_i for the given axes (all by default). """
        axes = range(self._arity) if axes is None else axes
        terms = {}
        for exponent, coefficient in self._terms.items():
            exponent = list(exponent)
            for axis in axes:
                exponent[axis] = -exponent[axis]
            terms[tuple(exponent)] = coefficient
        return LaurentPoly(terms, self._arity)

    def is_symmetric(self) -> bool:
        """ Invariance under z -> 1/z, i.e. p(alpha) = p(-alpha). """
        return self.reflect() == self

    def is_fully_symmetric(self) -> bool:
        """ Invariance under every sign change of the exponent components. """
        return all(self.reflect([axis]) == self for axis in range(self._arity))

    #### EVALUATION ####

    def evaluate(self, point: Sequence) -> Fraction:
        """ Exact evaluation at a point with nonzero rational coordinates. """
        point = [to_rational(x) for x in point]
        if len(point) != self._arity:
            raise ArityMismatchError(f"Point {point} does not have {self._arity} coordinates.")
        total = Fraction(0)
        for exponent, coefficient in self._terms.items():
            value = coefficient
            for x, e in zip(point, exponent):
                value *= x ** e
            total += value
        return total

    def evaluate_at_roots(self, roots: Sequence[RootOfUnity]) -> CyclotomicNumber:
        """
        Exact evaluation at a vector of roots of unity, in Q(zeta_L) with L the
        least common multiple of the orders.
        """
        if len(roots) != self._arity:
            raise ArityMismatchError(f"Point {roots} does not have {self._arity} coordinates.")
        order = reduce(lcm, (root.order for root in roots), 1)
        steps = [root.numerator * (order // root.order) for root in roots]
        powers: Dict[int, Fraction] = {}
        for exponent, coefficient in self._terms.items():
            power = sum(e * s for e, s in zip(exponent, steps)) % order
            powers[power] = powers.get(power, Fraction(0)) + coefficient
        return CyclotomicNumber.from_powers(order, powers)

    #### RENDERING ####

    def to_json(self) -> List[Dict]:
        return [{"exp": list(exponent), "num": str(c.numerator), "den": str(c.denominator)} for exponent, c in self._terms.items()]

    def render(self) -> str:
        """ Renders the polynomial as 'coeff * z1^a * z2^b' terms. """
        if not self._terms:
            return "0"
        names = ["z"] if self._arity == 1 else ["z1", "z2"]
        rendered = []
        for exponent, coefficient in self._terms.items():
            factors = [render_rational(coefficient)]
            factors += [f"{name}^{power}" for name, power in zip(names, exponent) if power != 0]
            rendered.append(" * ".join(factors))
        return " + ".join(rendered)

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"LaurentPoly({self.render()!r}, arity={self._arity})"
