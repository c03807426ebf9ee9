"""
Dilation matrices and subdivision masks.
"""

from dataclasses import dataclass, field
import enum
from fractions import Fraction
from itertools import product
from typing import Dict, List, Optional, Tuple

from symbols.laurent_poly import LaurentPoly
from tools.exceptions import ArityMismatchError, FileFormatError, MaskParameterError


@dataclass(frozen=True)
class Dilation:
    """
    Diagonal dilation matrix diag(m1, m2); univariate when m2 is None.
    """
    m1: int
    m2: Optional[int] = None

    def __post_init__(self):
        for factor in self.factors:
            if not isinstance(factor, int) or factor < 2:
                raise MaskParameterError(f"Dilation factors must be integers >= 2, got {self.factors}.")

    @property
    def factors(self) -> Tuple[int, ...]:
        return (self.m1,) if self.m2 is None else (self.m1, self.m2)

    @property
    def arity(self) -> int:
        return len(self.factors)

    @property
    def det(self) -> int:
        result = 1
        for factor in self.factors:
            result *= factor
        return result

    def is_anisotropic_pair(self) -> bool:
        """ diag(2, m) with m odd and >= 3. """
        return self.m1 == 2 and self.m2 is not None and self.m2 >= 3 and self.m2 % 2 == 1

    def require_anisotropic_pair(self):
        if not self.is_anisotropic_pair():
            raise MaskParameterError(f"The construction requires diag(2, m) with m odd >= 3, got {self}.")

    def cosets(self) -> List[Tuple[int, ...]]:
        """ Coset representatives {0..m1-1} x {0..m2-1}, lexicographically sorted. """
        return list(product(*(range(m) for m in self.factors)))

    def apply(self, point: Tuple[int, ...]) -> Tuple[int, ...]:
        return tuple(m * x for m, x in zip(self.factors, point))

    def __str__(self):
        return f"diag({','.join(str(m) for m in self.factors)})"


class MaskFamily(enum.Enum):
    """
    Origin of a mask.

    Parameters
    ----------
    enum : enum.Enum
        base enum class
    """
    DD1D = "dd"
    ANISO_INTERP = "interp"
    MINIMAL_INTERP = "minimal"
    BOX_SPLINE = "box"
    APPROX = "approx"
    REFERENCE = "reference"
    EXTERNAL = "external"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class Mask:
    """
    A subdivision mask: its symbol, the dilation it refines with and the family it comes from.
    """
    symbol: LaurentPoly
    dilation: Dilation
    family: MaskFamily = MaskFamily.EXTERNAL
    n: Optional[int] = None
    ell: Optional[int] = None
    name: str = field(default="", compare=False)

    def __post_init__(self):
        if self.symbol.arity != self.dilation.arity:
            raise ArityMismatchError(f"A symbol of arity {self.symbol.arity} cannot refine with {self.dilation}.")

    @property
    def label(self) -> str:
        return self.name or f"{self.family}(n={self.n},l={self.ell})"

    def coefficient(self, alpha) -> Fraction:
        return self.symbol.coefficient(alpha)

    def support(self):
        return self.symbol.support()

    def support_box(self):
        return self.symbol.support_box()

    def coefficient_sum(self) -> Fraction:
        return self.symbol.coefficient_sum()

    def nonzero_count(self) -> int:
        return self.symbol.nonzero_count()

    def is_symmetric(self) -> bool:
        return self.symbol.is_symmetric()

    def to_matrix(self) -> Tuple[List[List[Fraction]], Tuple[int, ...]]:
        """
        Dense coefficient matrix over the support box: rows follow the first exponent
        (ascending), columns the second one (ascending). Univariate masks give a single row.

        Returns
        -------
        Tuple[List[List[Fraction]], Tuple[int, ...]]
            the matrix and the exponent of its top-left entry
        """
        box = self.support_box()
        if self.dilation.arity == 1:
            (low, high), = box
            return [[self.coefficient((k,)) for k in range(low, high + 1)]], (low,)
        (low1, high1), (low2, high2) = box
        matrix = [[self.coefficient((a1, a2)) for a2 in range(low2, high2 + 1)] for a1 in range(low1, high1 + 1)]
        return matrix, (low1, low2)

    def to_json(self) -> Dict:
        return {
            "name": self.name,
            "family": self.family.value,
            "dilation": list(self.dilation.factors),
            "n": self.n,
            "ell": self.ell,
            "terms": self.symbol.to_json(),
        }

    @classmethod
    def from_json(cls, content, dilation: Optional[Dilation] = None) -> "Mask":
        """
        Builds a mask from the object written by `to_json`, or from a bare term list
        when the dilation is given separately.
        """
        if isinstance(content, list):
            if dilation is None:
                raise FileFormatError("A bare term list needs an explicit dilation.")
            symbol = LaurentPoly.from_json(content, dilation.arity)
            return cls(symbol, dilation, MaskFamily.EXTERNAL, name="external")
        try:
            factors = content.get("dilation") or (dilation.factors if dilation else None)
            if not factors:
                raise FileFormatError("The mask file does not define a dilation.")
            file_dilation = Dilation(*[int(f) for f in factors])
            symbol = LaurentPoly.from_json(content["terms"], file_dilation.arity)
            family = MaskFamily(content.get("family", MaskFamily.EXTERNAL.value))
        except (KeyError, ValueError, TypeError) as exception:
            raise FileFormatError(f"Invalid mask description: {exception}") from exception
        return cls(symbol, file_dilation, family, content.get("n"), content.get("ell"), content.get("name") or "external")
