"""
Exact verification of subdivision properties: interpolation, polynomial generation
(zero conditions at the points of E_M), polynomial reproduction for the zero shift,
and sum rules.
"""

from dataclasses import asdict, dataclass
from fractions import Fraction
from itertools import product
from typing import Dict, List, Optional, Sequence, Tuple

from schemes.mask import Dilation, Mask
from symbols.cyclotomic import CyclotomicNumber, RootOfUnity
from symbols.laurent_poly import LaurentPoly
from tools import tools
from tools.exceptions import CriteriaMismatchError, UnsupportedReproductionError


@dataclass(frozen=True)
class SchemeReport:
    """
    Outcome of the analysis of one mask.
    """
    mask: str
    family: str
    dilation: str
    is_interpolatory: bool
    generation_degree: int
    reproduction_degree: Optional[int]
    support_box: Tuple[Tuple[int, int], ...]
    symmetric: bool
    coefficient_sum: str
    nonzeros: int

    def to_dict(self) -> Dict:
        result = asdict(self)
        result["support_box"] = [list(bounds) for bounds in self.support_box]
        return result


def em_points(dilation: Dilation, include_one: bool = False) -> List[Tuple[RootOfUnity, ...]]:
    """
    The points exp(-2 pi i gamma_k / m_k) for all coset representatives gamma.
    """
    points = []
    for gamma in dilation.cosets():
        if not include_one and not any(gamma):
            continue
        points.append(tuple(RootOfUnity(g, m) for g, m in zip(gamma, dilation.factors)))
    return points


def _multi_indices(order: int, arity: int):
    """ All mu with |mu| == order. """
    if arity == 1:
        return [(order,)]
    return [(order - k, k) for k in range(order + 1)]


def _degree_bound(mask: Mask) -> int:
    if mask.n is not None:
        return 2 * mask.n + 2
    return sum(high - low for low, high in mask.support_box()) + 2


def _vanishes(symbol: LaurentPoly, order: int, points) -> bool:
    for mu in _multi_indices(order, symbol.arity):
        derivative = symbol.derivative(mu)
        if any(not derivative.evaluate_at_roots(point).is_zero() for point in points):
            return False
    return True


#### INTERPOLATION ####

def em_sum_criterion(mask: Mask) -> bool:
    """
    Checks sum_{xi in E_M} p(xi z) = |det M| as a polynomial identity, exactly.
    The coefficient of z^alpha on the left is p(alpha) times the character sum over E_M.
    """
    points = em_points(mask.dilation, include_one=True)
    det = mask.dilation.det
    origin = (0,) * mask.dilation.arity
    for alpha, coefficient in mask.symbol.terms.items():
        monomial = LaurentPoly.monomial(alpha)
        character_sum = CyclotomicNumber.rational(0)
        for point in points:
            character_sum = character_sum + monomial.evaluate_at_roots(point)
        expected = det if alpha == origin else 0
        if not (coefficient * character_sum - expected).is_zero():
            return False
    if mask.coefficient(origin) == 0:
        return False
    return True


def check_interpolatory(mask: Mask) -> bool:
    """
    True iff p(0) = 1 and p(M alpha) = 0 for every alpha != 0.
    The E_M-sum criterion is evaluated as well and must agree.

    Raises
    ------
    CriteriaMismatchError
        if the two criteria disagree
    """
    factors = mask.dilation.factors
    origin = (0,) * len(factors)
    result = mask.coefficient(origin) == 1
    if result:
        for alpha in mask.support():
            if alpha != origin and all(a % m == 0 for a, m in zip(alpha, factors)):
                result = False
                break
    if result != em_sum_criterion(mask):
        raise CriteriaMismatchError(f"Coefficient and E_M-sum interpolation criteria disagree for '{mask.label}'.")
    return result


#### GENERATION AND REPRODUCTION ####

def generation_degree(mask: Mask, bound: Optional[int] = None) -> int:
    """
    Largest n such that D^mu p(eps) = 0 for every eps in E_M without 1 and every |mu| <= n.

    Returns
    -------
    int
        the degree, -1 if p itself does not vanish on E_M without 1
    """
    bound = _degree_bound(mask) if bound is None else bound
    points = em_points(mask.dilation)
    degree = -1
    for order in range(bound + 1):
        if not _vanishes(mask.symbol, order, points):
            break
        degree = order
    if degree == bound:
        tools.print_warning_message(f"Generation degree of '{mask.label}' reached the search bound {bound}.")
    return degree


def reproduction_degree(mask: Mask, bound: Optional[int] = None) -> int:
    """
    Reproduction degree for the zero shift parameter: the generation conditions hold,
    p(1) = |det M| and D^mu p(1) = 0 for 1 <= |mu| <= n.

    Raises
    ------
    UnsupportedReproductionError
        for masks that are neither interpolatory nor symmetric
    """
    if not (mask.is_symmetric() or check_interpolatory(mask)):
        raise UnsupportedReproductionError(f"Mask '{mask.label}' is neither symmetric nor interpolatory.")
    generation = generation_degree(mask, bound)
    one = [tuple(RootOfUnity(0, m) for m in mask.dilation.factors)]
    if generation < 0 or mask.coefficient_sum() != mask.dilation.det:
        return -1
    degree = 0
    for order in range(1, generation + 1):
        if not _vanishes(mask.symbol, order, one):
            break
        degree = order
    return degree


#### SUM RULES ####

def coset_moments(mask: Mask, exponents: Sequence[Tuple[int, ...]]) -> Dict[Tuple[int, ...], Dict[Tuple[int, ...], Fraction]]:
    """
    For every coset gamma, the moments sum_{x = gamma mod M} p(x) x^mu.
    """
    factors = mask.dilation.factors
    moments = {gamma: {mu: Fraction(0) for mu in exponents} for gamma in mask.dilation.cosets()}
    for x, coefficient in mask.symbol.terms.items():
        gamma = tuple(a % m for a, m in zip(x, factors))
        for mu in exponents:
            value = coefficient
            for a, e in zip(x, mu):
                value *= Fraction(a) ** e
            moments[gamma][mu] += value
    return moments


def check_sum_rules(mask: Mask, order: int) -> bool:
    """
    Sum rules of the given order: all cosets share the moments of total degree < order.
    """
    if order < 1:
        raise ValueError(f"The sum rule order must be >= 1, got {order}.")
    arity = mask.dilation.arity
    exponents = [mu for mu in product(range(order), repeat=arity) if sum(mu) < order]
    moments = coset_moments(mask, exponents)
    reference = moments[(0,) * arity]
    return all(values == reference for values in moments.values())


#### REPORT ####

def analyze_mask(mask: Mask, bound: Optional[int] = None) -> SchemeReport:
    """
    Collects all properties of a mask into a SchemeReport; `bound` caps the degree searches.
    """
    tools.print_info_message(f"Analyzing mask '{mask.label}' ({mask.dilation}, {mask.nonzero_count()} nonzeros)...", 2)
    interpolatory = check_interpolatory(mask)
    generation = generation_degree(mask, bound)
    try:
        reproduction = reproduction_degree(mask, bound)
    except UnsupportedReproductionError as exception:
        tools.print_warning_message(str(exception))
        reproduction = None
    return SchemeReport(mask=mask.label, family=str(mask.family), dilation=str(mask.dilation),
                        is_interpolatory=interpolatory, generation_degree=generation, reproduction_degree=reproduction,
                        support_box=mask.support_box(), symmetric=mask.is_symmetric(),
                        coefficient_sum=str(mask.coefficient_sum()), nonzeros=mask.nonzero_count())
