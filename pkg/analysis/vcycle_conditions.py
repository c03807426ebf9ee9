"""
Premises of the V-cycle optimality result for a grid transfer built from a mask:
    (i)  the trigonometric symbol vanishes with order 2q at every mirror point,
    (ii) p(1) = |det M|.
Condition (i) follows from generation degree >= 2q-1; it is also checked numerically.
"""

from dataclasses import dataclass
from typing import Dict, Sequence, Tuple

import numpy as np

from analysis.scheme_analyzer import generation_degree
from schemes.mask import Mask

DEFAULT_RADII = (1e-1, 1e-2, 1e-3)
_DIRECTIONS = ((1.0, 0.0), (0.0, 1.0), (np.cos(0.3), np.sin(0.3)), (np.cos(2.0), np.sin(2.0)))


@dataclass(frozen=True)
class GateResult:
    generation_degree: int
    required_degree: int
    normalized: bool

    @property
    def passed(self) -> bool:
        return self.generation_degree >= self.required_degree and self.normalized


def vcycle_gate(mask: Mask, q: int = 1) -> GateResult:
    """
    Checks generation degree >= 2q - 1 and p(1) = |det M|.
    """
    return GateResult(generation_degree(mask), 2 * q - 1, mask.coefficient_sum() == mask.dilation.det)


def trigonometric_symbol(mask: Mask, x: np.ndarray) -> np.ndarray:
    """
    p(x) = sum_alpha p(alpha) exp(i alpha . x) for points x of shape (..., d).
    """
    exponents = np.array(mask.support(), dtype=float)
    coefficients = np.array([float(c) for c in mask.symbol.terms.values()])
    phases = np.tensordot(np.asarray(x, dtype=float), exponents.T, axes=1)
    return np.exp(1j * phases) @ coefficients


def mirror_points(mask: Mask) -> Sequence[Tuple[float, ...]]:
    """ 2 pi gamma / m for all nonzero coset representatives gamma. """
    factors = mask.dilation.factors
    return [tuple(2 * np.pi * g / m for g, m in zip(gamma, factors)) for gamma in mask.dilation.cosets() if any(gamma)]


def mirror_decay_orders(mask: Mask, radii: Sequence[float] = DEFAULT_RADII) -> Dict[Tuple[float, ...], float]:
    """
    Fits the decay order of |p(x + y)| as ||x|| -> 0 for every mirror point y.

    Returns
    -------
    Dict[Tuple[float, ...], float]
        mirror point -> fitted order (inf when the symbol vanishes identically near y)
    """
    arity = mask.dilation.arity
    directions = np.array([d[:arity] for d in _DIRECTIONS]) if arity == 2 else np.array([[1.0]])
    directions /= np.linalg.norm(directions, axis=1, keepdims=True)
    log_radii = np.log(np.asarray(radii))
    orders = {}
    for point in mirror_points(mask):
        samples = np.array(point)[None, None, :] + np.asarray(radii)[:, None, None] * directions[None, :, :]
        magnitudes = np.abs(trigonometric_symbol(mask, samples)).max(axis=1)
        if np.all(magnitudes < 1e-300):
            orders[point] = np.inf
            continue
        slope, _ = np.polyfit(log_radii, np.log(np.maximum(magnitudes, 1e-300)), 1)
        orders[point] = float(slope)
    return orders
