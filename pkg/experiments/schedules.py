"""
Level schedules of the V-cycle: uniform coarsening by a fixed dilation, and the mixed
strategy that coarsens by (2, m) for h levels and by (2, 2) afterwards.
"""

from typing import Optional, Tuple

from experiments.problems import mesh_sizes, system_stencil
from multigrid.stencil import Dims, Stencil
from multigrid.transfer import Shift
from multigrid.vcycle import Level, LevelPlan
from schemes.reference_masks import bilinear_mask
from tools.exceptions import PlanError


def factor_exponent(size: int, factor: int) -> Optional[int]:
    """ k with size = factor^k - 1, None if there is none. """
    k, power = 0, 1
    while power - 1 < size:
        power *= factor
        k += 1
    return k if power - 1 == size else None


def effective_anisotropy(dims: Dims, eps: float) -> float:
    """ eps_j = eps (h2 / h1)^2: the anisotropy seen by the rescaled level operator. """
    h1, h2 = mesh_sizes(dims)
    return eps * (h2 / h1) ** 2


def _level(dims: Dims, eps: float, transfer: Optional[Stencil], factors, smoothing: Tuple[int, int],
           shift: Shift, transfer_name: str) -> Level:
    return Level(dims=dims, system=system_stencil(dims, eps), transfer=transfer, factors=factors,
                 pre_smoothing=smoothing[0], post_smoothing=smoothing[1], shift=shift,
                 anisotropy=effective_anisotropy(dims, eps), transfer_name=transfer_name)


def _smoothing(index: int, smoothing: Tuple[int, int], first_level_smoothing: Optional[Tuple[int, int]]):
    return first_level_smoothing if index == 0 and first_level_smoothing else smoothing


def uniform_schedule(n0: Dims, factors: Tuple[int, int], transfer: Stencil, eps: float = 1.0,
                     levels: Optional[int] = None, smoothing: Tuple[int, int] = (1, 1),
                     first_level_smoothing: Optional[Tuple[int, int]] = None, shift: Shift = 0,
                     sweep_order: str = "forward", transfer_name: str = "") -> LevelPlan:
    """
    Grids n_j = (m1^(k1-j) - 1, m2^(k2-j) - 1), j = 0..l, with l = min(k1, k2) - 1 unless given.

    Raises
    ------
    PlanError
        if n0 is not of the form (m1^k1 - 1, m2^k2 - 1) or l is too large
    """
    exponents = [factor_exponent(n, m) for n, m in zip(n0, factors)]
    if None in exponents:
        raise PlanError(f"Starting grid {n0} is not of the form (m1^k1 - 1, m2^k2 - 1) for factors {factors}.")
    full_length = min(exponents) - 1
    depth = full_length if levels is None else levels
    if not 0 <= depth <= full_length:
        raise PlanError(f"A schedule of {depth} coarsenings does not fit the grid {n0} (at most {full_length}).")
    plan = []
    for j in range(depth + 1):
        dims = tuple(m ** (k - j) - 1 for m, k in zip(factors, exponents))
        last = j == depth
        plan.append(_level(dims, eps, None if last else transfer, None if last else tuple(factors),
                           _smoothing(j, smoothing, first_level_smoothing), shift, transfer_name))
    return LevelPlan(tuple(plan), sweep_order)


def mixed_starting_grid(k1: int, m: int, h: int) -> Tuple[Dims, int]:
    """
    Largest admissible n0 = (2^k1 - 1, m^h 2^k2 - 1) with second size not above the first.

    Returns
    -------
    Tuple[Dims, int]
        n0 and k2
    """
    k2 = 0
    while m ** h * 2 ** (k2 + 1) - 1 <= 2 ** k1 - 1:
        k2 += 1
    if m ** h * 2 ** k2 - 1 < 1:
        raise PlanError(f"No admissible starting grid for k1={k1}, m={m}, h={h}.")
    return (2 ** k1 - 1, m ** h * 2 ** k2 - 1), k2


def mixed_schedule(n0: Dims, m: int, h: int, transfer: Stencil, eps: float = 1.0,
                   smoothing: Tuple[int, int] = (1, 1), first_level_smoothing: Optional[Tuple[int, int]] = None,
                   shift: Shift = 0, sweep_order: str = "forward", transfer_name: str = "") -> LevelPlan:
    """
    Coarsens n0 = (2^k1 - 1, m^h 2^k2 - 1) by (2, m) with the given transfer for the first h
    levels, then by (2, 2) with the bilinear transfer, l = min(k1, h + k2) - 1.

    Raises
    ------
    PlanError
        if n0 does not factor as required
    """
    if h < 0:
        raise PlanError(f"The number of anisotropic levels must be >= 0, got {h}.")
    k1 = factor_exponent(n0[0], 2)
    quotient, remainder = divmod(n0[1] + 1, m ** h)
    k2 = factor_exponent(quotient - 1, 2) if not remainder else None
    if k1 is None or k2 is None:
        raise PlanError(f"Starting grid {n0} is not of the form (2^k1 - 1, {m}^{h} 2^k2 - 1).")
    depth = min(k1, h + k2) - 1
    if depth < 0:
        raise PlanError(f"Starting grid {n0} is too small for a V-cycle.")
    bilinear = Stencil.from_mask(bilinear_mask())
    plan = []
    for j in range(depth + 1):
        if j <= h:
            dims = (2 ** (k1 - j) - 1, m ** (h - j) * 2 ** k2 - 1)
        else:
            dims = (2 ** (k1 - j) - 1, 2 ** (k2 - (j - h)) - 1)
        if j == depth:
            level_transfer, factors, name = None, None, ""
        elif j < h:
            level_transfer, factors, name = transfer, (2, m), transfer_name
        else:
            level_transfer, factors, name = bilinear, (2, 2), "P1"
        plan.append(_level(dims, eps, level_transfer, factors, _smoothing(j, smoothing, first_level_smoothing), shift, name))
    return LevelPlan(tuple(plan), sweep_order)
