"""
Covering set of the attractor K = { sum_j M^-j alpha_j : alpha_j in supp p } by unit cells.
"""

from math import ceil, floor
from itertools import product
from typing import List, Sequence, Tuple

import numpy as np

from schemes.mask import Mask

Point = Tuple[int, ...]


def _candidate_cells(mask: Mask) -> List[Point]:
    ranges = []
    for (low, high), m in zip(mask.support_box(), mask.dilation.factors):
        first = floor(low / (m - 1))
        last = max(first, ceil(high / (m - 1)) - 1)
        ranges.append(range(first, last + 1))
    return list(product(*ranges))


def compute_omega(mask: Mask) -> List[Point]:
    """
    Smallest set of integer cells omega whose unit squares omega + [0,1)^d cover K.

    A cell survives when its image M(omega + [0,1)^d), i.e. the cells M omega + gamma,
    meets a translate alpha + (omega' + [0,1)^d) of a surviving cell with p(alpha) != 0.
    Starting from the cells of the convex hull of K, the survivors are iterated to a
    fixed point.

    Parameters
    ----------
    mask : Mask
        finitely supported mask

    Returns
    -------
    List[Point]
        lexicographically sorted cells
    """
    factors = mask.dilation.factors
    support = set(mask.support())
    cosets = mask.dilation.cosets()
    cells = set(_candidate_cells(mask))
    while True:
        survivors = set()
        for omega in cells:
            image = tuple(m * w for m, w in zip(factors, omega))
            if any(tuple(i + g - w for i, g, w in zip(image, gamma, other)) in support
                   for gamma in cosets for other in cells):
                survivors.add(omega)
        if survivors == cells:
            return sorted(cells)
        cells = survivors


def sample_attractor(mask: Mask, count: int = 10000, depth: int = 30, seed: int = 0) -> np.ndarray:
    """
    Random points of K from truncated expansions sum_{j=1}^{depth} M^-j alpha_j.

    Returns
    -------
    np.ndarray
        points, shape (count, d)
    """
    rng = np.random.default_rng(seed)
    support = np.array(mask.support(), dtype=float)
    scales = np.array(mask.dilation.factors, dtype=float)
    choices = rng.integers(0, len(support), size=(count, depth))
    weights = scales[None, :] ** -np.arange(1, depth + 1)[:, None]
    return np.einsum("cjd,jd->cd", support[choices], weights)


def truncation_error(mask: Mask, depth: int = 30) -> float:
    """ Bound on the distance of a truncated expansion to K, per coordinate. """
    widths = [high - low for low, high in mask.support_box()]
    return max(w * float(m) ** -depth / (m - 1) for w, m in zip(widths, mask.dilation.factors))


def covers(omega: Sequence[Point], points: np.ndarray, tolerance: float = 1e-9) -> bool:
    """ True if every point lies in a closed cell omega + [0,1]^d (up to tolerance). """
    cells = np.array(omega, dtype=float)
    inside = np.all((points[:, None, :] >= cells[None, :, :] - tolerance)
                    & (points[:, None, :] <= cells[None, :, :] + 1 + tolerance), axis=2)
    return bool(np.all(inside.any(axis=1)))


def occupied_cells(omega: Sequence[Point], points: np.ndarray, tolerance: float = 1e-9) -> List[Point]:
    """ Cells of omega containing at least one of the points in their interior (shrunk by tolerance). """
    result = []
    for cell in omega:
        lower = np.array(cell, dtype=float) + tolerance
        upper = lower + 1 - 2 * tolerance
        if np.any(np.all((points > lower) & (points < upper), axis=1)):
            result.append(tuple(cell))
    return result
