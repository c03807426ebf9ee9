"""
Grid transfer operators generated by a subdivision mask.

The prolongation from an (N1, N2) grid to the (n1, n2) grid, n_i = m_i (N_i + 1) - 1, is
P = T_n(p) K^T, K^T injecting coarse point r at fine index m_i r + m_i - 1 (+ shift);
the restriction is R = P^T / (m1 m2).
"""

from typing import Tuple, Union

import numpy as np
import scipy.sparse as sp

from multigrid.stencil import Dims, Stencil, convolve, correlate, to_sparse
from tools.exceptions import DimensionMismatchError, PlanError

Shift = Union[int, Tuple[int, int]]


def coarse_dims(fine: Dims, factors: Tuple[int, int]) -> Dims:
    """
    Raises
    ------
    DimensionMismatchError
        if some n_i + 1 is not divisible by m_i
    """
    if any((n + 1) % m for n, m in zip(fine, factors)):
        raise DimensionMismatchError(f"Grid {fine} cannot be coarsened by {factors}.")
    return tuple((n + 1) // m - 1 for n, m in zip(fine, factors))


def check_dims(fine: Dims, coarse: Dims, factors: Tuple[int, int]):
    if any(n != m * (c + 1) - 1 for n, c, m in zip(fine, coarse, factors)):
        raise DimensionMismatchError(f"Grids {fine} and {coarse} are not related by the factors {factors}.")


def _injection_indices(coarse: Dims, fine: Dims, factors: Tuple[int, int], shift: Shift):
    shifts = (shift, shift) if isinstance(shift, int) else tuple(shift)
    indices = []
    for c, n, m, s in zip(coarse, fine, factors, shifts):
        index = m * np.arange(c) + m - 1 + s
        if c and (index[0] < 0 or index[-1] >= n):
            raise PlanError(f"Offset shift {s} moves the coarse points outside the fine grid of size {n}.")
        indices.append(index)
    return np.ix_(*indices)


def upsample(coarse: np.ndarray, factors: Tuple[int, int], fine: Dims, shift: Shift = 0) -> np.ndarray:
    """ K^T: zero-filled fine grid vector carrying the coarse values. """
    coarse = np.asarray(coarse, dtype=float)
    check_dims(fine, coarse.shape, factors)
    result = np.zeros(fine)
    result[_injection_indices(coarse.shape, fine, factors, shift)] = coarse
    return result


def downsample(fine: np.ndarray, factors: Tuple[int, int], shift: Shift = 0) -> np.ndarray:
    """ K: values of the fine grid vector at the coarse points. """
    fine = np.asarray(fine, dtype=float)
    coarse = coarse_dims(fine.shape, factors)
    return fine[_injection_indices(coarse, fine.shape, factors, shift)]


def prolongate(stencil: Stencil, coarse: np.ndarray, factors: Tuple[int, int], fine: Dims, shift: Shift = 0) -> np.ndarray:
    return convolve(stencil, upsample(coarse, factors, fine, shift))


def restrict(stencil: Stencil, fine: np.ndarray, factors: Tuple[int, int], shift: Shift = 0) -> np.ndarray:
    return downsample(correlate(stencil, fine), factors, shift) / (factors[0] * factors[1])


def prolongation_matrix(stencil: Stencil, factors: Tuple[int, int], fine: Dims, shift: Shift = 0) -> sp.csr_matrix:
    """ Sparse P = T_n(p) K^T, mainly for checks against the matrix-free operators. """
    coarse = coarse_dims(fine, factors)
    rows = np.zeros(fine, dtype=int)
    rows[_injection_indices(coarse, fine, factors, shift)] = 1
    positions = np.flatnonzero(rows.ravel())
    injection = sp.csr_matrix((np.ones(len(positions)), (positions, np.arange(len(positions)))),
                              shape=(fine[0] * fine[1], coarse[0] * coarse[1]))
    return (to_sparse(stencil, fine) @ injection).tocsr()
