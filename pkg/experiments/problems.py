"""
Model problems: the (anisotropic) Laplacian on the unit square with the oscillating
exact solution used in the benchmark tables.
"""

from typing import Tuple

import numpy as np

from multigrid.stencil import Dims, Stencil, laplacian_stencil, to_sparse
from tools.exceptions import DimensionMismatchError

PROBLEMS = ("laplacian", "aniso")


def mesh_sizes(dims: Dims) -> Tuple[float, float]:
    return 1.0 / (dims[0] + 1), 1.0 / (dims[1] + 1)


def system_stencil(dims: Dims, eps: float = 1.0) -> Stencil:
    """ Finite difference stencil of -eps u_x1x1 - u_x2x2 on the grid of the given size. """
    h1, h2 = mesh_sizes(dims)
    return laplacian_stencil(eps, h1, h2)


def exact_solution(dims: Dims) -> np.ndarray:
    """
    X[r, s] = sin(5 pi s / (n2 - 1)) + sin(5 pi r / (n1 - 1)), 0-based r along the
    first direction and s along the second.
    """
    n1, n2 = dims
    if n1 < 2 or n2 < 2:
        raise DimensionMismatchError(f"The exact solution needs at least 2 points per direction, got {dims}.")
    r = np.arange(n1)[:, None]
    s = np.arange(n2)[None, :]
    return np.sin(5 * np.pi * s / (n2 - 1)) + np.sin(5 * np.pi * r / (n1 - 1))


def build_rhs(dims: Dims, eps: float = 1.0) -> Tuple[np.ndarray, np.ndarray]:
    """
    Right-hand side b = A x of the exact solution on the finest grid.

    Returns
    -------
    Tuple[np.ndarray, np.ndarray]
        b and x, both flattened in storage order
    """
    x = exact_solution(dims).ravel()
    return to_sparse(system_stencil(dims, eps), dims) @ x, x
