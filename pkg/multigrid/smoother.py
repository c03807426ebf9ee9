"""
Gauss-Seidel smoothing on C-ordered grid vectors.
"""

import numpy as np
import scipy.sparse as sp
from scipy.sparse.linalg import splu

from multigrid.stencil import Stencil, to_sparse
from tools.exceptions import DimensionMismatchError, ZeroDiagonalError

ORDERS = ("forward", "backward", "symmetric")


class GaussSeidel:
    """
    Splits A = L + U (forward) or A = U' + L' (backward) and sweeps
    x <- (triangle)^-1 (b - (rest) x).

    Parameters
    ----------
    matrix : sp.spmatrix
        square system matrix with a nonzero diagonal
    order : str, optional
        'forward', 'backward' or 'symmetric' (forward then backward), by default 'forward'
    """

    def __init__(self, matrix: sp.spmatrix, order: str = "forward"):
        if order not in ORDERS:
            raise ValueError(f"Unknown sweep order '{order}', expected one of {', '.join(ORDERS)}.")
        matrix = sp.csr_matrix(matrix)
        if matrix.shape[0] != matrix.shape[1]:
            raise DimensionMismatchError(f"Gauss-Seidel needs a square matrix, got {matrix.shape}.")
        if np.any(matrix.diagonal() == 0):
            raise ZeroDiagonalError(f"The matrix has {int(np.sum(matrix.diagonal() == 0))} zero diagonal entries.")
        self.order = order
        self._matrix = matrix
        self._sweeps = []
        if order in ("forward", "symmetric"):
            self._sweeps.append(self._split(sp.tril(matrix, format="csc"), sp.triu(matrix, k=1, format="csr")))
        if order in ("backward", "symmetric"):
            self._sweeps.append(self._split(sp.triu(matrix, format="csc"), sp.tril(matrix, k=-1, format="csr")))

    @staticmethod
    def _split(triangle: sp.csc_matrix, rest: sp.csr_matrix):
        # natural ordering without pivoting keeps the triangular factor free of fill-in
        factor = splu(triangle, permc_spec="NATURAL", diag_pivot_thresh=0.0, options={"SymmetricMode": True})
        return factor, rest

    @property
    def matrix(self) -> sp.csr_matrix:
        return self._matrix

    def smooth(self, x: np.ndarray, b: np.ndarray, sweeps: int = 1) -> np.ndarray:
        x = np.array(x, dtype=float)
        b = np.asarray(b, dtype=float)
        if x.shape != b.shape or x.shape[0] != self._matrix.shape[0]:
            raise DimensionMismatchError(f"Vectors of shapes {x.shape} and {b.shape} do not fit a {self._matrix.shape} matrix.")
        for _ in range(sweeps):
            for factor, rest in self._sweeps:
                x = factor.solve(b - rest @ x)
        return x


def gauss_seidel(stencil: Stencil, b: np.ndarray, x: np.ndarray, sweeps: int = 1, order: str = "forward") -> np.ndarray:
    """ Smooths a grid vector x of shape (n1, n2) for T_n(s) x = b. """
    x = np.asarray(x, dtype=float)
    if np.shape(b) != x.shape or x.ndim != 2:
        raise DimensionMismatchError(f"Grid vectors of shapes {np.shape(b)} and {x.shape} do not match.")
    smoother = GaussSeidel(to_sparse(stencil, x.shape), order)
    return smoother.smooth(x.ravel(), np.asarray(b, dtype=float).ravel(), sweeps).reshape(x.shape)
