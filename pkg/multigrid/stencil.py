"""
Stencils (Fourier coefficients of real trigonometric polynomials) and the multilevel
Toeplitz operators they define on rectangular grids with zero Dirichlet truncation.

Grid vectors are numpy arrays of shape (n1, n2); flattened in C order, the second
coordinate varies fastest.
"""

from dataclasses import dataclass
from typing import Dict, Mapping, Tuple

import numpy as np
import scipy.sparse as sp
from scipy import ndimage

from schemes.mask import Mask
from tools.exceptions import DimensionMismatchError, StencilSizeError

Offset = Tuple[int, int]
Dims = Tuple[int, int]


@dataclass(frozen=True)
class Stencil:
    """
    Finite map offset (i1, i2) -> real coefficient.
    """
    coeffs: Mapping[Offset, float]

    def __post_init__(self):
        cleaned = {tuple(int(i) for i in offset): float(value) for offset, value in self.coeffs.items() if value != 0}
        if any(len(offset) != 2 for offset in cleaned):
            raise DimensionMismatchError("Stencil offsets must have two components.")
        object.__setattr__(self, "coeffs", dict(sorted(cleaned.items())))

    @classmethod
    def from_mask(cls, mask: Mask) -> "Stencil":
        """ Stencil of a mask; univariate masks act along the first axis. """
        if mask.dilation.arity == 1:
            return cls({(offset[0], 0): float(value) for offset, value in mask.symbol.terms.items()})
        return cls({offset: float(value) for offset, value in mask.symbol.terms.items()})

    @property
    def radius(self) -> Tuple[int, int]:
        if not self.coeffs:
            return 0, 0
        return tuple(max(abs(offset[axis]) for offset in self.coeffs) for axis in range(2))

    @property
    def center(self) -> float:
        return self.coeffs.get((0, 0), 0.0)

    def kernel(self) -> np.ndarray:
        """ Odd-sized array with the (0,0) coefficient in the middle. """
        r1, r2 = self.radius
        kernel = np.zeros((2 * r1 + 1, 2 * r2 + 1))
        for (i1, i2), value in self.coeffs.items():
            kernel[i1 + r1, i2 + r2] = value
        return kernel

    def is_symmetric(self) -> bool:
        return all(np.isclose(self.coeffs.get((-i1, -i2), 0.0), value, rtol=1e-14, atol=0.0) for (i1, i2), value in self.coeffs.items())

    def scaled(self, factor: float) -> "Stencil":
        return Stencil({offset: factor * value for offset, value in self.coeffs.items()})

    def symbol(self, x1, x2):
        """ f(x) = sum_k s(k) exp(i k.x) """
        return sum(value * np.exp(1j * (i1 * np.asarray(x1) + i2 * np.asarray(x2))) for (i1, i2), value in self.coeffs.items())


def laplacian_stencil(eps: float = 1.0, h1: float = 1.0, h2: float = 1.0, q: int = 1) -> Stencil:
    """
    Finite difference stencil of -eps u_x1x1 - u_x2x2, i.e. the Fourier coefficients of
    (eps/h1^2)(2 - 2cos x1) + (1/h2^2)(2 - 2cos x2).
    """
    if q != 1:
        raise ValueError("Only the second order discretization (q = 1) is available.")
    if eps <= 0 or h1 <= 0 or h2 <= 0:
        raise ValueError(f"Invalid Laplacian parameters eps={eps}, h1={h1}, h2={h2}.")
    west_east = -eps / h1 ** 2
    south_north = -1.0 / h2 ** 2
    return Stencil({(0, 0): -2 * (west_east + south_north),
                    (-1, 0): west_east, (1, 0): west_east,
                    (0, -1): south_north, (0, 1): south_north})


def as_grid(values: np.ndarray, dims: Dims) -> np.ndarray:
    values = np.asarray(values, dtype=float)
    if values.size != dims[0] * dims[1]:
        raise DimensionMismatchError(f"A vector of length {values.size} does not fit the grid {dims}.")
    return values.reshape(dims)


def convolve(stencil: Stencil, grid: np.ndarray) -> np.ndarray:
    """ y(a) = sum_b s(a - b) x(b) over in-range b, any stencil size. """
    return ndimage.convolve(np.asarray(grid, dtype=float), stencil.kernel(), mode="constant", cval=0.0)


def correlate(stencil: Stencil, grid: np.ndarray) -> np.ndarray:
    """ Transposed Toeplitz operator: y(b) = sum_a s(a - b) x(a). """
    return ndimage.correlate(np.asarray(grid, dtype=float), stencil.kernel(), mode="constant", cval=0.0)


def toeplitz_apply(stencil: Stencil, grid: np.ndarray) -> np.ndarray:
    """
    Applies the multilevel Toeplitz matrix T_n(f) of the stencil to a grid vector.

    Raises
    ------
    StencilSizeError
        if the stencil reaches beyond the grid in some direction
    """
    grid = np.asarray(grid, dtype=float)
    if grid.ndim != 2:
        raise DimensionMismatchError(f"Grid vectors must be 2D arrays, got shape {grid.shape}.")
    if any(r >= n for r, n in zip(stencil.radius, grid.shape)):
        raise StencilSizeError(f"Stencil of radius {stencil.radius} does not fit the grid {grid.shape}.")
    return convolve(stencil, grid)


def to_sparse(stencil: Stencil, dims: Dims) -> sp.csr_matrix:
    """
    Assembles T_n(f) as a sparse matrix acting on C-ordered flattened grid vectors.
    """
    n1, n2 = dims
    matrix = sp.csr_matrix((n1 * n2, n1 * n2))
    for (i1, i2), value in stencil.coeffs.items():
        if abs(i1) >= n1 or abs(i2) >= n2:
            continue
        matrix = matrix + value * sp.kron(sp.eye(n1, k=-i1), sp.eye(n2, k=-i2), format="csr")
    return matrix.tocsr()


def stencil_entries(stencil: Stencil) -> Dict[Offset, float]:
    return dict(stencil.coeffs)
