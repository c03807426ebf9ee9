"""
Bounds on the joint spectral radius of a finite set of square matrices.

Exact matrices are first reduced to block-triangular form along common invariant
subspaces spanned by rational eigenvectors; the JSR of the family is the largest JSR
of its diagonal blocks. Each block is then bounded by a breadth-first branch and bound
over products:
    lower = max over explored products P of rho(P)^(1/|P|),
    upper = max over the frontier of min over prefixes Q of ||Q||^(1/|Q|),
nodes whose best prefix is already below the lower bound being pruned.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Sequence, Tuple

import numpy as np

from symbols import exact_linalg
from symbols.exact_linalg import Matrix
from tools import tools
from tools.exceptions import DimensionMismatchError

NORMS = ("spectral", "one", "inf", "ellipsoid")
_RELATIVE_SLACK = 1e-12


@dataclass(frozen=True)
class JsrEstimate:
    """
    Interval [lower, upper] containing the joint spectral radius.
    """
    lower: float
    upper: float
    depth: int
    method: str = "spectral"
    blocks: Tuple[int, ...] = field(default_factory=tuple)
    nodes: int = 0

    @property
    def width(self) -> float:
        return self.upper - self.lower

    def to_dict(self):
        return {"lower": self.lower, "upper": self.upper, "depth": self.depth, "method": self.method,
                "blocks": list(self.blocks), "nodes": self.nodes}


#### EXACT BLOCK REDUCTION ####

def _rational_eigenvalues(matrix: Matrix) -> List[Fraction]:
    values = np.linalg.eigvals(np.array(matrix, dtype=float)) if matrix else []
    candidates = []
    for value in values:
        if abs(value.imag) > 1e-9:
            continue
        candidate = Fraction(float(value.real)).limit_denominator(10 ** 6)
        if candidate not in candidates:
            candidates.append(candidate)
    return candidates


def _family_closure(family: Sequence[Matrix], seed: List[Fraction]) -> List[List[Fraction]]:
    basis = exact_linalg.span_basis([seed])
    while True:
        images = [exact_linalg.mat_vec(matrix, vector) for matrix in family for vector in basis]
        enlarged = exact_linalg.span_basis(basis + images)
        if len(enlarged) == len(basis):
            return basis
        basis = enlarged


def _find_invariant_subspace(family: Sequence[Matrix]):
    size = len(family[0])
    for matrix in family:
        for eigenvalue in _rational_eigenvalues(matrix):
            shifted = [[value - (eigenvalue if i == j else 0) for j, value in enumerate(row)] for i, row in enumerate(matrix)]
            for vector in exact_linalg.nullspace(shifted):
                subspace = _family_closure(family, vector)
                if 0 < len(subspace) < size:
                    return subspace
    return None


def triangular_blocks(family: Sequence[Matrix]) -> List[List[Matrix]]:
    """
    Splits an exact matrix family along common invariant subspaces into the families of
    its diagonal blocks (recursively).
    """
    size = len(family[0])
    if size <= 1:
        return [list(family)]
    subspace = _find_invariant_subspace(family)
    if subspace is None:
        return [list(family)]
    dimension = len(subspace)
    similarity = exact_linalg.transpose(exact_linalg.extend_to_basis(subspace, size))
    inverse = exact_linalg.inverse(similarity)
    upper, lower = [], []
    for matrix in family:
        transformed = exact_linalg.mat_mul(inverse, exact_linalg.mat_mul(matrix, similarity))
        upper.append([row[:dimension] for row in transformed[:dimension]])
        lower.append([row[dimension:] for row in transformed[dimension:]])
    return triangular_blocks(upper) + triangular_blocks(lower)


#### NUMERICAL BOUNDS ####

def spectral_radii(stack: np.ndarray) -> np.ndarray:
    return np.abs(np.linalg.eigvals(stack)).max(axis=-1)


def _operator_norms(stack: np.ndarray, kind: str) -> np.ndarray:
    if kind in ("spectral", "ellipsoid"):
        return np.linalg.norm(stack, ord=2, axis=(1, 2))
    if kind == "one":
        return np.abs(stack).sum(axis=1).max(axis=1)
    if kind == "inf":
        return np.abs(stack).sum(axis=2).max(axis=1)
    raise ValueError(f"Unknown norm '{kind}', expected one of {', '.join(NORMS)}.")


def ellipsoid_transform(stack: np.ndarray, length: int = 2) -> np.ndarray:
    """
    Conjugates the matrices by the Cholesky factor R of P = R^T R, with P = I + sum of normalized Gram matrices
    P^T P of the products P up to the given length. Spectral norms of the conjugated
    matrices are norms induced by the ellipsoid of P.
    """
    size = stack.shape[1]
    scale = max(spectral_radii(stack).max(), 1e-300)
    gram = np.eye(size)
    products = stack / scale
    for _ in range(length):
        gram += np.einsum("kji,kjl->il", products, products) / len(products)
        products = (products[:, None] @ (stack / scale)[None]).reshape(-1, size, size)
    factor = np.linalg.cholesky(gram).T  # ||x||_P = ||factor x||_2
    return factor @ stack @ np.linalg.inv(factor)


def _branch_and_bound(stack: np.ndarray, depth: int, kind: str, max_nodes: int) -> Tuple[float, float, int, int]:
    count, size = stack.shape[0], stack.shape[1]
    if kind == "ellipsoid":
        stack = ellipsoid_transform(stack)
    lower = float(spectral_radii(stack).max())
    products = stack
    best_prefix = _operator_norms(stack, kind)
    explored = count
    reached = 1
    for length in tools.progress_bar(range(2, depth + 1), desc=f"JSR {size}x{size} ({kind})"):
        keep = best_prefix > lower * (1 + _RELATIVE_SLACK)
        products, best_prefix = products[keep], best_prefix[keep]
        if len(products) == 0 or len(products) * count > max_nodes:
            break
        products = (products[:, None] @ stack[None]).reshape(-1, size, size)
        best_prefix = np.repeat(best_prefix, count)
        lower = max(lower, float(spectral_radii(products).max() ** (1.0 / length)))
        best_prefix = np.minimum(best_prefix, _operator_norms(products, kind) ** (1.0 / length))
        explored += len(products)
        reached = length
    keep = best_prefix > lower * (1 + _RELATIVE_SLACK)
    upper = max(lower, float(best_prefix[keep].max())) if np.any(keep) else lower
    return lower, upper, reached, explored


def _float_stack(matrices: Sequence) -> np.ndarray:
    arrays = [np.array(matrix, dtype=float) for matrix in matrices]
    if not arrays:
        raise DimensionMismatchError("The matrix family is empty.")
    shape = arrays[0].shape
    if len(shape) != 2 or shape[0] != shape[1] or any(a.shape != shape for a in arrays):
        raise DimensionMismatchError(f"All matrices must be square of the same size, got {[a.shape for a in arrays]}.")
    return np.stack(arrays)


def jsr_bounds(matrices: Sequence, depth: int = 8, norms: Sequence[str] = ("spectral", "ellipsoid"),
               max_nodes: int = 200000, exact_blocks: bool = True) -> JsrEstimate:
    """
    Lower and upper bounds of the joint spectral radius.

    Parameters
    ----------
    matrices : Sequence
        square matrices of the same size (Fractions enable the exact block reduction)
    depth : int, optional
        maximum product length, by default 8
    norms : Sequence[str], optional
        operator norms tried for the upper bound, the best one is kept
    max_nodes : int, optional
        node budget per level of the product tree, by default 200000
    exact_blocks : bool, optional
        reduce exact families to block-triangular form first, by default True

    Returns
    -------
    JsrEstimate
        bounds, reached depth and metadata

    Raises
    ------
    DimensionMismatchError
        for empty families or matrices of different sizes
    """
    if depth < 1:
        raise ValueError(f"The depth must be >= 1, got {depth}.")
    _float_stack(matrices)
    exact = exact_blocks and all(isinstance(x, (int, Fraction)) for matrix in matrices for row in matrix for x in row)
    families = triangular_blocks([exact_linalg.as_matrix(m) for m in matrices]) if exact else [list(matrices)]
    lower, upper, reached, explored, methods = 0.0, 0.0, depth, 0, set()
    for family in families:
        stack = _float_stack(family)
        if stack.shape[1] == 1 or stack.shape[0] == 1:
            # the JSR of a single matrix is its spectral radius
            value = float(spectral_radii(stack).max())
            lower, upper = max(lower, value), max(upper, value)
            continue
        block_lower, block_upper, block_method = 0.0, np.inf, ""
        for kind in norms:
            kind_lower, kind_upper, kind_reached, kind_explored = _branch_and_bound(stack, depth, kind, max_nodes)
            block_lower = max(block_lower, kind_lower)
            explored += kind_explored
            if kind_upper < block_upper:
                block_upper, block_method = kind_upper, kind
                reached = min(reached, kind_reached)
        lower, upper = max(lower, block_lower), max(upper, max(block_upper, block_lower))
        methods.add(block_method)
    method = "+".join(sorted(methods)) if methods else "spectral-radius"
    return JsrEstimate(lower, upper, reached, method, tuple(len(f[0]) for f in families), explored)
