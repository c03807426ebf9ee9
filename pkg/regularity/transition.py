"""
Transition matrices of a mask on the covering set Omega, their common invariant
difference subspaces U, U1, U2, and the restrictions of the matrices to them.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from regularity.attractor import compute_omega
from schemes.mask import Mask
from symbols import exact_linalg
from symbols.exact_linalg import Matrix, Vector
from tools.exceptions import DimensionMismatchError, EigenvalueError

Point = Tuple[int, ...]


@dataclass(frozen=True)
class TransitionSet:
    """
    T_gamma[alpha, beta] = p(M alpha - beta + gamma), alpha, beta in Omega, gamma in Gamma.
    """
    omega: Tuple[Point, ...]
    gamma: Tuple[Point, ...]
    matrices: Dict[Point, Matrix]

    @property
    def size(self) -> int:
        return len(self.omega)

    def index(self, point: Point) -> Optional[int]:
        try:
            return self.omega.index(tuple(point))
        except ValueError:
            return None

    def column_sums(self) -> Dict[Point, List[Fraction]]:
        return {g: [sum(column, Fraction(0)) for column in zip(*matrix)] for g, matrix in self.matrices.items()}

    def family(self) -> List[Matrix]:
        return [self.matrices[g] for g in self.gamma]


@dataclass(frozen=True)
class SubspaceBasis:
    """
    Bases (as rational vectors) of the invariant subspaces U, U1 and U2.
    """
    u: List[Vector]
    u1: List[Vector]
    u2: List[Vector]

    @property
    def dims(self) -> Tuple[int, int, int]:
        return len(self.u), len(self.u1), len(self.u2)


def transition_matrices(mask: Mask, omega: Optional[Sequence[Point]] = None) -> TransitionSet:
    """
    Builds the transition matrices of the mask on omega (computed when not given).
    """
    omega = tuple(tuple(w) for w in (compute_omega(mask) if omega is None else omega))
    factors = mask.dilation.factors
    matrices = {}
    for gamma in mask.dilation.cosets():
        matrix = []
        for alpha in omega:
            image = tuple(m * a + g for m, a, g in zip(factors, alpha, gamma))
            matrix.append([mask.coefficient(tuple(i - b for i, b in zip(image, beta))) for beta in omega])
        matrices[gamma] = matrix
    return TransitionSet(omega, tuple(mask.dilation.cosets()), matrices)


def refinable_eigenvector(ts: TransitionSet) -> Vector:
    """
    Eigenvector v0 of T_0 for the eigenvalue 1: the values of the basic limit function
    at the integer points of Omega. The unit vector at the origin is preferred
    (interpolatory masks); otherwise the vector is normalized to sum 1.

    Raises
    ------
    EigenvalueError
        if 1 is not an eigenvalue of T_0
    """
    zero = tuple(0 for _ in ts.gamma[0])
    matrix = ts.matrices[zero]
    shifted = [[value - int(i == j) for j, value in enumerate(row)] for i, row in enumerate(matrix)]
    kernel = exact_linalg.nullspace(shifted)
    if not kernel:
        raise EigenvalueError("The transition matrix T_0 has no eigenvalue 1.")
    origin = ts.index(zero)
    if origin is not None:
        unit = [Fraction(int(i == origin)) for i in range(ts.size)]
        if exact_linalg.in_span(kernel, unit):
            return unit
    vector = kernel[0]
    total = sum(vector, Fraction(0))
    return [x / total for x in vector] if total else vector


def invariant_closure(ts: TransitionSet, seeds: Sequence[Vector]) -> List[Vector]:
    """
    Smallest subspace containing the seeds and invariant under every T_gamma.
    """
    basis = exact_linalg.span_basis([list(s) for s in seeds if any(s)])
    while True:
        images = [exact_linalg.mat_vec(matrix, vector) for matrix in ts.family() for vector in basis]
        enlarged = exact_linalg.span_basis(basis + images)
        if len(enlarged) == len(basis):
            return basis
        basis = enlarged


def _shifted_values(ts: TransitionSet, phi: Vector, shift: Point) -> Vector:
    # (phi(shift + alpha))_{alpha in Omega}, phi known on Omega only
    values = []
    for alpha in ts.omega:
        position = ts.index(tuple(a + s for a, s in zip(alpha, shift)))
        values.append(phi[position] if position is not None else Fraction(0))
    return values


def invariant_subspaces(ts: TransitionSet, seeds: Optional[Dict[str, Sequence[Vector]]] = None) -> SubspaceBasis:
    """
    Computes U (seeded by T_gamma v0 - v0), U1 and U2 (seeded by the differences of
    shifted integer values of the basic limit function along each axis), each closed
    under all transition matrices.

    Parameters
    ----------
    ts : TransitionSet
        transition matrices
    seeds : Dict[str, Sequence[Vector]], optional
        explicit seeds under the keys 'u', 'u1', 'u2', replacing the computed ones

    Returns
    -------
    SubspaceBasis
        the three bases
    """
    seeds = dict(seeds or {})
    if not {"u", "u1", "u2"} <= set(seeds):
        v0 = refinable_eigenvector(ts)
        arity = len(ts.gamma[0])
        if "u" not in seeds:
            seeds["u"] = [[a - b for a, b in zip(exact_linalg.mat_vec(matrix, v0), v0)] for matrix in ts.family()]
        origin = _shifted_values(ts, v0, (0,) * arity)
        for axis, key in enumerate(("u1", "u2")[:arity]):
            if key not in seeds:
                step = tuple(int(i == axis) for i in range(arity))
                seeds[key] = [[a - b for a, b in zip(_shifted_values(ts, v0, step), origin)]]
    return SubspaceBasis(invariant_closure(ts, seeds["u"]),
                         invariant_closure(ts, seeds.get("u1", [])),
                         invariant_closure(ts, seeds.get("u2", [])))


def restrict(ts: TransitionSet, basis: Sequence[Vector], unique: bool = True) -> List[Matrix]:
    """
    Restrictions of the transition matrices to an invariant subspace: with S the basis
    completed by unit vectors, the upper-left block of S^-1 T_gamma S.

    Raises
    ------
    DimensionMismatchError
        if the subspace is not invariant
    """
    dimension = len(basis)
    if dimension == 0:
        return []
    columns = exact_linalg.extend_to_basis(basis, ts.size)
    similarity = exact_linalg.transpose(columns)
    inverse = exact_linalg.inverse(similarity)
    restricted = []
    for matrix in ts.family():
        transformed = exact_linalg.mat_mul(inverse, exact_linalg.mat_mul(matrix, similarity))
        if any(transformed[i][j] for i in range(dimension, ts.size) for j in range(dimension)):
            raise DimensionMismatchError("The subspace is not invariant under the transition matrices.")
        block = [row[:dimension] for row in transformed[:dimension]]
        if not unique or block not in restricted:
            restricted.append(block)
    return restricted
