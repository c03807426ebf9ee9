"""
Exact linear algebra over the rationals.
Callers pass and receive lists of rows of Fractions; the work is done by sympy
domain matrices over QQ.
"""

from fractions import Fraction
from typing import List, Sequence, Tuple

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from tools.exceptions import DimensionMismatchError, SingularSystemError

Vector = List[Fraction]
Matrix = List[List[Fraction]]


def _to_qq(value) -> QQ:
    value = Fraction(value)
    return QQ(value.numerator, value.denominator)


def _to_domain(matrix: Sequence[Sequence]) -> DomainMatrix:
    rows = [[_to_qq(x) for x in row] for row in matrix]
    return DomainMatrix(rows, (len(rows), len(rows[0]) if rows else 0), QQ)


def _from_domain(matrix: DomainMatrix) -> Matrix:
    return [[Fraction(int(x.p), int(x.q)) for x in row] for row in matrix.to_Matrix().tolist()]


def _is_empty(matrix: Sequence[Sequence]) -> bool:
    return not matrix or not matrix[0]


def as_matrix(rows: Sequence[Sequence]) -> Matrix:
    return [[Fraction(x) for x in row] for row in rows]


def identity(size: int) -> Matrix:
    return _from_domain(DomainMatrix.eye(size, QQ)) if size else []


def transpose(matrix: Matrix) -> Matrix:
    return [list(column) for column in zip(*matrix)]


def mat_vec(matrix: Matrix, vector: Sequence[Fraction]) -> Vector:
    if _is_empty(matrix):
        return [Fraction(0) for _ in matrix]
    if len(matrix[0]) != len(vector):
        raise DimensionMismatchError(f"Cannot multiply a {len(matrix)}x{len(matrix[0])} matrix by a vector of length {len(vector)}.")
    product = _to_domain(matrix).matmul(_to_domain([[x] for x in vector]))
    return [row[0] for row in _from_domain(product)]


def mat_mul(left: Matrix, right: Matrix) -> Matrix:
    if _is_empty(left) or _is_empty(right):
        return [[] for _ in left]
    if len(left[0]) != len(right):
        raise DimensionMismatchError(f"Cannot multiply a {len(left)}x{len(left[0])} matrix by a {len(right)}-row matrix.")
    return _from_domain(_to_domain(left).matmul(_to_domain(right)))


def rref(matrix: Matrix) -> Tuple[Matrix, List[int]]:
    """
    Reduced row echelon form.

    Parameters
    ----------
    matrix : Matrix
        input matrix (not modified)

    Returns
    -------
    Tuple[Matrix, List[int]]
        the reduced matrix and the pivot column indices
    """
    if _is_empty(matrix):
        return [list(row) for row in matrix], []
    reduced, pivots = _to_domain(matrix).rref()
    return _from_domain(reduced), list(pivots)


def rank(matrix: Matrix) -> int:
    if _is_empty(matrix):
        return 0
    return _to_domain(matrix).rank()


def _regular(matrix: Matrix) -> DomainMatrix:
    size = len(matrix)
    if any(len(row) != size for row in matrix):
        raise DimensionMismatchError(f"Expected a square matrix, got {size} rows of lengths {sorted({len(r) for r in matrix})}.")
    domain_matrix = _to_domain(matrix)
    if domain_matrix.rank() != size:
        raise SingularSystemError(f"Singular {size}x{size} system.")
    return domain_matrix


def solve(matrix: Matrix, rhs: Sequence) -> Vector:
    """
    Solves a square regular system exactly.

    Raises
    ------
    SingularSystemError
        if the matrix is singular
    """
    if len(rhs) != len(matrix):
        raise DimensionMismatchError("The system must be square and match the right-hand side.")
    if not matrix:
        return []
    solution = _regular(matrix).lu_solve(_to_domain([[b] for b in rhs]))
    return [row[0] for row in _from_domain(solution)]


def inverse(matrix: Matrix) -> Matrix:
    if not matrix:
        return []
    return _from_domain(_regular(matrix).inv())


def nullspace(matrix: Matrix) -> List[Vector]:
    """ Basis of {x : matrix x = 0}. """
    if _is_empty(matrix):
        return []
    basis = _to_domain(matrix).nullspace()
    return _from_domain(basis) if basis.shape[0] else []


def span_basis(vectors: Sequence[Vector]) -> List[Vector]:
    """ Echelon basis (rows of the rref) of the span of the given vectors. """
    if not vectors:
        return []
    reduced, pivots = rref([list(v) for v in vectors])
    return reduced[:len(pivots)]


def in_span(basis: Sequence[Vector], vector: Sequence[Fraction]) -> bool:
    if not any(vector):
        return True
    if not basis:
        return False
    return rank(list(basis) + [list(vector)]) == rank(list(basis))


def extend_to_basis(basis: Sequence[Vector], dimension: int) -> List[Vector]:
    """
    Completes linearly independent vectors to a basis of Q^dimension with standard
    unit vectors, chosen greedily in index order.
    """
    result = [list(v) for v in basis]
    current_rank = rank(result)
    if current_rank != len(result):
        raise SingularSystemError("The vectors to extend are linearly dependent.")
    for index in range(dimension):
        if current_rank == dimension:
            break
        unit = [Fraction(int(i == index)) for i in range(dimension)]
        if not in_span(result, unit):
            result.append(unit)
            current_rank += 1
    return result
