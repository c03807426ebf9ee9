"""
Geometric V-cycle on a hierarchy of rectangular grids, with mask-generated transfer
operators, Gauss-Seidel smoothing and a direct solve on the coarsest level.
"""

from dataclasses import dataclass, field
from typing import List, Optional, Tuple

import numpy as np
from scipy.sparse.linalg import splu

from multigrid.smoother import GaussSeidel
from multigrid.stencil import Dims, Stencil, to_sparse
from multigrid.transfer import Shift, check_dims, prolongate, restrict
from tools import tools
from tools.exceptions import DimensionMismatchError, PlanError


@dataclass(frozen=True)
class Level:
    """
    One grid of the hierarchy: its system stencil and, except on the coarsest level,
    the transfer stencil and the dilation factors leading to the next coarser grid.
    """
    dims: Dims
    system: Stencil
    transfer: Optional[Stencil] = None
    factors: Optional[Tuple[int, int]] = None
    pre_smoothing: int = 1
    post_smoothing: int = 1
    shift: Shift = 0
    anisotropy: float = 1.0
    transfer_name: str = ""


@dataclass(frozen=True)
class LevelPlan:
    levels: Tuple[Level, ...]
    sweep_order: str = "forward"

    def __post_init__(self):
        object.__setattr__(self, "levels", tuple(self.levels))
        self.validate()

    @property
    def depth(self) -> int:
        """ Number of coarsenings. """
        return len(self.levels) - 1

    @property
    def fine_dims(self) -> Dims:
        return self.levels[0].dims

    def validate(self):
        """
        Raises
        ------
        PlanError
            if the plan is empty or consecutive grids are not related by the level factors
        """
        if not self.levels:
            raise PlanError("A level plan needs at least one level.")
        for index, (level, coarser) in enumerate(zip(self.levels, self.levels[1:])):
            if level.transfer is None or level.factors is None:
                raise PlanError(f"Level {index} has no transfer operator to level {index + 1}.")
            try:
                check_dims(level.dims, coarser.dims, level.factors)
            except DimensionMismatchError as error:
                raise PlanError(f"Levels {index} and {index + 1}: {error}") from error
        if any(n < 1 for level in self.levels for n in level.dims):
            raise PlanError("Every grid needs at least one point per direction.")

    def describe(self) -> List[str]:
        lines = []
        for index, level in enumerate(self.levels):
            transfer = f"-> {level.transfer_name or 'mask'} diag{level.factors}" if level.factors else "direct solve"
            lines.append(f"level {index}: {level.dims[0]}x{level.dims[1]}, eps_j={level.anisotropy:.3g}, "
                         f"nu=({level.pre_smoothing},{level.post_smoothing}) {transfer}")
        return lines


@dataclass
class SolveResult:
    x: np.ndarray
    iterations: int
    conv_rate: float
    converged: bool
    residual_history: List[float] = field(default_factory=list)

    @property
    def final_ratio(self) -> float:
        return self.residual_history[-1] if self.residual_history else 0.0


class MultigridSolver:
    """
    Assembles the level matrices, smoothers and the coarsest factorization of a plan once
    and runs V-cycles on C-ordered flattened grid vectors.
    """

    def __init__(self, plan: LevelPlan):
        self.plan = plan
        self.matrices = [to_sparse(level.system, level.dims) for level in plan.levels]
        self.smoothers = [GaussSeidel(matrix, plan.sweep_order) for matrix in self.matrices[:-1]]
        self._coarse = splu(self.matrices[-1].tocsc())
        tools.print_info_message(f"Multigrid hierarchy with {len(plan.levels)} levels, "
                                 f"{self.matrices[0].shape[0]} unknowns on the finest grid.", 2)

    def residual(self, b: np.ndarray, x: np.ndarray, level: int = 0) -> np.ndarray:
        return b - self.matrices[level] @ x

    def v_cycle(self, b: np.ndarray, x: np.ndarray, level: int = 0) -> np.ndarray:
        if not 0 <= level < len(self.plan.levels):
            raise PlanError(f"Level {level} is outside the plan of depth {self.plan.depth}.")
        if level == self.plan.depth:
            return self._coarse.solve(np.asarray(b, dtype=float))
        current = self.plan.levels[level]
        coarser = self.plan.levels[level + 1]
        smoother = self.smoothers[level]
        x = smoother.smooth(x, b, current.pre_smoothing)
        residual = (b - self.matrices[level] @ x).reshape(current.dims)
        coarse_rhs = restrict(current.transfer, residual, current.factors, current.shift)
        correction = self.v_cycle(coarse_rhs.ravel(), np.zeros(coarse_rhs.size), level + 1)
        x = x + prolongate(current.transfer, correction.reshape(coarser.dims), current.factors, current.dims, current.shift).ravel()
        return smoother.smooth(x, b, current.post_smoothing)

    def solve(self, b: np.ndarray, tol: float = 1e-7, max_iter: int = 1000, x0: Optional[np.ndarray] = None) -> SolveResult:
        """
        Repeats V-cycles until ||r_s|| / ||r_0|| < tol.

        Parameters
        ----------
        b : np.ndarray
            right-hand side on the finest grid (flat or shaped)
        tol : float, optional
            relative residual tolerance, by default 1e-7
        max_iter : int, optional
            maximum number of V-cycles, by default 1000
        x0 : np.ndarray, optional
            initial guess, zero when omitted

        Returns
        -------
        SolveResult
            iterate, iteration count s and rate (||r_s|| / ||r_0||)^(1/s)

        Raises
        ------
        ValueError
            if tol is not positive or max_iter is below 1
        """
        if tol <= 0 or max_iter < 1:
            raise ValueError(f"The solver needs tol > 0 and max_iter >= 1, got tol={tol}, max_iter={max_iter}.")
        b = np.asarray(b, dtype=float).ravel()
        size = self.matrices[0].shape[0]
        if b.size != size:
            raise DimensionMismatchError(f"Right-hand side of length {b.size} does not fit {size} unknowns.")
        x = np.zeros(size) if x0 is None else np.array(x0, dtype=float).ravel()
        initial = float(np.linalg.norm(self.residual(b, x)))
        if initial == 0.0:
            return SolveResult(x, 0, 0.0, True, [])
        history = []
        ratio = 1.0
        for _ in tools.progress_bar(range(max_iter), total=max_iter, desc="V-cycles"):
            x = self.v_cycle(b, x)
            ratio = float(np.linalg.norm(self.residual(b, x))) / initial
            history.append(ratio)
            if ratio < tol:
                break
        iterations = len(history)
        converged = ratio < tol
        if not converged:
            tools.print_warning_message(f"No convergence after {iterations} V-cycles: relative residual {ratio:.3e} >= {tol:.1e}.")
        return SolveResult(x, iterations, ratio ** (1.0 / iterations), converged, history)


def v_cycle(plan: LevelPlan, b: np.ndarray, x: np.ndarray, level: int = 0) -> np.ndarray:
    return MultigridSolver(plan).v_cycle(b, x, level)


def solve(plan: LevelPlan, b: np.ndarray, tol: float = 1e-7, max_iter: int = 1000) -> SolveResult:
    return MultigridSolver(plan).solve(b, tol, max_iter)
