import numpy as np
import pytest
from scipy.linalg import solve_triangular

from experiments.problems import build_rhs, exact_solution, system_stencil
from multigrid.smoother import GaussSeidel, gauss_seidel
from multigrid.stencil import Stencil, as_grid, convolve, laplacian_stencil, to_sparse, toeplitz_apply
from multigrid.transfer import (coarse_dims, downsample, prolongate, prolongation_matrix, restrict, upsample)
from multigrid.vcycle import Level, LevelPlan, MultigridSolver, solve, v_cycle
from schemes.anisotropic_interpolatory import aniso_interp_symbol
from schemes.dubuc_deslauriers import dd_symbol
from schemes.mask import Dilation
from schemes.reference_masks import bilinear_mask, four_point_mask
from tools.exceptions import DimensionMismatchError, PlanError, StencilSizeError, ZeroDiagonalError

RNG = np.random.default_rng(7)
P1 = Stencil.from_mask(bilinear_mask())
A_M1 = Stencil.from_mask(aniso_interp_symbol(Dilation(2, 3), 1))


def _dense_toeplitz(stencil: Stencil, dims):
    n1, n2 = dims
    dense = np.zeros((n1 * n2, n1 * n2))
    for a1 in range(n1):
        for a2 in range(n2):
            for b1 in range(n1):
                for b2 in range(n2):
                    dense[a1 * n2 + a2, b1 * n2 + b2] = stencil.coeffs.get((a1 - b1, a2 - b2), 0.0)
    return dense


#### STENCILS ####

def test_laplacian_stencil():
    stencil = laplacian_stencil(eps=0.5, h1=0.5, h2=0.25)
    assert stencil.coeffs == {(-1, 0): -2.0, (0, -1): -16.0, (0, 0): 36.0, (0, 1): -16.0, (1, 0): -2.0}
    assert stencil.is_symmetric()
    assert stencil.symbol(0.0, 0.0) == pytest.approx(0.0)
    with pytest.raises(ValueError):
        laplacian_stencil(q=2)
    with pytest.raises(ValueError):
        laplacian_stencil(eps=0.0)


def test_stencil_from_masks():
    assert A_M1.radius == (1, 2)
    assert A_M1.center == 1.0
    assert A_M1.kernel().shape == (3, 5)
    assert A_M1.kernel().sum() == pytest.approx(6.0)
    univariate = Stencil.from_mask(dd_symbol(3, 1))
    assert univariate.radius == (2, 0)
    assert Stencil({(0, 0): 0.0}).radius == (0, 0)
    assert not Stencil({(1, 0): 1.0}).is_symmetric()
    assert P1.scaled(2.0).center == 2.0


@pytest.mark.parametrize("dims", [(4, 4), (5, 3), (7, 12), (12, 12)])
@pytest.mark.parametrize("stencil", [laplacian_stencil(), P1, A_M1])
def test_toeplitz_apply_matches_dense_matrix(dims, stencil):
    x = RNG.standard_normal(dims)
    expected = _dense_toeplitz(stencil, dims) @ x.ravel()
    assert np.allclose(toeplitz_apply(stencil, x).ravel(), expected, rtol=1e-12, atol=1e-12)
    assert np.allclose(to_sparse(stencil, dims) @ x.ravel(), expected, rtol=1e-12, atol=1e-12)


def test_toeplitz_apply_checks_sizes():
    with pytest.raises(StencilSizeError):
        toeplitz_apply(laplacian_stencil(), np.ones((1, 5)))
    with pytest.raises(DimensionMismatchError):
        toeplitz_apply(laplacian_stencil(), np.ones(9))
    with pytest.raises(DimensionMismatchError):
        as_grid(np.ones(10), (3, 3))


#### TRANSFER ####

def test_coarse_dims():
    assert coarse_dims((7, 8), (2, 3)) == (3, 2)
    assert coarse_dims((127, 80), (2, 3)) == (63, 26)
    with pytest.raises(DimensionMismatchError):
        coarse_dims((6, 8), (2, 3))


def test_injection_positions():
    coarse = np.arange(6, dtype=float).reshape(3, 2) + 1
    fine = upsample(coarse, (2, 3), (7, 8))
    assert fine[1, 2] == 1 and fine[5, 5] == 6
    assert np.count_nonzero(fine) == 6
    assert np.array_equal(downsample(fine, (2, 3)), coarse)
    shifted = upsample(coarse, (2, 3), (7, 8), shift=(0, -1))
    assert shifted[1, 1] == 1
    with pytest.raises(PlanError):
        upsample(coarse, (2, 3), (7, 8), shift=2)


def test_linear_prolongation_interpolates():
    coarse = np.add.outer(np.arange(1, 4), 2 * np.arange(1, 3)).astype(float)
    fine = prolongate(A_M1, coarse, (2, 3), (7, 8))
    r = np.arange(1, 8)[:, None] / 2
    s = np.arange(1, 9)[None, :] / 3
    # exact for linear data away from the zero boundary of the coarse grid
    assert np.allclose(fine[1:6, 2:6], (r + 2 * s)[1:6, 2:6])


@pytest.mark.parametrize("stencil, factors, fine", [(P1, (2, 2), (15, 7)), (A_M1, (2, 3), (7, 26)),
                                                    (Stencil.from_mask(four_point_mask()), (2, 2), (15, 15))])
def test_restriction_is_scaled_adjoint(stencil, factors, fine):
    coarse = coarse_dims(fine, factors)
    u = RNG.standard_normal(fine)
    v = RNG.standard_normal(coarse)
    left = np.vdot(restrict(stencil, u, factors) * factors[0] * factors[1], v)
    right = np.vdot(u, prolongate(stencil, v, factors, fine))
    assert left == pytest.approx(right, rel=1e-12)
    matrix = prolongation_matrix(stencil, factors, fine)
    assert np.allclose(matrix @ v.ravel(), prolongate(stencil, v, factors, fine).ravel())


#### SMOOTHER ####

def test_gauss_seidel_hand_computed_sweep():
    smoother = GaussSeidel(np.array([[2.0, -1.0], [-1.0, 2.0]]))
    assert np.allclose(smoother.smooth(np.zeros(2), np.ones(2)), [0.5, 0.75])
    backward = GaussSeidel(np.array([[2.0, -1.0], [-1.0, 2.0]]), "backward")
    assert np.allclose(backward.smooth(np.zeros(2), np.ones(2)), [0.75, 0.5])


@pytest.mark.parametrize("order", ["forward", "backward", "symmetric"])
def test_gauss_seidel_matches_triangular_solves(order):
    dims = (6, 5)
    stencil = laplacian_stencil(eps=0.1)
    matrix = to_sparse(stencil, dims)
    b = RNG.standard_normal(dims)
    x = RNG.standard_normal(dims)
    expected = x.ravel()
    dense = matrix.toarray()
    lower, upper = np.tril(dense), np.triu(dense)
    for _ in range(2):
        if order in ("forward", "symmetric"):
            expected = solve_triangular(lower, b.ravel() - (dense - lower) @ expected, lower=True)
        if order in ("backward", "symmetric"):
            expected = solve_triangular(upper, b.ravel() - (dense - upper) @ expected, lower=False)
    assert np.allclose(gauss_seidel(stencil, b, x, sweeps=2, order=order).ravel(), expected)


def test_gauss_seidel_rejects_bad_input():
    with pytest.raises(ValueError):
        GaussSeidel(np.eye(2), "red-black")
    with pytest.raises(ZeroDiagonalError):
        GaussSeidel(np.array([[0.0, 1.0], [1.0, 2.0]]))
    with pytest.raises(DimensionMismatchError):
        GaussSeidel(np.ones((2, 3)))
    with pytest.raises(DimensionMismatchError):
        gauss_seidel(laplacian_stencil(), np.ones((3, 3)), np.ones((3, 4)))


#### V-CYCLE ####

def _two_grid_plan(fine=(7, 7)):
    coarse = coarse_dims(fine, (2, 2))
    return LevelPlan((Level(fine, system_stencil(fine), P1, (2, 2)), Level(coarse, system_stencil(coarse))))


def test_v_cycle_matches_dense_two_grid_iteration():
    plan = _two_grid_plan()
    fine, coarse = plan.levels[0].dims, plan.levels[1].dims
    a = to_sparse(plan.levels[0].system, fine).toarray()
    a_coarse = to_sparse(plan.levels[1].system, coarse).toarray()
    p = prolongation_matrix(P1, (2, 2), fine).toarray()
    r = p.T / 4
    lower = np.tril(a)
    b = RNG.standard_normal(a.shape[0])
    x = RNG.standard_normal(a.shape[0])

    expected = x + np.linalg.solve(lower, b - a @ x)
    expected = expected + p @ np.linalg.solve(a_coarse, r @ (b - a @ expected))
    expected = expected + np.linalg.solve(lower, b - a @ expected)

    assert np.allclose(v_cycle(plan, b, x), expected, rtol=1e-12, atol=1e-12)


def test_single_level_plan_is_a_direct_solve():
    dims = (5, 4)
    plan = LevelPlan((Level(dims, system_stencil(dims)),))
    b, exact = build_rhs(dims)
    result = solve(plan, b)
    assert result.iterations == 1
    assert np.allclose(result.x, exact)


def test_zero_right_hand_side():
    result = MultigridSolver(_two_grid_plan()).solve(np.zeros(49))
    assert result.iterations == 0
    assert result.conv_rate == 0.0
    assert result.converged
    assert not result.x.any()
    assert result.final_ratio == 0.0


def test_solve_recovers_exact_solution():
    plan = _two_grid_plan((31, 31))
    b, exact = build_rhs((31, 31))
    result = MultigridSolver(plan).solve(b, tol=1e-9)
    assert result.converged
    assert result.residual_history[-1] < 1e-9
    assert result.conv_rate == pytest.approx(result.final_ratio ** (1 / result.iterations))
    assert np.allclose(result.x, exact, atol=1e-4)


def test_solve_reports_missing_convergence():
    result = MultigridSolver(_two_grid_plan((15, 15))).solve(build_rhs((15, 15))[0], tol=1e-14, max_iter=2)
    assert result.iterations == 2
    assert not result.converged


def test_solve_checks_sizes():
    with pytest.raises(DimensionMismatchError):
        MultigridSolver(_two_grid_plan()).solve(np.ones(10))
    with pytest.raises(PlanError):
        MultigridSolver(_two_grid_plan()).v_cycle(np.ones(9), np.zeros(9), level=2)


def test_solve_rejects_empty_iteration_budget():
    b = build_rhs((7, 7))[0]
    with pytest.raises(ValueError):
        MultigridSolver(_two_grid_plan()).solve(b, tol=1e-7, max_iter=0)
    with pytest.raises(ValueError):
        solve(_two_grid_plan(), b, tol=0.0)


def test_plan_validation():
    with pytest.raises(PlanError):
        LevelPlan(())
    with pytest.raises(PlanError):
        LevelPlan((Level((7, 7), system_stencil((7, 7))), Level((3, 3), system_stencil((3, 3)))))
    with pytest.raises(PlanError):
        LevelPlan((Level((7, 7), system_stencil((7, 7)), P1, (2, 2)), Level((4, 3), system_stencil((4, 3)))))
    plan = _two_grid_plan()
    assert plan.depth == 1
    assert plan.fine_dims == (7, 7)
    assert plan.describe()[0].startswith("level 0: 7x7")
    assert plan.describe()[1].endswith("direct solve")


def test_exact_solution_layout():
    x = exact_solution((5, 9))
    assert x.shape == (5, 9)
    assert x[0, 0] == pytest.approx(0.0)
    assert x[0, 2] == pytest.approx(np.sin(5 * np.pi * 2 / 8))
    assert x[1, 0] == pytest.approx(np.sin(5 * np.pi / 4))
    with pytest.raises(DimensionMismatchError):
        exact_solution((1, 5))


def test_convolve_keeps_grid_shape():
    grid = np.ones((3, 4))
    assert convolve(A_M1, grid).shape == (3, 4)
