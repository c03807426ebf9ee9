from fractions import Fraction as F
from math import sqrt

import numpy as np
import pytest

from regularity.attractor import compute_omega, covers, occupied_cells, sample_attractor, truncation_error
from regularity.holder import Continuity, continuity_verdict, holder_exponent
from regularity.jsr import JsrEstimate, ellipsoid_transform, jsr_bounds, spectral_radii, triangular_blocks
from regularity.transition import invariant_subspaces, refinable_eigenvector, restrict, transition_matrices
from schemes.anisotropic_interpolatory import aniso_interp_symbol
from schemes.box_splines import box_spline_symbol
from schemes.dubuc_deslauriers import dd_symbol
from schemes.mask import Dilation
from symbols import exact_linalg
from tools.exceptions import DimensionMismatchError, MaskParameterError

D23 = Dilation(2, 3)
OMEGA = [(-1, -1), (-1, 0), (0, -1), (0, 0)]


@pytest.fixture(scope="module")
def linear_transitions():
    return transition_matrices(aniso_interp_symbol(D23, 1))


def test_omega_of_linear_mask():
    assert compute_omega(aniso_interp_symbol(D23, 1)) == OMEGA


@pytest.mark.parametrize("mask", [aniso_interp_symbol(D23, 1), aniso_interp_symbol(Dilation(2, 5), 1),
                                  aniso_interp_symbol(D23, 2), box_spline_symbol(2)])
def test_omega_covers_attractor(mask):
    omega = compute_omega(mask)
    points = sample_attractor(mask, count=4000)
    assert truncation_error(mask) < 1e-7
    assert covers(omega, points)


def test_every_cell_of_linear_omega_is_occupied():
    mask = aniso_interp_symbol(D23, 1)
    assert occupied_cells(OMEGA, sample_attractor(mask, count=4000)) == OMEGA


def test_transition_matrix_at_zero(linear_transitions):
    assert linear_transitions.omega == tuple(OMEGA)
    expected = [[F(v, 6) for v in row] for row in ([1, 0, 0, 0], [2, 3, 0, 0], [1, 0, 2, 0], [2, 3, 4, 6])]
    assert linear_transitions.matrices[(0, 0)] == expected
    assert len(linear_transitions.family()) == 6


def test_transition_columns_sum_to_one(linear_transitions):
    for sums in linear_transitions.column_sums().values():
        assert all(value == 1 for value in sums)
    for sums in transition_matrices(aniso_interp_symbol(D23, 2)).column_sums().values():
        assert all(value == 1 for value in sums)


def test_refinable_eigenvector_of_interpolatory_mask(linear_transitions):
    assert refinable_eigenvector(linear_transitions) == [0, 0, 0, 1]


def test_invariant_subspaces(linear_transitions):
    subspaces = invariant_subspaces(linear_transitions)
    assert subspaces.dims == (3, 2, 2)
    for vector in subspaces.u + subspaces.u1 + subspaces.u2:
        assert sum(vector) == 0
    for vector in subspaces.u1 + subspaces.u2:
        assert exact_linalg.in_span(subspaces.u, vector)


def test_restrictions(linear_transitions):
    subspaces = invariant_subspaces(linear_transitions)
    blocks = restrict(linear_transitions, subspaces.u, unique=False)
    assert len(blocks) == 6
    assert all(len(block) == 3 and len(block[0]) == 3 for block in blocks)
    assert restrict(linear_transitions, []) == []
    with pytest.raises(DimensionMismatchError):
        restrict(linear_transitions, [[F(0), F(0), F(0), F(1)]])


def test_jsr_of_single_matrix_is_spectral_radius():
    estimate = jsr_bounds([[[F(1, 2), F(3)], [F(0), F(1, 3)]]])
    assert estimate.lower == pytest.approx(0.5)
    assert estimate.upper == pytest.approx(0.5)


def test_jsr_of_triangular_family():
    family = [[[F(1, 2), F(1)], [F(0), F(1, 3)]], [[F(1, 4), F(0)], [F(0), F(1, 5)]]]
    assert [len(block[0]) for block in triangular_blocks(family)] == [1, 1]
    estimate = jsr_bounds(family)
    assert estimate.lower == pytest.approx(0.5)
    assert estimate.upper == pytest.approx(0.5)
    assert estimate.blocks == (1, 1)


def test_jsr_of_shear_pair():
    golden = (1 + sqrt(5)) / 2
    family = [[[1, 1], [0, 1]], [[1, 0], [1, 1]]]
    estimate = jsr_bounds(family, depth=8, norms=("spectral", "ellipsoid", "one"))
    assert estimate.lower == pytest.approx(golden, rel=1e-9)
    assert golden - 1e-9 <= estimate.upper < 1.8
    assert estimate.width >= 0


def test_jsr_of_float_family_skips_block_reduction():
    family = np.array([[[0.5, 0.1], [0.0, 0.4]], [[0.3, 0.0], [0.2, 0.45]]])
    estimate = jsr_bounds(list(family), depth=6)
    assert estimate.lower <= estimate.upper
    assert estimate.lower >= spectral_radii(family).max() - 1e-12


def test_jsr_rejects_invalid_input():
    with pytest.raises(DimensionMismatchError):
        jsr_bounds([])
    with pytest.raises(DimensionMismatchError):
        jsr_bounds([[[1, 0], [0, 1]], [[1]]])
    with pytest.raises(ValueError):
        jsr_bounds([[[1, 0], [0, 1]]], depth=0)
    with pytest.raises(ValueError):
        jsr_bounds([[[1, 1], [0, 1]], [[1, 0], [1, 1]]], norms=("frobenius",))


def test_ellipsoid_transform_keeps_spectrum():
    stack = np.array([[[1.0, 2.0], [0.0, 0.5]], [[0.3, 0.0], [1.0, 0.2]]])
    transformed = ellipsoid_transform(stack)
    assert np.allclose(spectral_radii(transformed), spectral_radii(stack))


@pytest.mark.parametrize("lower, upper, expected", [
    (0.4, 0.6, Continuity.CONTINUOUS),
    (1.0, 1.2, Continuity.NOT_CONTINUOUS),
    (0.9, 1.1, Continuity.INCONCLUSIVE),
])
def test_continuity_verdict(lower, upper, expected):
    assert continuity_verdict(JsrEstimate(lower, upper, 1)) == expected


def test_holder_exponent_of_linear_mask():
    result = holder_exponent(aniso_interp_symbol(D23, 1), depth=4)
    assert result.dims == (3, 2, 2)
    assert result.rho.lower == pytest.approx(0.5, abs=1e-9)
    assert result.rho.upper < 0.6
    assert result.continuity == Continuity.CONTINUOUS
    assert result.alpha_high == pytest.approx(1.0, abs=1e-6)
    assert 0.5 < result.alpha_low <= result.alpha_high + 1e-12
    row = result.to_dict()
    assert row["continuity"] == "continuous"
    assert row["dims"] == [3, 2, 2]


def test_holder_exponent_needs_bivariate_mask():
    with pytest.raises(MaskParameterError):
        holder_exponent(dd_symbol(3, 1))
