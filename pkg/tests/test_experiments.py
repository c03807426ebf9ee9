import json

import pytest

from experiments.problems import mesh_sizes
from experiments.schedules import (effective_anisotropy, factor_exponent, mixed_schedule, mixed_starting_grid,
                                   uniform_schedule)
from experiments.table_definitions import (REFERENCE_RESULTS, SCHEMES, SCHEMES_BY_KEY, ExperimentSpec,
                                           load_experiment_file, table_specs)
from experiments.table_runner import (WORKERS_VARIABLE, regularity_row, run_experiment, run_regularity_table,
                                      run_specs, run_table, worker_count)
from multigrid.stencil import Stencil
from schemes.reference_masks import bilinear_mask
from tools.exceptions import FileFormatError, PlanError

P1 = Stencil.from_mask(bilinear_mask())


@pytest.mark.parametrize("size, factor, expected", [(0, 2, 0), (1, 2, 1), (127, 2, 7), (80, 3, 4), (624, 5, 4),
                                                    (100, 2, None), (26, 2, None)])
def test_factor_exponent(size, factor, expected):
    assert factor_exponent(size, factor) == expected


def test_uniform_schedule():
    plan = uniform_schedule((127, 80), (2, 3), P1, smoothing=(1, 2), first_level_smoothing=(2, 2))
    assert [level.dims for level in plan.levels] == [(127, 80), (63, 26), (31, 8), (15, 2)]
    assert all(level.factors == (2, 3) for level in plan.levels[:-1])
    assert plan.levels[-1].transfer is None
    assert (plan.levels[0].pre_smoothing, plan.levels[0].post_smoothing) == (2, 2)
    assert (plan.levels[1].pre_smoothing, plan.levels[1].post_smoothing) == (1, 2)
    assert uniform_schedule((127, 80), (2, 3), P1, levels=1).depth == 1


def test_uniform_schedule_errors():
    with pytest.raises(PlanError):
        uniform_schedule((100, 100), (2, 2), P1)
    with pytest.raises(PlanError):
        uniform_schedule((15, 15), (2, 2), P1, levels=4)


@pytest.mark.parametrize("k1, m, h, expected", [(7, 3, 2, (127, 71)), (8, 3, 2, (255, 143)), (8, 5, 1, (255, 159)),
                                                (8, 5, 2, (255, 199))])
def test_mixed_starting_grids(k1, m, h, expected):
    assert mixed_starting_grid(k1, m, h)[0] == expected


def test_mixed_schedule():
    plan = mixed_schedule((127, 71), 3, 2, P1, eps=1e-2)
    assert [level.dims for level in plan.levels] == [(127, 71), (63, 23), (31, 7), (15, 3), (7, 1)]
    assert [level.factors for level in plan.levels] == [(2, 3), (2, 3), (2, 2), (2, 2), None]
    assert [level.transfer_name for level in plan.levels[:4]] == ["", "", "P1", "P1"]
    h1, h2 = mesh_sizes((127, 71))
    assert plan.levels[0].anisotropy == pytest.approx(1e-2 * (h2 / h1) ** 2)
    assert plan.levels[0].system.coeffs[(1, 0)] == pytest.approx(-1e-2 / h1 ** 2)


def test_mixed_schedule_errors():
    with pytest.raises(PlanError):
        mixed_schedule((127, 71), 3, -1, P1)
    with pytest.raises(PlanError):
        mixed_schedule((127, 70), 3, 2, P1)
    with pytest.raises(PlanError):
        mixed_schedule((126, 71), 3, 2, P1)


def test_effective_anisotropy():
    assert effective_anisotropy((7, 7), 0.5) == pytest.approx(0.5)
    assert effective_anisotropy((15, 7), 1.0) == pytest.approx(4.0)


def test_scheme_catalogue():
    assert len(SCHEMES) == 13
    assert SCHEMES_BY_KEY["a1_m5"].factors == (2, 5)
    assert SCHEMES_BY_KEY["K"].dilation == "diag(2,2)"
    for table in REFERENCE_RESULTS.values():
        assert set(table) == set(SCHEMES_BY_KEY)


def test_table_specs():
    assert len(table_specs(2)) == 24
    assert len(table_specs(2, include_slow=True)) == 26
    spec, = table_specs(3, cases=[1], schemes=["a1_m3"])
    assert spec.n0 == (127, 71)
    assert spec.h == 2
    assert spec.schedule == "mixed"
    assert spec.tol == 1e-5
    assert spec.first_level_smoothing == (2, 2)
    assert (spec.expected_iterations, spec.expected_rate) == (14, 0.4315)
    assert spec.spec_id == "T3-a1_m3-case1"
    assert spec.plan().depth == 4
    with pytest.raises(ValueError):
        table_specs(1)


def test_experiment_file(tmp_path):
    file_name = tmp_path / "experiments.json"
    file_name.write_text(json.dumps([{"table": 2, "scheme": "P1", "case": 1, "n0": [15, 15], "smoothing": [2, 1]}]))
    spec, = load_experiment_file(str(file_name))
    assert spec.n0 == (15, 15)
    assert spec.smoothing == (2, 1)
    file_name.write_text(json.dumps([{"table": 2, "scheme": "Q9", "case": 1, "n0": [15, 15]}]))
    with pytest.raises(FileFormatError):
        load_experiment_file(str(file_name))
    file_name.write_text(json.dumps([{"table": 2, "case": 1}]))
    with pytest.raises(FileFormatError):
        load_experiment_file(str(file_name))
    file_name.write_text(json.dumps({"table": 2}))
    with pytest.raises(FileFormatError):
        load_experiment_file(str(file_name))
    with pytest.raises(FileFormatError):
        load_experiment_file(str(tmp_path / "missing.json"))


def test_experiment_limits_are_validated(tmp_path):
    with pytest.raises(ValueError):
        ExperimentSpec(table=2, scheme="P1", case=1, n0=(15, 15), max_iter=0)
    with pytest.raises(ValueError):
        ExperimentSpec(table=2, scheme="P1", case=1, n0=(15, 15), tol=0.0)
    file_name = tmp_path / "experiments.json"
    file_name.write_text(json.dumps([{"table": 2, "scheme": "P1", "case": 1, "n0": [15, 15], "max_iter": 0}]))
    with pytest.raises(FileFormatError):
        load_experiment_file(str(file_name))


def test_run_experiment_on_small_grid():
    row = run_experiment(ExperimentSpec(table=2, scheme="P1", case=1, n0=(31, 31)))
    assert row.status == "ok"
    assert row.converged
    assert row.iters <= 15
    assert row.conv_rate < 0.3
    assert row.gen_degree == row.expected_gen_degree == 1
    assert row.levels == 5
    assert row.nonzeros == 9
    assert row.seconds >= 0


def test_run_experiment_with_anisotropic_transfer():
    row = run_experiment(ExperimentSpec(table=2, scheme="a1_m3", case=1, n0=(31, 26), max_iter=100))
    assert row.status == "ok"
    assert row.converged
    assert row.conv_rate < 0.75
    assert row.dilation == "diag(2,3)"


def test_failed_experiment_is_recorded():
    row = run_experiment(ExperimentSpec(table=2, scheme="P1", case=1, n0=(30, 31)))
    assert row.status.startswith("failed")
    assert row.iters is None


def test_worker_count(monkeypatch):
    monkeypatch.delenv(WORKERS_VARIABLE, raising=False)
    assert worker_count() == 1
    assert worker_count(3) == 3
    monkeypatch.setenv(WORKERS_VARIABLE, "4")
    assert worker_count() == 4
    assert worker_count(2) == 2
    monkeypatch.setenv(WORKERS_VARIABLE, "many")
    assert worker_count() == 1


def test_run_specs_keeps_order():
    specs = [ExperimentSpec(table=2, scheme=key, case=1, n0=(15, 15)) for key in ("K", "P1")]
    rows = run_specs(specs, workers=1)
    assert [row.scheme for row in rows] == ["K", "P1"]


def test_run_table_with_empty_filter():
    assert run_table(2, schemes=["nothing"]) == []


def test_regularity_rows():
    row = regularity_row(3, 1, depth=3)
    assert row["scheme"] == "a1_m3"
    assert row["expected_alpha"] == 1.0
    assert row["alpha_high"] == pytest.approx(1.0, abs=1e-6)
    rows = run_regularity_table(depth=3, schemes=["a1_m3"])
    assert [r["scheme"] for r in rows] == ["a1_m3"]


@pytest.mark.slow
@pytest.mark.parametrize("table_id", [2, 3, 4])
@pytest.mark.parametrize("scheme", [entry.key for entry in SCHEMES])
def test_published_iteration_counts(table_id, scheme):
    for row in run_table(table_id, schemes=[scheme]):
        assert row.status == "ok"
        assert abs(row.iters - row.expected_iters) <= max(3, round(0.1 * row.expected_iters))
        assert row.gen_degree == row.expected_gen_degree


@pytest.mark.slow
@pytest.mark.parametrize("m, n", [(3, 1), (3, 2), (5, 1), (5, 2)])
def test_published_regularity(m, n):
    row = regularity_row(m, n, depth=6)
    assert row["rho_low"] <= row["expected_rho"] + 1e-5
    assert row["rho_high"] < 1
    assert row["alpha_low"] <= row["expected_alpha"] + 1e-5
