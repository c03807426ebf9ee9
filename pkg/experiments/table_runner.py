"""
Runs the benchmark tables: one V-cycle solve per (scheme, case) for the solver tables,
and the regularity analysis of the anisotropic interpolatory masks.
"""

from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
import os
from typing import Dict, List, Optional, Sequence

from analysis.vcycle_conditions import vcycle_gate
from experiments.problems import build_rhs
from experiments.table_definitions import REGULARITY_REFERENCE, ExperimentSpec, table_specs
from multigrid.stencil import Stencil
from multigrid.vcycle import MultigridSolver, SolveResult
from regularity.holder import holder_exponent
from schemes.scheme_factory import build_mask
from tools import tools
from tools.exceptions import MaskParameterError

WORKERS_VARIABLE = "SUBDIVMG_WORKERS"


@dataclass
class ResultRow:
    """
    Outcome of one experiment.
    """
    table: int
    scheme: str
    dilation: str
    case: int
    n1: int
    n2: int
    iters: Optional[int] = None
    conv_rate: Optional[float] = None
    gen_degree: Optional[int] = None
    seconds: Optional[float] = None
    nonzeros: Optional[int] = None
    levels: Optional[int] = None
    converged: bool = False
    expected_iters: Optional[int] = None
    expected_rate: Optional[float] = None
    expected_gen_degree: Optional[int] = None
    status: str = "ok"

    def to_dict(self) -> Dict:
        return asdict(self)


@tools.timeit
def _timed_solve(solver: MultigridSolver, b, tol: float, max_iter: int) -> SolveResult:
    return solver.solve(b, tol, max_iter)


def run_experiment(spec: ExperimentSpec) -> ResultRow:
    """
    Builds the transfer mask, checks the V-cycle premises, builds the level plan and the
    right-hand side, and solves. Failures are recorded in the row status.
    """
    entry = spec.entry
    row = ResultRow(table=spec.table, scheme=entry.key, dilation=entry.dilation, case=spec.case, n1=spec.n0[0],
                    n2=spec.n0[1], expected_iters=spec.expected_iterations, expected_rate=spec.expected_rate,
                    expected_gen_degree=entry.generation_degree)
    try:
        mask = entry.build()
        gate = vcycle_gate(mask)
        row.gen_degree, row.nonzeros = gate.generation_degree, mask.nonzero_count()
        if not gate.passed:
            tools.print_warning_message(f"{spec.spec_id}: mask '{mask.label}' fails the V-cycle premises "
                                        f"(generation degree {gate.generation_degree}, normalized {gate.normalized}).")
        if gate.generation_degree != entry.generation_degree:
            tools.print_error_message(f"{spec.spec_id}: generation degree {gate.generation_degree} differs from "
                                      f"the expected {entry.generation_degree}.")
        plan = spec.plan(Stencil.from_mask(mask))
        for line in plan.describe():
            tools.print_info_message(f"{spec.spec_id} {line}", 3)
        b, _ = build_rhs(spec.n0, spec.eps)
        times = {}
        result = _timed_solve(MultigridSolver(plan), b, spec.tol, spec.max_iter, log_time=times, log_name="SOLVE")
        row.iters, row.conv_rate, row.converged = result.iterations, result.conv_rate, result.converged
        row.levels, row.seconds = len(plan.levels), times["SOLVE"] / 1000
        if not result.converged:
            row.status = "not converged"
    except Exception as exception:  # pylint: disable=broad-except
        tools.print_exception_message(f"{spec.spec_id} failed: {exception}")
        row.status = f"failed: {exception}"
    return row


def worker_count(workers: Optional[int] = None) -> int:
    """ Explicit value first, then the environment variable, else 1. """
    if workers:
        return max(1, int(workers))
    value = os.environ.get(WORKERS_VARIABLE, "")
    return max(1, int(value)) if value.isdigit() else 1


def run_specs(specs: Sequence[ExperimentSpec], workers: Optional[int] = None) -> List[ResultRow]:
    """
    Runs experiments, in parallel processes when more than one worker is requested.
    Rows come back in the order of the specs.
    """
    count = worker_count(workers)
    if count == 1 or len(specs) <= 1:
        return [run_experiment(spec) for spec in tools.progress_bar(specs, total=len(specs), desc="Experiments")]
    tools.print_info_message(f"Running {len(specs)} experiments on {count} workers...", 2)
    with ProcessPoolExecutor(max_workers=count) as executor:
        return list(tools.progress_bar(executor.map(run_experiment, specs), total=len(specs), desc="Experiments"))


def run_table(table_id: int, cases: Optional[Sequence[int]] = None, schemes: Optional[Sequence[str]] = None,
              include_slow: bool = False, workers: Optional[int] = None) -> List[ResultRow]:
    """
    Reproduces a solver table (2, 3 or 4), optionally restricted to some cases and schemes.
    """
    specs = table_specs(table_id, cases, schemes, include_slow)
    if not specs:
        tools.print_warning_message(f"No experiment of table {table_id} matches the filters.")
        return []
    tools.print_info_message(f"Table {table_id}: {len(specs)} experiments")
    rows = run_specs(specs, workers)
    for row in rows:
        if row.status == "ok" and row.expected_iters is not None:
            tools.print_info_message(f"{row.scheme} {row.dilation} case {row.case}: {row.iters} iterations "
                                     f"(expected {row.expected_iters}), rate {row.conv_rate:.4f} (expected {row.expected_rate})", 2)
    return rows


def regularity_row(m: int, n: int, depth: int = 8, max_nodes: int = 200000) -> Dict:
    """ Hoelder regularity row of a_{M,n} for M = diag(2, m), with the published values. """
    result = {"scheme": f"a{n}_m{m}", **holder_exponent(build_mask("interp", m, n), depth=depth, max_nodes=max_nodes).to_dict()}
    reference = REGULARITY_REFERENCE.get((m, n))
    if reference:
        result.update({"expected_rho": reference[0], "expected_rho1": reference[1],
                       "expected_rho2": reference[2], "expected_alpha": reference[3]})
    return result


def run_regularity_table(depth: int = 8, max_nodes: int = 200000, schemes: Optional[Sequence[str]] = None) -> List[Dict]:
    """
    Reproduces the regularity table for a_{M,1}, a_{M,2} with M = diag(2,3), diag(2,5).
    Scheme filters use the keys 'a1_m3', 'a2_m3', 'a1_m5', 'a2_m5'.
    """
    rows = []
    for m, n in REGULARITY_REFERENCE:
        if schemes and f"a{n}_m{m}" not in schemes:
            continue
        try:
            rows.append(regularity_row(m, n, depth, max_nodes))
        except MaskParameterError as exception:
            tools.print_exception_message(f"Regularity of a_{{M,{n}}} with m={m} failed: {exception}")
    return rows
