"""
Builds anisotropic subdivision masks in exact arithmetic, analyses their polynomial
generation, reproduction and regularity, and uses them as grid transfer operators of a
geometric V-cycle for (anisotropic) Laplacian problems.
"""

from datetime import datetime
import os
import sys
import time
from typing import List, Optional

import numpy as np
import semantic_version

from analysis.scheme_analyzer import analyze_mask, check_sum_rules
from analysis.vcycle_conditions import vcycle_gate
from experiments.problems import build_rhs
from experiments.schedules import mixed_schedule, uniform_schedule
from experiments.table_definitions import load_experiment_file
from experiments.table_runner import run_regularity_table, run_specs, run_table
from export.data_exporter import DataExporter
from multigrid.stencil import Stencil
from multigrid.vcycle import MultigridSolver
from regularity.holder import holder_exponent
from schemes.mask import Mask
from schemes.scheme_factory import build_mask, load_mask_file
from tools import constants, tools
from tools.arguments_parser import ArgumentsParser
from tools.config_parser import ConfigParser
from tools.exceptions import MaskParameterError

os.environ['OPENBLAS_NUM_THREADS'] = '1'  # prevents threads creation on clusters


def _load_mask(config_parser: ConfigParser) -> Mask:
    if config_parser.mask__mask_file:
        return load_mask_file(config_parser.mask__mask_file)
    return build_mask(config_parser.mask__family, config_parser.mask__m, config_parser.mask__n, config_parser.mask__ell)


def run_mask(config_parser: ConfigParser, arguments_parser: ArgumentsParser, exporter: DataExporter):
    mask = _load_mask(config_parser)
    tools.print_info_message(f"Mask '{mask.label}' with dilation {mask.dilation}: {mask.nonzero_count()} nonzeros, "
                             f"sum {mask.coefficient_sum()}")
    exporter.export_mask(mask)


def run_analyze(config_parser: ConfigParser, arguments_parser: ArgumentsParser, exporter: DataExporter):
    mask = _load_mask(config_parser)
    report = analyze_mask(mask, config_parser.analysis__max_degree or None).to_dict()
    if report["generation_degree"] >= 0:
        report["sum_rules_order"] = report["generation_degree"] + 1
        if not check_sum_rules(mask, report["sum_rules_order"]):
            tools.print_error_message(f"Sum rules of order {report['sum_rules_order']} fail for '{mask.label}' "
                                      f"although its generation degree is {report['generation_degree']}.")
    if mask.dilation.arity == 2:
        report["vcycle_premises"] = vcycle_gate(mask).passed
    exporter.export_record("analysis", report)


def run_regularity(config_parser: ConfigParser, arguments_parser: ArgumentsParser, exporter: DataExporter):
    mask = _load_mask(config_parser)
    result = holder_exponent(mask, depth=config_parser.regularity__depth, max_nodes=config_parser.regularity__max_nodes,
                             norms=config_parser.regularity__norms)
    tools.print_info_message(f"rho(V) in [{result.rho.lower:.6f}, {result.rho.upper:.6f}], "
                             f"alpha in [{result.alpha_low:.6f}, {result.alpha_high:.6f}]: {result.continuity}")
    exporter.export_record("regularity", result.to_dict())


def run_solve(config_parser: ConfigParser, arguments_parser: ArgumentsParser, exporter: DataExporter):
    mask = _load_mask(config_parser)
    if mask.dilation.arity != 2:
        raise MaskParameterError("The solver needs a bivariate transfer mask.")
    gate = vcycle_gate(mask)
    if not gate.passed:
        tools.print_warning_message(f"Mask '{mask.label}' does not satisfy the V-cycle premises (generation degree "
                                    f"{gate.generation_degree}, p(1) = |det M|: {gate.normalized}).")
    dims = (config_parser.multigrid__n1, config_parser.multigrid__n2)
    eps = config_parser.multigrid__eps if config_parser.multigrid__problem == "aniso" else 1.0
    first_level = config_parser.multigrid__nu_first_level
    options = {"eps": eps, "smoothing": (config_parser.multigrid__nu_pre, config_parser.multigrid__nu_post),
               "first_level_smoothing": (first_level, first_level) if first_level else None,
               "shift": config_parser.multigrid__offset_shift, "sweep_order": config_parser.multigrid__sweep_order,
               "transfer_name": mask.label}
    stencil = Stencil.from_mask(mask)
    if config_parser.multigrid__schedule == "mixed":
        plan = mixed_schedule(dims, mask.dilation.factors[1], config_parser.multigrid__h, stencil, **options)
    else:
        plan = uniform_schedule(dims, mask.dilation.factors, stencil, **options)
    for line in plan.describe():
        tools.print_info_message(line, 2)
    b, exact = build_rhs(dims, eps)
    start = time.perf_counter()
    result = MultigridSolver(plan).solve(b, config_parser.multigrid__tol, config_parser.multigrid__max_iter)
    seconds = time.perf_counter() - start
    tools.print_info_message(f"{result.iterations} V-cycles, rate {result.conv_rate:.4f}, {seconds:.2f} s")
    exporter.export_record("solve", {
        "scheme": mask.label, "dilation": str(mask.dilation), "n1": dims[0], "n2": dims[1], "eps": eps,
        "schedule": config_parser.multigrid__schedule, "levels": len(plan.levels), "iters": result.iterations,
        "conv_rate": result.conv_rate, "converged": result.converged, "final_ratio": result.final_ratio,
        "max_error": float(np.max(np.abs(result.x - exact))), "gen_degree": gate.generation_degree,
        "nonzeros": mask.nonzero_count(), "seconds": seconds})
    if arguments_parser.residuals:
        exporter.export_residual_history(result.residual_history)


def run_tables(config_parser: ConfigParser, arguments_parser: ArgumentsParser, exporter: DataExporter):
    workers = config_parser.experiments__workers or None
    if config_parser.experiments__experiment_file:
        rows = run_specs(load_experiment_file(config_parser.experiments__experiment_file), workers)
        exporter.export_table(0, [row.to_dict() for row in rows])
        return
    for table_id in config_parser.experiments__tables:
        tools.print_info_message(f"TABLE {table_id}", 0)
        if table_id == 1:
            rows = run_regularity_table(config_parser.regularity__depth, config_parser.regularity__max_nodes,
                                        config_parser.experiments__schemes or None)
            exporter.export_records("table1", rows)
            continue
        rows = run_table(table_id, config_parser.experiments__cases or None, config_parser.experiments__schemes or None,
                         config_parser.experiments__include_slow, workers)
        exporter.export_table(table_id, [row.to_dict() for row in rows])


COMMAND_HANDLERS = {"mask": run_mask, "analyze": run_analyze, "regularity": run_regularity,
                    "solve": run_solve, "table": run_tables}


def dispatch(argv: Optional[List[str]] = None) -> int:
    """
    Runs one sub-command.

    Returns
    -------
    int
        0 on success, 1 on a domain error, 2 on a usage error
    """
    arguments_parser = ArgumentsParser()
    try:
        arguments_parser.parse_arguments(argv)
    except SystemExit as exit_request:  # argparse usage errors and --help
        return constants.EXIT_USAGE_ERROR if exit_request.code else constants.EXIT_SUCCESS

    tools.reset_counters()
    start_time = time.time()
    status = constants.EXIT_SUCCESS
    try:
        version = semantic_version.Version(constants.PROGRAM_VERSION)
        tools.print_info_message(f"{constants.PROGRAM_NAME} v. {version} <===", 0)
        tools.print_info_message(f"'{arguments_parser.command}' started on: {datetime.now().strftime('%d/%m/%Y %H:%M:%S')}")

        config_parser = ConfigParser()
        if arguments_parser.config_file_name:
            config_parser.parse_config(arguments_parser.config_file_name)
        config_parser.parse_cli_arguments(arguments_parser)  # the parameters provided in command line override the parameters from the config file

        tools.COLORS_ENABLED = config_parser.misc__print_color_messages
        tools.VERBOSE = config_parser.misc__verbose

        if config_parser.misc__write_parameters and config_parser.misc__out_dir:
            config_parser.write_parameters(config_parser.misc__out_dir)

        exporter = DataExporter(config_parser.misc__out_dir, config_parser.misc__format)
        COMMAND_HANDLERS[arguments_parser.command](config_parser, arguments_parser, exporter)

    except Exception as exception:  # pylint: disable=broad-except
        tools.print_exception_message(f"Exception raised: {exception}", True)
        status = constants.EXIT_DOMAIN_ERROR

    finally:
        end_time = time.time()
        tools.print_final_statistics(start_time, end_time)
    return status


def main():
    """
    Program entry point
    """
    sys.exit(dispatch())


if __name__ == '__main__':
    main()
