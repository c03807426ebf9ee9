"""
Parses command line arguments.
"""

import argparse
from typing import List, Optional

from experiments.problems import PROBLEMS
from multigrid.smoother import ORDERS
from schemes.scheme_factory import FAMILIES
from tools import constants

# pylint: disable=missing-function-docstring


class ArgumentsParser:
    """
    Parses command line arguments: one sub-command and its options.
    Options that are not given are None, so that the config values apply.
    """

    def __init__(self):
        """
        Constructor
        """
        self.argument_parser = argparse.ArgumentParser(prog=constants.PROGRAM_NAME,
            description="Builds anisotropic subdivision masks, analyses them and uses them as grid transfer operators of a V-cycle.",
            epilog="Results go to stdout unless --out is given; messages go to stderr.",
            formatter_class=SubdivMgHelpFormatter)
        self._initialize_arguments()
        self.arguments = None


    def _value(self, name: str):
        return getattr(self.arguments, name, None)

    @property
    def command(self):
        return self.arguments.command

    @property
    def config_file_name(self):
        return self._value("config")

    @property
    def out_dir(self):
        return self._value("out")

    @property
    def output_format(self):
        return self._value("format")

    @property
    def verbose(self):
        return bool(self._value("verbose"))

    @property
    def no_color(self):
        return bool(self._value("no_color"))

    @property
    def family(self):
        return self._value("family")

    @property
    def m(self):
        return self._value("m")

    @property
    def n(self):
        return self._value("n")

    @property
    def ell(self):
        return self._value("ell")

    @property
    def mask_file(self):
        return self._value("mask_file")

    @property
    def max_degree(self):
        return self._value("max_degree")

    @property
    def depth(self):
        return self._value("depth")

    @property
    def max_nodes(self):
        return self._value("max_nodes")

    @property
    def norms(self):
        return self._value("norms")

    @property
    def n1(self):
        return self._value("n1")

    @property
    def n2(self):
        return self._value("n2")

    @property
    def problem(self):
        return self._value("problem")

    @property
    def eps(self):
        return self._value("eps")

    @property
    def schedule(self):
        return self._value("schedule")

    @property
    def h(self):
        return self._value("h")

    @property
    def tol(self):
        return self._value("tol")

    @property
    def max_iter(self):
        return self._value("max_iter")

    @property
    def nu_pre(self):
        return self._value("nu_pre")

    @property
    def nu_post(self):
        return self._value("nu_post")

    @property
    def nu_first_level(self):
        return self._value("nu_first_level")

    @property
    def sweep_order(self):
        return self._value("sweep_order")

    @property
    def offset_shift(self):
        return self._value("offset_shift")

    @property
    def residuals(self):
        return bool(self._value("residuals"))

    @property
    def table_id(self):
        return self._value("id")

    @property
    def cases(self):
        return self._value("case")

    @property
    def schemes(self):
        return self._value("scheme")

    @property
    def include_slow(self):
        return bool(self._value("slow"))

    @property
    def workers(self):
        return self._value("workers")

    @property
    def experiment_file(self):
        return self._value("experiments")

    def parse_arguments(self, argv: Optional[List[str]] = None):
        self.arguments = self.argument_parser.parse_args(argv)


    def _initialize_arguments(self):
        common = argparse.ArgumentParser(add_help=False)
        common.add_argument("-c", "--config", type=str, help="path to a config file (optional)")
        common.add_argument("--out", type=str, help="output directory (default: stdout)")
        common.add_argument("--format", choices=constants.OUTPUT_FORMATS, help="output format")
        common.add_argument("-v", "--verbose", action="store_true", help="print detailed messages and progress bars")
        common.add_argument("--no-color", dest="no_color", action="store_true", help="disable colored messages")

        family = argparse.ArgumentParser(add_help=False)
        family.add_argument("--family", choices=FAMILIES, help="mask family")
        family.add_argument("--m", type=int, help="second dilation factor of diag(2,m) (univariate factor for 'dd')")
        family.add_argument("--n", type=int, help="order of the mask")
        family.add_argument("--ell", type=int, help="reproduction parameter of the 'approx' family")
        family.add_argument("--mask-file", dest="mask_file", type=str, help="exact-rational JSON mask file, replaces --family")

        subparsers = self.argument_parser.add_subparsers(dest="command", metavar="command", required=True)
        subparsers.add_parser("mask", parents=[common, family], formatter_class=SubdivMgHelpFormatter,
                              help="print the coefficient matrix of a mask")

        analyze = subparsers.add_parser("analyze", parents=[common, family], formatter_class=SubdivMgHelpFormatter,
                                        help="interpolation, generation and reproduction degrees, sum rules")
        analyze.add_argument("--max-degree", dest="max_degree", type=int, help="degree search bound (0: automatic)")

        regularity = subparsers.add_parser("regularity", parents=[common, family], formatter_class=SubdivMgHelpFormatter,
                                           help="continuity and Hoelder exponent via joint spectral radius bounds")
        self._add_regularity_arguments(regularity)

        solve = subparsers.add_parser("solve", parents=[common, family], formatter_class=SubdivMgHelpFormatter,
                                      help="solve a model problem with the mask as transfer operator")
        solve.add_argument("--n1", type=int, help="finest grid size along the first direction")
        solve.add_argument("--n2", type=int, help="finest grid size along the second direction")
        solve.add_argument("--problem", choices=PROBLEMS, help="model problem")
        solve.add_argument("--eps", type=float, help="anisotropy of the 'aniso' problem")
        solve.add_argument("--schedule", choices=constants.SCHEDULES, help="level schedule")
        solve.add_argument("--h", type=int, help="anisotropic levels of the mixed schedule")
        solve.add_argument("--tol", type=float, help="relative residual tolerance")
        solve.add_argument("--max-iter", dest="max_iter", type=int, help="maximum number of V-cycles")
        solve.add_argument("--nu-pre", dest="nu_pre", type=int, help="pre-smoothing sweeps")
        solve.add_argument("--nu-post", dest="nu_post", type=int, help="post-smoothing sweeps")
        solve.add_argument("--nu-first-level", dest="nu_first_level", type=int, help="pre/post sweeps on the finest level (0: as elsewhere)")
        solve.add_argument("--sweep-order", dest="sweep_order", choices=ORDERS, help="Gauss-Seidel sweep order")
        solve.add_argument("--offset-shift", dest="offset_shift", type=int, help="shift of the coarse-to-fine node map")
        solve.add_argument("--residuals", action="store_true", help="export the residual history")

        table = subparsers.add_parser("table", parents=[common], formatter_class=SubdivMgHelpFormatter,
                                      help="reproduce a benchmark table")
        table.add_argument("--id", type=int, choices=(1, 2, 3, 4), help="table id")
        table.add_argument("--case", type=int, action="append", choices=(1, 2), help="case filter (repeatable)")
        table.add_argument("--scheme", type=str, action="append", help="scheme key filter, e.g. P1 or a1_m3 (repeatable)")
        table.add_argument("--slow", action="store_true", help="include the slow rows")
        table.add_argument("--workers", type=int, help="parallel worker processes (default: $SUBDIVMG_WORKERS or 1)")
        table.add_argument("--experiments", type=str, help="JSON file with a list of experiments to run instead of a table")
        self._add_regularity_arguments(table)


    @staticmethod
    def _add_regularity_arguments(parser: argparse.ArgumentParser):
        parser.add_argument("--depth", type=int, help="maximum product length of the JSR search")
        parser.add_argument("--max-nodes", dest="max_nodes", type=int, help="node budget of the JSR search")
        parser.add_argument("--norms", type=lambda value: [v.strip() for v in value.split(",") if v.strip()],
                            help="comma separated norms for the JSR upper bound")



class SubdivMgHelpFormatter(argparse.HelpFormatter):
    """
    Shows the sub-command before the options in the usage line.

    Args:
        argparse (argparse.HelpFormatter): base argparse HelpFormatter class
    """
    def _format_usage(self, usage, actions, groups, prefix):
        if prefix is None:
            prefix = 'usage: '

        if usage is not None:
            usage = usage % dict(prog=self._prog)
        elif not actions:
            usage = f"{self._prog}"
        else:
            positionals = [action for action in actions if not action.option_strings]
            optionals = [action for action in actions if action.option_strings]
            action_usage = self._format_actions_usage(positionals + optionals, groups)
            usage = ' '.join([s for s in [self._prog, action_usage] if s])
        return f"{prefix}{usage}\n\n"
