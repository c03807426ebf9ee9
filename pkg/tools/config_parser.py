"""
Reads a config file and provides the parsed information as properties.
6 families of properties:
    1. mask related
    2. analysis related
    3. regularity related
    4. multigrid related
    5. experiments related
    6. miscellaneous
"""

import configparser
from datetime import datetime
import os.path

from experiments.problems import PROBLEMS
from multigrid.smoother import ORDERS
from regularity.jsr import NORMS
from schemes.scheme_factory import FAMILIES
from tools import constants, tools
from tools.arguments_parser import ArgumentsParser
from tools.exceptions import ConfigError

# pylint: disable=missing-function-docstring

DEFAULT_CONFIG = {
    "mask": {"family": "interp", "m": "3", "n": "1", "ell": "0", "mask_file": ""},
    "analysis": {"max_degree": "0"},
    "regularity": {"depth": str(constants.DEFAULT_JSR_DEPTH), "max_nodes": str(constants.DEFAULT_JSR_MAX_NODES),
                   "norms": "spectral, ellipsoid"},
    "multigrid": {"n1": "127", "n2": "127", "tol": str(constants.DEFAULT_TOLERANCE),
                  "max_iter": str(constants.DEFAULT_MAX_ITERATIONS), "nu_pre": "1", "nu_post": "1",
                  "nu_first_level": "0", "sweep_order": "forward", "offset_shift": "0", "problem": "laplacian",
                  "eps": "1.0", "schedule": "uniform", "h": "0"},
    "experiments": {"tables": "2", "cases": "", "schemes": "", "include_slow": "no", "workers": "0",
                    "experiment_file": ""},
    "misc": {"print_color_messages": "yes", "verbose": "no", "out_dir": "", "format": "csv", "write_parameters": "no"},
}


def _split_list(value: str):
    return [item.strip() for item in value.split(",") if item.strip()]


class ConfigParser:
    """ Reads a config file and provides the parsed information as properties.
        Every value has a built-in default, so the config file is optional;
        command line arguments override the config values.
    """

    def __init__(self):
        self.parser = configparser.ConfigParser(inline_comment_prefixes="#")
        self.parser.read_dict(DEFAULT_CONFIG)


    ####### MASK RELATED #######
    @property
    def mask__family(self):
        return self.parser['mask']['family']

    @mask__family.setter
    def mask__family(self, value):
        self.parser['mask']['family'] = value

    @property
    def mask__m(self):
        return self.parser.getint('mask', 'm')

    @mask__m.setter
    def mask__m(self, value):
        self.parser['mask']['m'] = str(value)

    @property
    def mask__n(self):
        return self.parser.getint('mask', 'n')

    @mask__n.setter
    def mask__n(self, value):
        self.parser['mask']['n'] = str(value)

    @property
    def mask__ell(self):
        return self.parser.getint('mask', 'ell')

    @mask__ell.setter
    def mask__ell(self, value):
        self.parser['mask']['ell'] = str(value)

    @property
    def mask__mask_file(self):
        return self.parser['mask']['mask_file']

    @mask__mask_file.setter
    def mask__mask_file(self, value):
        self.parser['mask']['mask_file'] = value


    ####### ANALYSIS RELATED #######
    @property
    def analysis__max_degree(self):  # 0: bound derived from the mask
        return self.parser.getint('analysis', 'max_degree')

    @analysis__max_degree.setter
    def analysis__max_degree(self, value):
        self.parser['analysis']['max_degree'] = str(value)


    ####### REGULARITY RELATED #######
    @property
    def regularity__depth(self):
        return self.parser.getint('regularity', 'depth')

    @regularity__depth.setter
    def regularity__depth(self, value):
        self.parser['regularity']['depth'] = str(value)

    @property
    def regularity__max_nodes(self):
        return self.parser.getint('regularity', 'max_nodes')

    @regularity__max_nodes.setter
    def regularity__max_nodes(self, value):
        self.parser['regularity']['max_nodes'] = str(value)

    @property
    def regularity__norms(self):
        return _split_list(self.parser['regularity']['norms'])

    @regularity__norms.setter
    def regularity__norms(self, value):
        self.parser['regularity']['norms'] = ", ".join(value)


    ####### MULTIGRID RELATED #######
    @property
    def multigrid__n1(self):
        return self.parser.getint('multigrid', 'n1')

    @multigrid__n1.setter
    def multigrid__n1(self, value):
        self.parser['multigrid']['n1'] = str(value)

    @property
    def multigrid__n2(self):
        return self.parser.getint('multigrid', 'n2')

    @multigrid__n2.setter
    def multigrid__n2(self, value):
        self.parser['multigrid']['n2'] = str(value)

    @property
    def multigrid__tol(self):
        return self.parser.getfloat('multigrid', 'tol')

    @multigrid__tol.setter
    def multigrid__tol(self, value):
        self.parser['multigrid']['tol'] = repr(value)

    @property
    def multigrid__max_iter(self):
        return self.parser.getint('multigrid', 'max_iter')

    @multigrid__max_iter.setter
    def multigrid__max_iter(self, value):
        self.parser['multigrid']['max_iter'] = str(value)

    @property
    def multigrid__nu_pre(self):
        return self.parser.getint('multigrid', 'nu_pre')

    @multigrid__nu_pre.setter
    def multigrid__nu_pre(self, value):
        self.parser['multigrid']['nu_pre'] = str(value)

    @property
    def multigrid__nu_post(self):
        return self.parser.getint('multigrid', 'nu_post')

    @multigrid__nu_post.setter
    def multigrid__nu_post(self, value):
        self.parser['multigrid']['nu_post'] = str(value)

    @property
    def multigrid__nu_first_level(self):  # 0: same as the other levels
        return self.parser.getint('multigrid', 'nu_first_level')

    @multigrid__nu_first_level.setter
    def multigrid__nu_first_level(self, value):
        self.parser['multigrid']['nu_first_level'] = str(value)

    @property
    def multigrid__sweep_order(self):
        return self.parser['multigrid']['sweep_order']

    @multigrid__sweep_order.setter
    def multigrid__sweep_order(self, value):
        self.parser['multigrid']['sweep_order'] = value

    @property
    def multigrid__offset_shift(self):
        return self.parser.getint('multigrid', 'offset_shift')

    @multigrid__offset_shift.setter
    def multigrid__offset_shift(self, value):
        self.parser['multigrid']['offset_shift'] = str(value)

    @property
    def multigrid__problem(self):
        return self.parser['multigrid']['problem']

    @multigrid__problem.setter
    def multigrid__problem(self, value):
        self.parser['multigrid']['problem'] = value

    @property
    def multigrid__eps(self):
        return self.parser.getfloat('multigrid', 'eps')

    @multigrid__eps.setter
    def multigrid__eps(self, value):
        self.parser['multigrid']['eps'] = repr(value)

    @property
    def multigrid__schedule(self):
        return self.parser['multigrid']['schedule']

    @multigrid__schedule.setter
    def multigrid__schedule(self, value):
        self.parser['multigrid']['schedule'] = value

    @property
    def multigrid__h(self):
        return self.parser.getint('multigrid', 'h')

    @multigrid__h.setter
    def multigrid__h(self, value):
        self.parser['multigrid']['h'] = str(value)


    ####### EXPERIMENTS RELATED #######
    @property
    def experiments__tables(self):
        return [int(value) for value in _split_list(self.parser['experiments']['tables'])]

    @experiments__tables.setter
    def experiments__tables(self, value):
        self.parser['experiments']['tables'] = ", ".join(str(v) for v in value)

    @property
    def experiments__cases(self):
        return [int(value) for value in _split_list(self.parser['experiments']['cases'])]

    @experiments__cases.setter
    def experiments__cases(self, value):
        self.parser['experiments']['cases'] = ", ".join(str(v) for v in value)

    @property
    def experiments__schemes(self):
        return _split_list(self.parser['experiments']['schemes'])

    @experiments__schemes.setter
    def experiments__schemes(self, value):
        self.parser['experiments']['schemes'] = ", ".join(value)

    @property
    def experiments__include_slow(self):
        return self.parser.getboolean('experiments', 'include_slow')

    @experiments__include_slow.setter
    def experiments__include_slow(self, value):
        self.parser['experiments']['include_slow'] = "yes" if value else "no"

    @property
    def experiments__workers(self):  # 0: SUBDIVMG_WORKERS or 1
        return self.parser.getint('experiments', 'workers')

    @experiments__workers.setter
    def experiments__workers(self, value):
        self.parser['experiments']['workers'] = str(value)

    @property
    def experiments__experiment_file(self):
        return self.parser['experiments']['experiment_file']

    @experiments__experiment_file.setter
    def experiments__experiment_file(self, value):
        self.parser['experiments']['experiment_file'] = value


    ####### MISCELLANEOUS #######
    @property
    def misc__print_color_messages(self):
        return self.parser.getboolean('misc', 'print_color_messages')

    @misc__print_color_messages.setter
    def misc__print_color_messages(self, value):
        self.parser['misc']['print_color_messages'] = "yes" if value else "no"

    @property
    def misc__verbose(self):
        return self.parser.getboolean('misc', 'verbose')

    @misc__verbose.setter
    def misc__verbose(self, value):
        self.parser['misc']['verbose'] = "yes" if value else "no"

    @property
    def misc__out_dir(self):  # empty: results go to stdout
        return self.parser['misc']['out_dir']

    @misc__out_dir.setter
    def misc__out_dir(self, value):
        self.parser['misc']['out_dir'] = value

    @property
    def misc__format(self):
        return self.parser['misc']['format']

    @misc__format.setter
    def misc__format(self, value):
        self.parser['misc']['format'] = value

    @property
    def misc__write_parameters(self):
        return self.parser.getboolean('misc', 'write_parameters')


    def parse_config(self, config_file_name: str):
        """ Reads the provided config file and checks it.

        Parameters
        ----------
        config_file_name : str
            path to the config file

        Raises
        ------
        ConfigError
            raised for config-related errors
        """
        tools.print_info_message(f"PARSING CONFIG FILE '{config_file_name}'...", 0)
        config_file_name = os.path.abspath(config_file_name)
        if not os.path.isfile(config_file_name):
            raise ConfigError(f"The config file '{config_file_name}' doesn't exist.")
        try:
            self.parser.read(config_file_name)
        except configparser.Error as exception:
            raise ConfigError(f"The config file '{config_file_name}' is malformed: {exception}") from exception
        self._check_config()


    def parse_cli_arguments(self, arguments_parser: ArgumentsParser):
        """
        Parses arguments provided in command line.
        If an argument is defined, it overrides the value
        of the corresponding parameter in the config.

        Parameters
        ----------
        arguments_parser : ArgumentsParser
            object containing command line arguments provided by the user
        """
        overrides = {
            "mask__family": arguments_parser.family, "mask__m": arguments_parser.m, "mask__n": arguments_parser.n,
            "mask__ell": arguments_parser.ell, "mask__mask_file": arguments_parser.mask_file,
            "analysis__max_degree": arguments_parser.max_degree,
            "regularity__depth": arguments_parser.depth, "regularity__max_nodes": arguments_parser.max_nodes,
            "regularity__norms": arguments_parser.norms,
            "multigrid__n1": arguments_parser.n1, "multigrid__n2": arguments_parser.n2,
            "multigrid__tol": arguments_parser.tol, "multigrid__max_iter": arguments_parser.max_iter,
            "multigrid__nu_pre": arguments_parser.nu_pre, "multigrid__nu_post": arguments_parser.nu_post,
            "multigrid__nu_first_level": arguments_parser.nu_first_level,
            "multigrid__sweep_order": arguments_parser.sweep_order, "multigrid__offset_shift": arguments_parser.offset_shift,
            "multigrid__problem": arguments_parser.problem, "multigrid__eps": arguments_parser.eps,
            "multigrid__schedule": arguments_parser.schedule, "multigrid__h": arguments_parser.h,
            "experiments__tables": [arguments_parser.table_id] if arguments_parser.table_id is not None else None,
            "experiments__cases": arguments_parser.cases, "experiments__schemes": arguments_parser.schemes,
            "experiments__workers": arguments_parser.workers,
            "experiments__experiment_file": arguments_parser.experiment_file,
            "misc__out_dir": arguments_parser.out_dir, "misc__format": arguments_parser.output_format,
        }
        for name, value in overrides.items():
            if value is not None:
                setattr(self, name, value)
        if arguments_parser.include_slow:
            self.experiments__include_slow = True
        if arguments_parser.verbose:
            self.misc__verbose = True
        if arguments_parser.no_color:
            self.misc__print_color_messages = False
        self._check_config()


    def write_parameters(self, out_dir):
        """
        Writes the config to the specified directory.

        Parameters
        ----------
        out_dir : str
            output directory
        """
        os.makedirs(out_dir, exist_ok=True)
        out_file_name = os.path.join(out_dir, f"config__{datetime.now().strftime('%Y-%m-%d--%H-%M-%S')}.cfg")
        with open(out_file_name, "w", encoding="utf-8") as config_file:
            self.parser.write(config_file)
        tools.print_info_message(f"Parameters are stored in '{out_file_name}'.")


    def _check_config(self):
        """ Checks the validity of the parsed values.

        Raises
        ------
        ConfigError
            raised if problems were detected in the config file
        """
        try:
            values = {section: {key: getattr(self, f"{section}__{key}") for key in DEFAULT_CONFIG[section]}
                      for section in DEFAULT_CONFIG}
        except ValueError as exception:
            raise ConfigError(f"Invalid config value: {exception}") from exception
        if self.mask__family not in FAMILIES:
            raise ConfigError(f"Unknown mask family '{self.mask__family}', expected one of {', '.join(FAMILIES)}.")
        if self.mask__mask_file and not os.path.isfile(self.mask__mask_file):
            raise ConfigError(f"The mask file '{self.mask__mask_file}' doesn't exist.")
        if self.mask__m < 2 or self.mask__n < 1 or self.mask__ell < 0:
            raise ConfigError(f"Invalid mask parameters m={self.mask__m}, n={self.mask__n}, ell={self.mask__ell}.")
        if values["regularity"]["depth"] < 1 or values["regularity"]["max_nodes"] < 1:
            raise ConfigError("The JSR depth and node budget must be positive.")
        unknown_norms = set(self.regularity__norms) - set(NORMS)
        if unknown_norms or not self.regularity__norms:
            raise ConfigError(f"Invalid JSR norms {sorted(unknown_norms)}, expected some of {', '.join(NORMS)}.")
        if self.multigrid__tol <= 0 or self.multigrid__max_iter < 1:
            raise ConfigError("The solver tolerance and iteration limit must be positive.")
        if min(self.multigrid__nu_pre, self.multigrid__nu_post, self.multigrid__nu_first_level) < 0:
            raise ConfigError("Smoothing counts cannot be negative.")
        if self.multigrid__sweep_order not in ORDERS:
            raise ConfigError(f"Unknown sweep order '{self.multigrid__sweep_order}', expected one of {', '.join(ORDERS)}.")
        if self.multigrid__problem not in PROBLEMS:
            raise ConfigError(f"Unknown problem '{self.multigrid__problem}', expected one of {', '.join(PROBLEMS)}.")
        if not 0 < self.multigrid__eps <= 1:
            raise ConfigError(f"The anisotropy must lie in (0, 1], got {self.multigrid__eps}.")
        if self.multigrid__schedule not in constants.SCHEDULES:
            raise ConfigError(f"Unknown schedule '{self.multigrid__schedule}', expected one of {', '.join(constants.SCHEDULES)}.")
        if any(table not in (1, 2, 3, 4) for table in self.experiments__tables):
            raise ConfigError(f"Unknown table ids {self.experiments__tables}, expected values in 1..4.")
        if self.experiments__experiment_file and not os.path.isfile(self.experiments__experiment_file):
            raise ConfigError(f"The experiment file '{self.experiments__experiment_file}' doesn't exist.")
        if self.misc__format not in constants.OUTPUT_FORMATS:
            raise ConfigError(f"Unknown output format '{self.misc__format}', expected one of {', '.join(constants.OUTPUT_FORMATS)}.")
