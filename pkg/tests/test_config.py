import pytest

from tools.arguments_parser import ArgumentsParser
from tools.config_parser import ConfigParser
from tools.exceptions import ConfigError


def _arguments(argv):
    arguments_parser = ArgumentsParser()
    arguments_parser.parse_arguments(argv)
    return arguments_parser


def test_defaults():
    config_parser = ConfigParser()
    assert config_parser.mask__family == "interp"
    assert (config_parser.mask__m, config_parser.mask__n, config_parser.mask__ell) == (3, 1, 0)
    assert (config_parser.multigrid__n1, config_parser.multigrid__n2) == (127, 127)
    assert config_parser.multigrid__tol == 1e-7
    assert config_parser.regularity__norms == ["spectral", "ellipsoid"]
    assert config_parser.experiments__tables == [2]
    assert config_parser.experiments__cases == []
    assert not config_parser.experiments__include_slow
    assert config_parser.misc__format == "csv"
    assert config_parser.misc__out_dir == ""


def test_config_file(tmp_path):
    config = tmp_path / "run.cfg"
    config.write_text("[multigrid]\nn1 = 63  # finest grid\nproblem = aniso\neps = 0.001\n\n"
                      "[experiments]\ntables = 3, 4\ncases = 1\nschemes = P1, a1_m3\n")
    config_parser = ConfigParser()
    config_parser.parse_config(str(config))
    assert config_parser.multigrid__n1 == 63
    assert config_parser.multigrid__n2 == 127
    assert config_parser.multigrid__eps == 0.001
    assert config_parser.experiments__tables == [3, 4]
    assert config_parser.experiments__cases == [1]
    assert config_parser.experiments__schemes == ["P1", "a1_m3"]


@pytest.mark.parametrize("content", [
    "[multigrid]\neps = 2\n",
    "[multigrid]\neps = 0\n",
    "[multigrid]\nn1 = many\n",
    "[multigrid]\nsweep_order = sideways\n",
    "[mask]\nfamily = spline\n",
    "[mask]\nm = 1\n",
    "[regularity]\nnorms = frobenius\n",
    "[experiments]\ntables = 5\n",
    "[misc]\nformat = xlsx\n",
    "no section header\n",
])
def test_invalid_config(tmp_path, content):
    config = tmp_path / "bad.cfg"
    config.write_text(content)
    with pytest.raises(ConfigError):
        ConfigParser().parse_config(str(config))


def test_missing_config(tmp_path):
    with pytest.raises(ConfigError):
        ConfigParser().parse_config(str(tmp_path / "absent.cfg"))


def test_cli_overrides():
    config_parser = ConfigParser()
    config_parser.parse_cli_arguments(_arguments(["solve", "--n1", "31", "--problem", "aniso", "--eps", "0.5",
                                                  "--schedule", "mixed", "--h", "1", "-v", "--no-color"]))
    assert config_parser.multigrid__n1 == 31
    assert config_parser.multigrid__eps == 0.5
    assert config_parser.multigrid__schedule == "mixed"
    assert config_parser.multigrid__h == 1
    assert config_parser.multigrid__max_iter == 1000
    assert config_parser.misc__verbose
    assert not config_parser.misc__print_color_messages


def test_table_overrides():
    config_parser = ConfigParser()
    config_parser.parse_cli_arguments(_arguments(["table", "--id", "3", "--case", "2", "--scheme", "K",
                                                  "--scheme", "B31", "--slow", "--workers", "2"]))
    assert config_parser.experiments__tables == [3]
    assert config_parser.experiments__cases == [2]
    assert config_parser.experiments__schemes == ["K", "B31"]
    assert config_parser.experiments__include_slow
    assert config_parser.experiments__workers == 2


def test_cli_override_is_checked():
    with pytest.raises(ConfigError):
        ConfigParser().parse_cli_arguments(_arguments(["solve", "--eps", "1.5"]))


def test_write_parameters(tmp_path):
    config_parser = ConfigParser()
    config_parser.multigrid__n1 = 255
    config_parser.write_parameters(str(tmp_path))
    written, = tmp_path.glob("config__*.cfg")
    reread = ConfigParser()
    reread.parse_config(str(written))
    assert reread.multigrid__n1 == 255
