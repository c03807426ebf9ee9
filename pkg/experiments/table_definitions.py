"""
Definitions of the benchmark tables: the schemes, the starting grids of each case, the
solver settings and the published reference values each row is compared with.
"""

from dataclasses import asdict, dataclass
import json
import os
from typing import Dict, List, Optional, Tuple

from experiments.schedules import mixed_schedule, uniform_schedule
from multigrid.stencil import Stencil
from multigrid.vcycle import LevelPlan
from schemes.mask import Mask
from schemes.scheme_factory import build_mask
from tools.exceptions import FileFormatError

TABLE_IDS = (1, 2, 3, 4)
SOLVER_TABLES = (2, 3, 4)


@dataclass(frozen=True)
class SchemeEntry:
    """
    A transfer scheme of the tables: mask family parameters and expected generation degree.
    """
    key: str
    family: str
    m: int
    n: int = 1
    ell: int = 0
    generation_degree: int = 1
    display: str = ""

    @property
    def factors(self) -> Tuple[int, int]:
        return (2, 2) if self.family in ("P1", "P2", "K") else (2, self.m)

    @property
    def dilation(self) -> str:
        return f"diag({self.factors[0]},{self.factors[1]})"

    def build(self) -> Mask:
        return build_mask(self.family, self.m, self.n, self.ell)


SCHEMES = (
    SchemeEntry("P1", "P1", 2, generation_degree=1, display="P1"),
    SchemeEntry("P2", "P2", 2, generation_degree=3, display="P2"),
    SchemeEntry("K", "K", 2, generation_degree=3, display="K"),
    SchemeEntry("a1_m3", "interp", 3, 1, generation_degree=1, display="a_{M,1}"),
    SchemeEntry("a2_m3", "interp", 3, 2, generation_degree=3, display="a_{M,2}"),
    SchemeEntry("a3_m3", "interp", 3, 3, generation_degree=5, display="a_{M,3}"),
    SchemeEntry("B20", "approx", 3, 2, 0, generation_degree=3, display="B_{2,0}"),
    SchemeEntry("B21", "approx", 3, 2, 1, generation_degree=3, display="B_{2,1}"),
    SchemeEntry("B30", "approx", 3, 3, 0, generation_degree=5, display="B_{3,0}"),
    SchemeEntry("B31", "approx", 3, 3, 1, generation_degree=5, display="B_{3,1}"),
    SchemeEntry("B32", "approx", 3, 3, 2, generation_degree=5, display="B_{3,2}"),
    SchemeEntry("a1_m5", "interp", 5, 1, generation_degree=1, display="a_{M,1}"),
    SchemeEntry("a2_m5", "interp", 5, 2, generation_degree=3, display="a_{M,2}"),
)
SCHEMES_BY_KEY = {scheme.key: scheme for scheme in SCHEMES}


@dataclass(frozen=True)
class CaseGrid:
    """ Starting grid of one case; h > 0 selects the mixed schedule with h anisotropic levels. """
    n0: Tuple[int, int]
    h: int = 0
    slow: bool = False


# second dilation factor -> case -> grid
_UNIFORM_CASES = {
    2: {1: CaseGrid((127, 127)), 2: CaseGrid((255, 255))},
    3: {1: CaseGrid((127, 80)), 2: CaseGrid((255, 242))},
    5: {1: CaseGrid((127, 124)), 2: CaseGrid((511, 624), slow=True)},
}
_ANISOTROPIC_CASES = {
    2: {1: CaseGrid((127, 127)), 2: CaseGrid((255, 255))},
    3: {1: CaseGrid((127, 71), h=2), 2: CaseGrid((255, 143), h=2)},
    5: {1: CaseGrid((255, 159), h=1), 2: CaseGrid((255, 199), h=2)},
}

TABLE_SETTINGS = {
    2: {"title": "Laplacian problem", "eps": 1.0, "tol": 1e-7, "smoothing": (1, 1), "first_level_smoothing": None,
        "cases": _UNIFORM_CASES},
    3: {"title": "Anisotropic Laplacian problem, eps = 1e-2", "eps": 1e-2, "tol": 1e-5, "smoothing": (1, 1),
        "first_level_smoothing": (2, 2), "cases": _ANISOTROPIC_CASES},
    4: {"title": "Anisotropic Laplacian problem, eps = 1e-3", "eps": 1e-3, "tol": 1e-5, "smoothing": (1, 1),
        "first_level_smoothing": (2, 2), "cases": _ANISOTROPIC_CASES},
}

# scheme -> ((case 1 iterations, rate), (case 2 iterations, rate))
REFERENCE_RESULTS = {
    2: {"P1": ((9, 0.1432), (9, 0.1374)), "P2": ((13, 0.2823), (13, 0.27)), "K": ((8, 0.1224), (8, 0.1275)),
        "a1_m3": ((28, 0.5573), (23, 0.4958)), "a2_m3": ((26, 0.5297), (22, 0.4777)),
        "a3_m3": ((26, 0.5347), (23, 0.4893)), "B20": ((33, 0.6082), (26, 0.5298)),
        "B21": ((26, 0.5298), (22, 0.4477)), "B30": ((41, 0.6718), (35, 0.6272)),
        "B31": ((24, 0.5096), (22, 0.4787)), "B32": ((26, 0.5347), (23, 0.4893)),
        "a1_m5": ((38, 0.6529), (45, 0.6969)), "a2_m5": ((38, 0.6532), (40, 0.6774))},
    3: {"P1": ((75, 0.8571), (80, 0.8658)), "P2": ((82, 0.8686), (86, 0.8744)), "K": ((61, 0.8273), (76, 0.8585)),
        "a1_m3": ((14, 0.4315), (16, 0.4807)), "a2_m3": ((14, 0.4307), (16, 0.48)),
        "a3_m3": ((14, 0.4312), (16, 0.4806)), "B20": ((13, 0.5145), (16, 0.4780)),
        "B21": ((14, 0.4307), (16, 0.48)), "B30": ((14, 0.4363), (17, 0.5003)),
        "B31": ((13, 0.4112), (15, 0.4633)), "B32": ((14, 0.4312), (16, 0.4806)),
        "a1_m5": ((20, 0.5623), (25, 0.6307)), "a2_m5": ((21, 0.5719), (26, 0.6385))},
    4: {"P1": ((294, 0.9616), (284, 0.9603)), "P2": ((295, 0.9617), (281, 0.9599)), "K": ((253, 0.9555), (251, 0.9551)),
        "a1_m3": ((33, 0.7051), (44, 0.7694)), "a2_m3": ((33, 0.7050), (44, 0.7695)),
        "a3_m3": ((33, 0.7050), (44, 0.7697)), "B20": ((30, 0.6813), (42, 0.7592)),
        "B21": ((33, 0.7050), (44, 0.7695)), "B30": ((30, 0.6807), (41, 0.7540)),
        "B31": ((31, 0.6893), (43, 0.7641)), "B32": ((33, 0.7050), (44, 0.7697)),
        "a1_m5": ((62, 0.8301), (69, 0.8462)), "a2_m5": ((62, 0.8304), (70, 0.8479))},
}

# (m, n) -> (rho(V), rho(V1), rho(V2), alpha)
REGULARITY_REFERENCE = {
    (3, 1): (0.500000, 0.500000, 0.333333, 1.0),
    (3, 2): (0.500003, 0.500002, 0.333335, 1.0),
    (5, 1): (0.500000, 0.500000, 0.200000, 1.0),
    (5, 2): (0.500004, 0.500003, 0.200002, 1.0),
}


@dataclass(frozen=True)
class ExperimentSpec:
    """
    One row entry of a benchmark table: a scheme solved on the grid of one case.
    """
    table: int
    scheme: str
    case: int
    n0: Tuple[int, int]
    eps: float = 1.0
    h: int = 0
    tol: float = 1e-7
    max_iter: int = 1000
    smoothing: Tuple[int, int] = (1, 1)
    first_level_smoothing: Optional[Tuple[int, int]] = None
    sweep_order: str = "forward"
    shift: int = 0
    slow: bool = False
    expected_iterations: Optional[int] = None
    expected_rate: Optional[float] = None

    def __post_init__(self):
        if self.tol <= 0 or self.max_iter < 1:
            raise ValueError(f"Experiment {self.spec_id} needs tol > 0 and max_iter >= 1.")

    @property
    def entry(self) -> SchemeEntry:
        return SCHEMES_BY_KEY[self.scheme]

    @property
    def spec_id(self) -> str:
        return f"T{self.table}-{self.scheme}-case{self.case}"

    @property
    def schedule(self) -> str:
        return "mixed" if self.h > 0 else "uniform"

    def plan(self, transfer: Optional[Stencil] = None) -> LevelPlan:
        """ Level plan of the experiment; the transfer stencil is built from the scheme when not given. """
        entry = self.entry
        transfer = transfer or Stencil.from_mask(entry.build())
        common = {"eps": self.eps, "smoothing": tuple(self.smoothing), "shift": self.shift, "sweep_order": self.sweep_order,
                  "first_level_smoothing": tuple(self.first_level_smoothing) if self.first_level_smoothing else None,
                  "transfer_name": entry.key}
        if self.h > 0:
            return mixed_schedule(self.n0, entry.m, self.h, transfer, **common)
        return uniform_schedule(self.n0, entry.factors, transfer, **common)

    def to_dict(self) -> Dict:
        return asdict(self)


def table_specs(table_id: int, cases=None, schemes=None, include_slow: bool = False) -> List[ExperimentSpec]:
    """
    Experiment rows of a solver table, filtered by case numbers and scheme keys.
    """
    if table_id not in SOLVER_TABLES:
        raise ValueError(f"Table {table_id} is not a solver table, expected one of {SOLVER_TABLES}.")
    settings = TABLE_SETTINGS[table_id]
    specs = []
    for entry in SCHEMES:
        if schemes and entry.key not in schemes:
            continue
        for case, grid in settings["cases"][entry.factors[1]].items():
            if cases and case not in cases:
                continue
            if grid.slow and not include_slow:
                continue
            iterations, rate = REFERENCE_RESULTS[table_id][entry.key][case - 1]
            specs.append(ExperimentSpec(table=table_id, scheme=entry.key, case=case, n0=grid.n0, eps=settings["eps"],
                                        h=grid.h, tol=settings["tol"], smoothing=settings["smoothing"],
                                        first_level_smoothing=settings["first_level_smoothing"], slow=grid.slow,
                                        expected_iterations=iterations, expected_rate=rate))
    return specs


def load_experiment_file(file_name: str) -> List[ExperimentSpec]:
    """
    Reads a JSON list of experiment objects (keys of ExperimentSpec; table, scheme, case
    and n0 required).

    Raises
    ------
    FileFormatError
        if the file is missing or an entry is malformed
    """
    if not os.path.isfile(file_name):
        raise FileFormatError(f"The experiment file '{file_name}' doesn't exist.")
    try:
        with open(file_name, "r", encoding="utf-8") as experiment_file:
            content = json.load(experiment_file)
    except json.JSONDecodeError as exception:
        raise FileFormatError(f"The experiment file '{file_name}' is not valid JSON: {exception}") from exception
    if not isinstance(content, list):
        raise FileFormatError("An experiment file holds a list of experiment objects.")
    specs = []
    for index, item in enumerate(content):
        try:
            if item["scheme"] not in SCHEMES_BY_KEY:
                raise FileFormatError(f"Entry {index}: unknown scheme '{item['scheme']}'.")
            values = dict(item)
            values["n0"] = tuple(values["n0"])
            for key in ("smoothing", "first_level_smoothing"):
                if values.get(key) is not None:
                    values[key] = tuple(values[key])
            specs.append(ExperimentSpec(**values))
        except (KeyError, TypeError, ValueError) as exception:
            raise FileFormatError(f"Entry {index} of '{file_name}' is malformed: {exception}") from exception
    return specs
