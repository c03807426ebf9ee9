"""
Collection of tools needed for export: dataframes of masks, tables and residual
histories, and Markdown rendering of dataframes.
"""

from typing import Dict, Sequence

import pandas as pd

from schemes.mask import Mask
from symbols.rational_tools import render_rational
from tools import constants


def mask_frame(mask: Mask) -> pd.DataFrame:
    """
    Coefficient matrix of a bivariate mask as strings 'num/den': rows indexed by alpha1,
    columns by alpha2, both ascending. Univariate masks give a single row.
    """
    matrix, origin = mask.to_matrix()
    if mask.dilation.arity == 1:
        return pd.DataFrame([[render_rational(value) for value in matrix[0]]], index=["0"],
                            columns=[str(origin[0] + j) for j in range(len(matrix[0]))])
    rows = [str(origin[0] + i) for i in range(len(matrix))]
    columns = [str(origin[1] + j) for j in range(len(matrix[0]) if matrix else 0)]
    return pd.DataFrame([[render_rational(value) for value in row] for row in matrix], index=rows, columns=columns)


def table_frame(rows: Sequence[Dict]) -> pd.DataFrame:
    """ Result rows with the report columns first. """
    frame = pd.DataFrame(list(rows))
    if frame.empty:
        return pd.DataFrame(columns=list(constants.TABLE_COLUMNS))
    leading = [column for column in constants.TABLE_COLUMNS if column in frame.columns]
    return frame[leading + [column for column in frame.columns if column not in leading]]


def published_layout_frame(rows: Sequence[Dict]) -> pd.DataFrame:
    """
    One line per (dilation, scheme) with iterations and rates of both cases side by side,
    followed by the generation degree.
    """
    lines: Dict[tuple, Dict] = {}
    for row in rows:
        key = (row["dilation"], row["scheme"])
        line = lines.setdefault(key, {"Dilation": row["dilation"], "Scheme": row["scheme"],
                                      "Case 1 iter": "", "Case 1 rate": "", "Case 2 iter": "", "Case 2 rate": "",
                                      "Generation degree": row.get("gen_degree", "")})
        if row.get("iters") is None:
            line[f"Case {row['case']} iter"] = row.get("status", "")
            continue
        line[f"Case {row['case']} iter"] = str(row["iters"])
        line[f"Case {row['case']} rate"] = f"{row['conv_rate']:.4f}"
    return pd.DataFrame(list(lines.values()))


def history_frame(history: Sequence[float]) -> pd.DataFrame:
    return pd.DataFrame({"iteration": range(1, len(history) + 1), "relative_residual": list(history)})


def frame_to_markdown(frame: pd.DataFrame, index: bool = False) -> str:
    """ Pipe table of a dataframe; cell strings such as exact rationals are kept verbatim. """
    return frame.to_markdown(index=index, tablefmt="pipe", disable_numparse=True) + "\n"
