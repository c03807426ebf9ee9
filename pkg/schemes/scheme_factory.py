"""
Builds masks from family names and parameters, and reads / writes mask files.
"""

import json
import os
from typing import Optional

from schemes.anisotropic_interpolatory import aniso_interp_symbol, minimal_interp_mask
from schemes.box_splines import approx_symbol, box_spline_symbol
from schemes.dubuc_deslauriers import dd_symbol
from schemes.mask import Dilation, Mask
from schemes.reference_masks import REFERENCE_MASKS
from tools import tools
from tools.exceptions import FileFormatError, MaskParameterError

FAMILIES = ("dd", "interp", "minimal", "box", "approx", "P1", "P2", "K")


def build_mask(family: str, m: int = 3, n: int = 1, ell: int = 0) -> Mask:
    """
    Constructs a mask of the given family.

    Parameters
    ----------
    family : str
        one of FAMILIES
    m : int, optional
        second dilation factor of diag(2, m) (arity for 'dd'), by default 3
    n : int, optional
        order, by default 1
    ell : int, optional
        reproduction parameter of the 'approx' family, by default 0

    Returns
    -------
    Mask
        the requested mask

    Raises
    ------
    MaskParameterError
        unknown family or invalid parameters
    """
    if family == "dd":
        return dd_symbol(m, n)
    if family == "interp":
        return aniso_interp_symbol(Dilation(2, m), n)
    if family == "minimal":
        return minimal_interp_mask(Dilation(2, m), n)
    if family == "box":
        return box_spline_symbol(n)
    if family == "approx":
        return approx_symbol(n, ell)
    if family in REFERENCE_MASKS:
        return REFERENCE_MASKS[family]()
    raise MaskParameterError(f"Unknown mask family '{family}', expected one of {', '.join(FAMILIES)}.")


def load_mask_file(file_name: str, dilation: Optional[Dilation] = None) -> Mask:
    """
    Reads a mask from an exact-rational JSON file.

    Raises
    ------
    FileFormatError
        if the file is missing or malformed
    """
    if not os.path.isfile(file_name):
        raise FileFormatError(f"The mask file '{file_name}' doesn't exist.")
    try:
        with open(file_name, "r", encoding="utf-8") as mask_file:
            content = json.load(mask_file)
    except json.JSONDecodeError as exception:
        raise FileFormatError(f"The mask file '{file_name}' is not valid JSON: {exception}") from exception
    mask = Mask.from_json(content, dilation)
    tools.print_info_message(f"Loaded mask '{mask.label}' ({mask.nonzero_count()} nonzeros, {mask.dilation}) from '{file_name}'.", 2)
    return mask


def write_mask_file(mask: Mask, file_name: str):
    with open(file_name, "w", encoding="utf-8") as mask_file:
        json.dump(mask.to_json(), mask_file, indent=1, sort_keys=True)
