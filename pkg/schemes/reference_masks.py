"""
Classic dyadic reference masks for diag(2,2): bilinear (P1), bicubic B-spline (P2)
and the tensor-product four-point interpolatory mask (K), plus trivial test masks.
"""

from fractions import Fraction
from typing import Sequence

from schemes.mask import Dilation, Mask, MaskFamily
from symbols.laurent_poly import LaurentPoly

DYADIC = Dilation(2, 2)


def _tensor_mask(weights: Sequence[int], scale: int, name: str) -> Mask:
    radius = len(weights) // 2
    terms = {}
    for i, wi in enumerate(weights):
        for j, wj in enumerate(weights):
            terms[(i - radius, j - radius)] = Fraction(wi * wj, scale)
    return Mask(LaurentPoly(terms, 2), DYADIC, MaskFamily.REFERENCE, name=name)


def bilinear_mask() -> Mask:
    """ P1 = (1/4) [1 2 1]^T [1 2 1] """
    return _tensor_mask((1, 2, 1), 4, "P1")


def bicubic_mask() -> Mask:
    """ P2 = (1/64) [1 4 6 4 1]^T [1 4 6 4 1] """
    return _tensor_mask((1, 4, 6, 4, 1), 64, "P2")


def four_point_mask() -> Mask:
    """ K = (1/256) v^T v with v = [-1 0 9 16 9 0 -1] """
    return _tensor_mask((-1, 0, 9, 16, 9, 0, -1), 256, "K")


REFERENCE_MASKS = {"P1": bilinear_mask, "P2": bicubic_mask, "K": four_point_mask}


def dirac_mask(dilation: Dilation) -> Mask:
    return Mask(LaurentPoly.constant(1, dilation.arity), dilation, MaskFamily.EXTERNAL, name="dirac")


def constant_mask(dilation: Dilation, value=None) -> Mask:
    value = dilation.det if value is None else value
    return Mask(LaurentPoly.constant(value, dilation.arity), dilation, MaskFamily.EXTERNAL, name="constant")
