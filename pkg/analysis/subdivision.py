"""
The subdivision operator (S c)(alpha) = sum_beta p(alpha - M beta) c(beta) on
finitely supported sequences.
"""

from typing import Callable, Dict, Iterable, Tuple

from schemes.mask import Mask

Point = Tuple[int, ...]


def _single_step(mask: Mask, data: Dict[Point, object], interior_only: bool) -> Dict[Point, object]:
    factors = mask.dilation.factors
    terms = mask.symbol.terms
    refined: Dict[Point, object] = {}
    for beta, value in data.items():
        image = tuple(m * b for m, b in zip(factors, beta))
        for offset, coefficient in terms.items():
            alpha = tuple(i + o for i, o in zip(image, offset))
            refined[alpha] = refined.get(alpha, 0) + coefficient * value
    if not interior_only:
        return refined

    def is_interior(alpha: Point) -> bool:
        for offset in terms:
            shifted = tuple(a - o for a, o in zip(alpha, offset))
            if all(s % m == 0 for s, m in zip(shifted, factors)):
                if tuple(s // m for s, m in zip(shifted, factors)) not in data:
                    return False
        return True

    return {alpha: value for alpha, value in refined.items() if is_interior(alpha)}


def subdivide(mask: Mask, data: Dict[Point, object], steps: int = 1, interior_only: bool = False) -> Dict[Point, object]:
    """
    Applies the subdivision operator `steps` times.

    Parameters
    ----------
    mask : Mask
        subdivision mask
    data : Dict[Point, object]
        finitely supported sequence (missing indices are zero); Fractions stay exact
    steps : int, optional
        number of refinements, by default 1
    interior_only : bool, optional
        if True, the data is a window of an unknown longer sequence and only the
        refined values whose whole stencil lies inside the window are kept

    Returns
    -------
    Dict[Point, object]
        refined sequence
    """
    if steps < 1:
        raise ValueError(f"The number of subdivision steps must be >= 1, got {steps}.")
    for _ in range(steps):
        data = _single_step(mask, data, interior_only)
    return data


def sample(function: Callable[..., object], window: Iterable[Point]) -> Dict[Point, object]:
    """ Samples a function on the given integer points. """
    return {point: function(*point) for point in window}
