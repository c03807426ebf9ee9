"""
Helpers for exact rational numbers: parsing, rendering and the small combinatorial
products used by the mask formulas.
"""

from fractions import Fraction
from typing import Union

from tools.exceptions import FileFormatError

RationalLike = Union[int, Fraction, str]


def to_rational(value: RationalLike) -> Fraction:
    """
    Converts an integer, a fraction or a textual rational into a Fraction.
    Floats are rejected: they would silently bring rounding errors into exact computations.

    Parameters
    ----------
    value : RationalLike
        value to convert

    Returns
    -------
    Fraction
        the exact value
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool) or isinstance(value, float):
        raise TypeError(f"Cannot convert '{value!r}' to an exact rational.")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"Cannot convert '{value!r}' to an exact rational.")


def parse_rational(text: str) -> Fraction:
    """
    Parses 'num/den', 'num' or a decimal literal.

    Parameters
    ----------
    text : str
        textual rational

    Returns
    -------
    Fraction
        parsed value

    Raises
    ------
    FileFormatError
        if the text is not a valid rational
    """
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exception:
        raise FileFormatError(f"'{text}' is not a valid rational number.") from exception


def render_rational(value: Fraction) -> str:
    """
    Renders a rational as 'num/den' (integers without denominator).
    """
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def falling_factorial(x: Fraction, k: int) -> Fraction:
    """
    x (x-1) ... (x-k+1), equal to 1 for k = 0.
    """
    result = Fraction(1)
    for i in range(k):
        result *= x - i
    return result


def pochhammer(x: Fraction, k: int) -> Fraction:
    """
    Rising factorial (x)_k = x (x+1) ... (x+k-1), equal to 1 for k = 0.
    """
    result = Fraction(1)
    for i in range(k):
        result *= x + i
    return result
