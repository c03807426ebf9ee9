"""
A collection of custom exceptions.
"""

class ConfigError(Exception):
    """
    Raised for errors related to config parsing.

    Parameters
    ----------
    Exception : Exception
        base exception class
    """


class FileFormatError(Exception):
    """
    Raised when a mask file or an experiment file does not conform to its format.

    Parameters
    ----------
    Exception : Exception
        base exception class
    """


class ArityMismatchError(Exception):
    """
    Raised when Laurent polynomials with different numbers of variables are combined,
    or when a polynomial is evaluated at a point of the wrong dimension.

    Parameters
    ----------
    Exception : Exception
        base exception class
    """


class MaskParameterError(Exception):
    """
    Raised for invalid mask family parameters (dilation factors, orders, degrees).

    Parameters
    ----------
    Exception : Exception
        base exception class
    """


class SingularSystemError(Exception):
    """
    Raised when an exact linear system that must be regular turns out to be singular.

    Parameters
    ----------
    Exception : Exception
        base exception class
    """


class UnsupportedReproductionError(Exception):
    """
    Raised when the reproduction degree is requested for a mask that needs a
    non-zero shift parameter (neither interpolatory nor symmetric).

    Parameters
    ----------
    Exception : Exception
        base exception class
    """


class EigenvalueError(Exception):
    """
    Raised when the transition matrix of the zero digit has no eigenvalue 1.

    Parameters
    ----------
    Exception : Exception
        base exception class
    """


class DimensionMismatchError(Exception):
    """
    Raised for matrices, grids or stencils of incompatible sizes.

    Parameters
    ----------
    Exception : Exception
        base exception class
    """


class StencilSizeError(Exception):
    """
    Raised when a stencil does not fit into the grid it is applied to.

    Parameters
    ----------
    Exception : Exception
        base exception class
    """


class ZeroDiagonalError(Exception):
    """
    Raised when Gauss-Seidel smoothing is requested for a stencil with a zero centre.

    Parameters
    ----------
    Exception : Exception
        base exception class
    """


class PlanError(Exception):
    """
    Raised for inconsistent multigrid level plans.

    Parameters
    ----------
    Exception : Exception
        base exception class
    """


class CriteriaMismatchError(Exception):
    """
    Raised when two equivalent exact criteria for a mask property give different answers.

    Parameters
    ----------
    Exception : Exception
        base exception class
    """
