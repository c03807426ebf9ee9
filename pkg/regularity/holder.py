"""
Continuity and Hoelder exponent of the basic limit function of a bivariate mask, from
the joint spectral radii of the transition matrices restricted to U, U1 and U2.
"""

from dataclasses import dataclass
import enum
from math import inf, log
from typing import Dict, Sequence

from analysis.scheme_analyzer import check_interpolatory
from regularity.jsr import JsrEstimate, jsr_bounds
from regularity.transition import SubspaceBasis, invariant_subspaces, restrict, transition_matrices
from schemes.mask import Mask
from tools import tools
from tools.exceptions import MaskParameterError


class Continuity(enum.Enum):
    """
    Continuity verdict derived from the bounds of rho(V).

    Parameters
    ----------
    enum : enum.Enum
        base enum class
    """
    CONTINUOUS = "continuous"
    NOT_CONTINUOUS = "not continuous"
    INCONCLUSIVE = "inconclusive"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class HolderResult:
    """
    Regularity of one mask: the three JSR intervals, the continuity verdict and the
    interval of the Hoelder exponent.
    """
    mask: str
    dilation: str
    dims: tuple
    rho: JsrEstimate
    rho1: JsrEstimate
    rho2: JsrEstimate
    continuity: Continuity
    alpha_low: float
    alpha_high: float

    def to_dict(self) -> Dict:
        return {
            "mask": self.mask, "dilation": self.dilation, "dims": list(self.dims),
            "rho_low": self.rho.lower, "rho_high": self.rho.upper,
            "rho1_low": self.rho1.lower, "rho1_high": self.rho1.upper,
            "rho2_low": self.rho2.lower, "rho2_high": self.rho2.upper,
            "alpha_low": self.alpha_low, "alpha_high": self.alpha_high,
            "continuity": str(self.continuity), "method": self.rho.method, "depth": self.rho.depth,
        }


def _log_base_inverse(value: float, base: int) -> float:
    # log_{1/base}(value)
    if value <= 0:
        return inf
    return -log(value) / log(base)


def _bounds(matrices: Sequence, depth: int, max_nodes: int, norms: Sequence[str]) -> JsrEstimate:
    if not matrices:
        return JsrEstimate(0.0, 0.0, depth, "zero-subspace")
    return jsr_bounds(matrices, depth=depth, norms=norms, max_nodes=max_nodes)


def continuity_verdict(rho: JsrEstimate) -> Continuity:
    if rho.upper < 1:
        return Continuity.CONTINUOUS
    if rho.lower >= 1:
        return Continuity.NOT_CONTINUOUS
    return Continuity.INCONCLUSIVE


def holder_exponent(mask: Mask, depth: int = 8, max_nodes: int = 200000,
                    norms: Sequence[str] = ("spectral", "ellipsoid"), subspaces: SubspaceBasis = None) -> HolderResult:
    """
    Computes rho(V), rho(V1), rho(V2) and alpha = min(log_{1/m1} rho(V1), log_{1/m2} rho(V2)).

    Parameters
    ----------
    mask : Mask
        bivariate mask, interpolatory for exact seed vectors
    depth : int, optional
        maximum product length of the JSR search, by default 8
    max_nodes : int, optional
        node budget of the JSR search, by default 200000
    norms : Sequence[str], optional
        norms tried for the JSR upper bounds
    subspaces : SubspaceBasis, optional
        precomputed invariant subspaces

    Returns
    -------
    HolderResult
        bounds, verdict and exponent interval
    """
    if mask.dilation.arity != 2:
        raise MaskParameterError("The regularity analysis needs a bivariate mask.")
    if not check_interpolatory(mask):
        tools.print_warning_message(f"Mask '{mask.label}' is not interpolatory: the difference subspaces are seeded from the eigenvector of T_0.")
    tools.print_info_message(f"Regularity of '{mask.label}' ({mask.dilation}, depth {depth})...")
    ts = transition_matrices(mask)
    subspaces = subspaces or invariant_subspaces(ts)
    tools.print_info_message(f"|Omega| = {ts.size}, dim U = {subspaces.dims[0]}, dim U1 = {subspaces.dims[1]}, dim U2 = {subspaces.dims[2]}", 2)
    rho = _bounds(restrict(ts, subspaces.u), depth, max_nodes, norms)
    rho1 = _bounds(restrict(ts, subspaces.u1), depth, max_nodes, norms)
    rho2 = _bounds(restrict(ts, subspaces.u2), depth, max_nodes, norms)
    m1, m2 = mask.dilation.factors
    alpha_low = min(_log_base_inverse(rho1.upper, m1), _log_base_inverse(rho2.upper, m2))
    alpha_high = min(_log_base_inverse(rho1.lower, m1), _log_base_inverse(rho2.lower, m2))
    verdict = continuity_verdict(rho)
    if verdict == Continuity.INCONCLUSIVE:
        tools.print_warning_message(f"Continuity of '{mask.label}' is inconclusive: rho(V) in [{rho.lower:.6f}, {rho.upper:.6f}].")
    return HolderResult(mask.label, str(mask.dilation), subspaces.dims, rho, rho1, rho2, verdict, alpha_low, alpha_high)
