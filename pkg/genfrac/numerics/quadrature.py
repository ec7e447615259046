"""
Adaptive quadrature helpers built on ``scipy.integrate.quad``.

Power-law singularities at the origin are passed to QUADPACK's algebraic
weight so the Gauss-Kronrod rule only sees the smooth factor.
"""
import logging
import math
import warnings
from typing import Callable, Optional, Tuple

import numpy as np
from scipy import integrate

from genfrac.config import GenFracConfig
from genfrac.errors import QuadratureError

logger = logging.getLogger(__name__)


def quad(func: Callable[[float], float], lower: float, upper: float,
         rel_tol: Optional[float] = None, **kwargs) -> Tuple[float, float]:
    """
    Integrate ``func`` over [lower, upper] and check convergence.

    Args:
        func: Scalar integrand
        lower: Lower limit
        upper: Upper limit, may be ``np.inf``
        rel_tol: Relative tolerance, defaults to ``GENFRAC_QUAD_REL_TOL``
        **kwargs: Passed to ``scipy.integrate.quad`` (weight, wvar, points)

    Returns:
        Tuple of (value, absolute error estimate)
    """
    if lower == upper:
        return 0.0, 0.0
    rel_tol = GenFracConfig.QUAD_REL_TOL if rel_tol is None else rel_tol
    with warnings.catch_warnings():
        warnings.simplefilter('ignore', integrate.IntegrationWarning)
        value, abserr = integrate.quad(
            func, lower, upper,
            epsabs=GenFracConfig.QUAD_ABS_TOL, epsrel=rel_tol,
            limit=GenFracConfig.QUAD_LIMIT, **kwargs)

    if not math.isfinite(value):
        raise QuadratureError(
            f"quadrature on [{lower}, {upper}] returned a non-finite value")
    if abserr > max(1e-6 * abs(value), 1e-9):
        raise QuadratureError(
            f"quadrature on [{lower}, {upper}] did not converge: "
            f"value={value:.6g}, error estimate={abserr:.3g}")
    if abserr > rel_tol * max(abs(value), 1.0):
        logger.debug(f"quadrature on [{lower}, {upper}] looser than requested: {abserr:.3g}")
    return value, abserr


def quad_power_singular(func: Callable[[float], float], exponent: float,
                        upper: float, rel_tol: Optional[float] = None) -> Tuple[float, float]:
    """
    Integrate ``func(y) * y**exponent`` over (0, upper] with ``exponent > -1``.

    ``func`` must be smooth at the origin; the power factor is handled by the
    algebraic weight of QUADPACK.
    """
    if upper <= 0:
        return 0.0, 0.0
    if exponent <= -1:
        raise QuadratureError(f"power exponent {exponent} is not integrable at 0")
    return quad(func, 0.0, upper, rel_tol=rel_tol, weight='alg', wvar=(exponent, 0.0))


def gauss_laguerre(n: int) -> Tuple[np.ndarray, np.ndarray]:
    """Nodes and weights for integrals of the form ∫₀^∞ e^{-u} h(u) du."""
    return np.polynomial.laguerre.laggauss(n)
