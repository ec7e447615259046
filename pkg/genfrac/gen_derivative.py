"""
    --- AUTO-GENERATED DOCSTRING ---
    Table of content is automatically generated by Agent Docstrings v1.3.5

    Classes/Functions:
        - GriddedFunction (line 43):
            - a() -> float (line 63)
            - dimension() -> int (line 67)
            - left_extension() -> np.ndarray (line 71)
            - __call__(x) -> np.ndarray (line 75)
            - is_constant() -> bool (line 88)
        - ResidualReport (line 93):
            - to_dict() -> Dict[str, Any] (line 106)
        - caputo_beta(f: GriddedFunction, beta: float, x: float) (line 135)
        - gen_caputo(f: GriddedFunction, nu: LevyMeasure, x: float) (line 189)
        - gen_rl(f: GriddedFunction, nu: LevyMeasure, x: float) (line 210)
        - residual(solution, nu: LevyMeasure, family, g: Optional[Callable] = None, a: Optional[float] = None, skip_fraction: Optional[float] = None, tolerance: float = 5e-3) -> ResidualReport (line 231)
    --- END AUTO-GENERATED DOCSTRING ---

Generalized Caputo and Riemann-Liouville derivatives on gridded functions.

A gridded function is extended by its first value to the left of the grid
start a and interpolated linearly in between grid points. Derivatives are the
exact integrals of that interpolant against ν, written through the interval
masses ν([lo, hi)) and first moments ∫_[lo, hi) y ν(dy), so the singularity
at y → 0 only ever meets the local slope times ∫_0^h y ν(dy).
"""
import logging
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional

import numpy as np
from scipy import special

from genfrac.config import GenFracConfig
from genfrac.errors import ValidationError
from genfrac.measures.levy_measure import LevyMeasure

logger = logging.getLogger(__name__)


@dataclass(eq=False)
class GriddedFunction:
    """Scalar or vector samples on a strictly increasing grid starting at a."""

    grid: np.ndarray
    values: np.ndarray

    def __post_init__(self):
        self.grid = np.asarray(self.grid, dtype=float)
        self.values = np.asarray(self.values)
        if self.grid.ndim != 1 or self.grid.size < 2:
            raise ValidationError("a gridded function needs at least two grid points")
        if not np.all(np.diff(self.grid) > 0):
            raise ValidationError("grid must be strictly increasing")
        if self.values.shape[0] != self.grid.size:
            raise ValidationError(
                f"values have {self.values.shape[0]} rows for {self.grid.size} grid points")
        if not np.all(np.isfinite(self.values)):
            raise ValidationError("gridded values must be finite")

    @property
    def a(self) -> float:
        return float(self.grid[0])

    @property
    def dimension(self) -> int:
        return 1 if self.values.ndim == 1 else self.values.shape[1]

    @property
    def left_extension(self) -> np.ndarray:
        """Constant value f(a) used for x < a."""
        return self.values[0]

    def __call__(self, x) -> np.ndarray:
        """Linear interpolation, constant f(a) left of the grid."""
        x = np.asarray(x, dtype=float)
        if np.any(x > self.grid[-1] * (1 + 1e-12) + 1e-12):
            raise ValidationError(f"evaluation beyond the grid end {self.grid[-1]}")
        flat = np.clip(x.ravel(), self.grid[0], self.grid[-1])
        if self.values.ndim == 1:
            out = np.interp(flat, self.grid, self.values)
            return out.reshape(x.shape)
        out = np.stack([np.interp(flat, self.grid, self.values[:, j])
                        for j in range(self.values.shape[1])], axis=-1)
        return out.reshape(x.shape + (self.values.shape[1],))

    def is_constant(self) -> bool:
        return bool(np.all(self.values == self.values[0]))


@dataclass
class ResidualReport:
    """Residual ‖D f - A f - g‖ on the certified part of the grid."""

    max_residual: float
    points: np.ndarray
    residuals: np.ndarray
    skipped: int
    quadrature_error: float
    warnings: List[str] = field(default_factory=list)

    def passes(self, tolerance: float) -> bool:
        return self.max_residual <= tolerance

    def to_dict(self) -> Dict[str, Any]:
        return {
            'max_residual': self.max_residual,
            'n_points': int(self.points.size),
            'skipped': self.skipped,
            'quadrature_error': self.quadrature_error,
            'points': self.points.tolist(),
            'residuals': self.residuals.tolist(),
            'warnings': list(self.warnings),
        }


def _check_point(f: GriddedFunction, x: float):
    if not x > f.a:
        raise ValidationError(
            f"derivative at x={x} is undefined at or left of a={f.a}")
    if x > f.grid[-1] * (1 + 1e-12) + 1e-12:
        raise ValidationError(f"x={x} lies beyond the grid end {f.grid[-1]}")


def _segments_left_of(f: GriddedFunction, x: float):
    """Grid nodes strictly below x followed by x, with values and slopes."""
    nodes = f.grid[f.grid < x]
    nodes = np.append(nodes, x)
    values = f(nodes)
    slopes = np.diff(values, axis=0) / np.diff(nodes).reshape((-1,) + (1,) * (values.ndim - 1))
    return nodes, values, slopes


def caputo_beta(f: GriddedFunction, beta: float, x: float):
    """
    Classical Caputo derivative of order β of the interpolant of f.

    Sum over segments of slope_j·[(x-x_j)^{1-β} - (x-x_{j+1})^{1-β}]/Γ(2-β),
    which integrates f'(s)(x-s)^{-β}/Γ(1-β) exactly for piecewise-linear f.

    Args:
        f: Gridded function
        beta: Order β ∈ (0, 1)
        x: Point with a < x ≤ grid end

    Returns:
        Scalar or vector derivative
    """
    if not 0.0 < beta < 1.0:
        raise ValidationError(f"Caputo order must lie in (0, 1), got {beta}")
    _check_point(f, x)
    if f.is_constant():
        return np.zeros_like(f.values[0], dtype=float)
    nodes, _, slopes = _segments_left_of(f, x)
    gap = x - nodes
    weights = (gap[:-1] ** (1.0 - beta) - gap[1:] ** (1.0 - beta)) / special.gamma(2.0 - beta)
    return np.tensordot(weights, slopes, axes=(0, 0))


def _jump_integral(f: GriddedFunction, nu: LevyMeasure, x: float):
    """
    ∫_[0, x-a) (f(x-y) - f(x)) ν(dy) for the interpolant, plus ν([x-a, ∞)).

    On the cell where x - y runs over [x_j, x_{j+1}] the integrand is
    c0 - slope_j·y with c0 = f(x_j) + slope_j(x - x_j) - f(x).
    """
    nodes, values, slopes = _segments_left_of(f, x)
    # y-breakpoints 0 = x - x_last < ... < x - a, one cell per segment
    breaks = (x - nodes)[::-1]
    slopes_y = slopes[::-1]
    left = values[:-1][::-1]
    left_nodes = nodes[:-1][::-1]
    f_x = values[-1]

    tails = np.array([nu.tail_mass(b) for b in breaks])
    moments = np.array([nu.interval_moment(lo, hi) for lo, hi in zip(breaks[:-1], breaks[1:])])
    masses = tails[:-1] - tails[1:]
    masses[0] = 0.0

    shape = (-1,) + (1,) * (values.ndim - 1)
    c0 = left + slopes_y * (x - left_nodes).reshape(shape) - f_x
    c0[0] = 0.0
    integral = np.tensordot(np.nan_to_num(masses, nan=0.0, posinf=0.0), c0, axes=(0, 0)) \
        - np.tensordot(moments, slopes_y, axes=(0, 0))
    return integral, f_x, tails[-1]


def gen_caputo(f: GriddedFunction, nu: LevyMeasure, x: float):
    """
    D^(ν)_{a+*} f(x) = -∫_0^{x-a}(f(x-y) - f(x)) ν(dy) - (f(a) - f(x)) ν([x-a, ∞)).

    Args:
        f: Gridded function with Caputo extension f(a) left of a
        nu: Jump measure
        x: Point with a < x ≤ grid end

    Returns:
        Scalar or vector derivative
    """
    _check_point(f, x)
    if f.is_constant():
        return np.zeros_like(f.values[0], dtype=float)
    integral, f_x, tail = _jump_integral(f, nu, x)
    if not np.isfinite(tail):
        raise ValidationError(f"tail mass nu([{x - f.a}, inf)) is not finite for {nu.to_spec()}")
    return -integral - (f.values[0] - f_x) * tail


def gen_rl(f: GriddedFunction, nu: LevyMeasure, x: float):
    """
    D^(ν)_{a+} f(x) = -∫_0^{x-a}(f(x-y) - f(x)) ν(dy) + f(x) ν([x-a, ∞)).

    Defined here for f(a) = 0, where it coincides with :func:`gen_caputo`.
    """
    scale = max(float(np.max(np.abs(f.values))), 1.0)
    if np.max(np.abs(f.values[0])) > 1e-12 * scale:
        raise ValidationError(
            "gen_rl needs f(a) = 0; use gen_caputo for functions with f(a) != 0")
    _check_point(f, x)
    if not np.any(f.values):
        return np.zeros_like(f.values[0], dtype=float)
    integral, f_x, tail = _jump_integral(f, nu, x)
    return -integral + f_x * tail


def _coarsened(f: GriddedFunction) -> GriddedFunction:
    return GriddedFunction(f.grid[::2], f.values[::2])


def residual(solution, nu: LevyMeasure, family, g: Optional[Callable] = None,
             a: Optional[float] = None, skip_fraction: Optional[float] = None,
             tolerance: float = 5e-3) -> ResidualReport:
    """
    Max-norm residual of D^(ν)_{a+*} f = A(x) f + g over the interior grid.

    The first ``skip_fraction`` of the grid (default
    ``GENFRAC_RESIDUAL_SKIP_FRACTION``) is left out: the piecewise-linear
    interpolant cannot follow the boundary layer of fractional solutions.

    Args:
        solution: SolutionCurve or GriddedFunction
        nu: Jump measure
        family: Object with ``matrix(x)`` returning A(x)
        g: Source x -> vector, None for zero
        a: Left end, defaults to the first grid point
        skip_fraction: Fraction of leading grid points to skip
        tolerance: Threshold for the coarse-grid quadrature warning

    Returns:
        ResidualReport
    """
    f = solution if isinstance(solution, GriddedFunction) else solution.to_gridded()
    if a is not None and abs(a - f.a) > 1e-12:
        raise ValidationError(f"solution grid starts at {f.a}, not at a={a}")
    skip_fraction = GenFracConfig.RESIDUAL_SKIP_FRACTION if skip_fraction is None else skip_fraction
    n = f.grid.size
    skipped = max(int(np.ceil(skip_fraction * (n - 1))), 1)
    points = f.grid[skipped:]

    def pointwise(func: GriddedFunction, x: float) -> float:
        value = np.atleast_1d(gen_caputo(func, nu, x))
        state = np.atleast_1d(func(x))
        rhs = np.atleast_2d(family.matrix(x)) @ state
        if g is not None:
            rhs = rhs + np.atleast_1d(np.asarray(g(x), dtype=float))
        return float(np.max(np.abs(value - rhs)))

    residuals = np.array([pointwise(f, x) for x in points])
    report_warnings: List[str] = []

    # Richardson-style estimate from the grid with every other point removed
    quadrature_error = 0.0
    if n >= 9:
        coarse = _coarsened(f)
        checkpoints = coarse.grid[max(int(np.ceil(skip_fraction * (coarse.grid.size - 1))), 1):]
        checkpoints = checkpoints[np.linspace(0, checkpoints.size - 1, min(16, checkpoints.size)).astype(int)]
        fine_values = np.array([pointwise(f, x) for x in checkpoints])
        coarse_values = np.array([pointwise(coarse, x) for x in checkpoints])
        quadrature_error = float(np.max(np.abs(fine_values - coarse_values)) / 3.0)
        if quadrature_error > tolerance:
            message = (f"grid may be too coarse: estimated quadrature error "
                       f"{quadrature_error:.3g} exceeds {tolerance:g}")
            logger.warning(message)
            report_warnings.append(message)

    max_residual = float(residuals.max()) if residuals.size else 0.0
    logger.info(f"Residual over {points.size} points: max {max_residual:.3g}")
    return ResidualReport(max_residual=max_residual, points=points, residuals=residuals,
                          skipped=skipped, quadrature_error=quadrature_error,
                          warnings=report_warnings)
