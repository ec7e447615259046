"""
    --- AUTO-GENERATED DOCSTRING ---
    Table of content is automatically generated by Agent Docstrings v1.3.5

    Classes/Functions:
        - as_vector_function(func, dimension: int) -> Callable[[np.ndarray], np.ndarray] (line 53)
        - GeneratorFamily (line 97):
            - matrix(x: float) -> np.ndarray (line 128)
            - matrices(xs: np.ndarray) -> np.ndarray (line 138)
            - contraction() -> bool (line 149)
            - shifted(lam: float) -> 'GeneratorFamily' (line 152)
            - estimate_derivative_bound(xs, step: float = 1e-5) -> float (line 171)
            - to_dict() -> Dict[str, Any] (line 179)
            - constant(matrix, ...) -> 'GeneratorFamily' (line 192)
            - diagonal(rates, amplitude: float = 0.0, omega: float = 1.0) -> 'GeneratorFamily' (line 213)
            - rotation_decay(omega: float = 1.0, rates=(1.0, 2.0)) -> 'GeneratorFamily' (line 239)
            - switch(first=None, second=None, threshold: float = 0.5) -> 'GeneratorFamily' (line 262)
            - from_table(source) -> 'GeneratorFamily' (line 285)
            - from_builtin(name: str, **params) -> 'GeneratorFamily' (line 333)
    --- END AUTO-GENERATED DOCSTRING ---

x-dependent generator families A(x) for the time-dependent solvers.

A family is an evaluator x ↦ A(x) (a d×d matrix) together with uniform
growth constants (M_B, m_B) such that ‖exp(tA(x))‖ ≤ M_B e^{t m_B} in the
Euclidean operator norm, an optional bound on sup ‖A'(x)‖, and a flag for
families whose members commute. Built-in families carry exact constants;
custom evaluators get m_B from the log-norm on sample points.
"""
import logging
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Callable, Dict, Optional, Sequence, Union

import numpy as np
import pandas as pd

from genfrac.errors import ValidationError
from genfrac.numerics.matrix_exp import log_norm

logger = logging.getLogger(__name__)

BUILTIN_FAMILIES = ('constant', 'diagonal', 'rotation_decay', 'switch', 'piecewise_table')

# default sample points for custom evaluators
_SAMPLE_POINTS = np.linspace(-4.0, 4.0, 81)

SWITCH_FIRST = ((-1.0, 1.0), (0.0, -2.0))
SWITCH_SECOND = ((-2.0, 0.0), (1.0, -1.0))


def as_vector_function(func, dimension: int) -> Callable[[np.ndarray], np.ndarray]:
    """
    Coerce a source term or boundary data to x-array → (n, d) array.

    Accepts None (zero), a constant vector, a GriddedFunction or any callable
    of x. Callables are tried on the whole array first and evaluated point by
    point when that fails or gives the wrong shape.
    """
    if func is None:
        return lambda xs: np.zeros((np.size(xs), dimension))
    if not callable(func):
        const = np.asarray(func, dtype=float).reshape(-1)
        if const.size == 1:
            const = np.full(dimension, float(const[0]))
        if const.size != dimension:
            raise ValidationError(f"constant vector has length {const.size}, expected {dimension}")
        return lambda xs: np.broadcast_to(const, (np.size(xs), dimension)).copy()

    def vectorized(xs: np.ndarray) -> np.ndarray:
        xs = np.atleast_1d(np.asarray(xs, dtype=float))
        try:
            values = np.asarray(func(xs), dtype=float)
            if values.shape == (xs.size,) and dimension == 1:
                return values[:, None]
            if values.shape == (xs.size, dimension):
                return values
        except (TypeError, ValueError):
            pass
        rows = [np.asarray(func(float(x)), dtype=float).reshape(-1) for x in xs]
        values = np.array(rows).reshape(xs.size, -1)
        if values.shape[1] != dimension:
            raise ValidationError(f"function returns vectors of length {values.shape[1]}, "
                                  f"expected {dimension}")
        return values

    return vectorized


def _rotation(theta: np.ndarray) -> np.ndarray:
    c, s = np.cos(theta), np.sin(theta)
    return np.stack([np.stack([c, -s], axis=-1), np.stack([s, c], axis=-1)], axis=-2)


@dataclass(eq=False)
class GeneratorFamily:
    """
    Generator family x ↦ A(x) with uniform growth type (M_B, m_B).

    ``batch`` evaluates a whole array of positions at once and returns
    (n, d, d); without it :meth:`matrices` loops over ``evaluator``.
    """

    evaluator: Callable[[float], np.ndarray]
    dimension: int
    growth_constant: float = 1.0
    growth_bound: Optional[float] = None
    derivative_bound: Optional[float] = None
    commuting: bool = False
    name: str = 'custom'
    params: Dict[str, Any] = field(default_factory=dict)
    batch: Optional[Callable[[np.ndarray], np.ndarray]] = None

    def __post_init__(self):
        self.logger = logging.getLogger(__name__)
        if self.dimension < 1:
            raise ValidationError(f"dimension must be >= 1, got {self.dimension}")
        if self.growth_constant < 1.0:
            raise ValidationError(f"growth constant M_B must be >= 1, got {self.growth_constant}")
        if self.growth_bound is None:
            self.growth_bound = max(log_norm(m) for m in self.matrices(_SAMPLE_POINTS))
            self.logger.debug(f"Estimated m_B={self.growth_bound:.4g} for family '{self.name}' "
                              f"on {_SAMPLE_POINTS.size} sample points")
        if self.derivative_bound is None:
            self.derivative_bound = self.estimate_derivative_bound()

    def matrix(self, x: float) -> np.ndarray:
        """A(x) as a (d, d) float array."""
        value = np.atleast_2d(np.asarray(self.evaluator(float(x)), dtype=float))
        if value.shape != (self.dimension, self.dimension):
            raise ValidationError(f"A({x}) has shape {value.shape}, "
                                  f"expected {(self.dimension, self.dimension)}")
        if not np.all(np.isfinite(value)):
            raise ValidationError(f"A({x}) has non-finite entries")
        return value

    def matrices(self, xs: np.ndarray) -> np.ndarray:
        """Stack of A(x_i), shape (n, d, d)."""
        xs = np.atleast_1d(np.asarray(xs, dtype=float))
        if self.batch is not None:
            stack = np.asarray(self.batch(xs), dtype=float)
            return stack.reshape(xs.size, self.dimension, self.dimension)
        if xs.size == 0:
            return np.zeros((0, self.dimension, self.dimension))
        return np.stack([self.matrix(x) for x in xs])

    @property
    def contraction(self) -> bool:
        return self.growth_constant == 1.0 and self.growth_bound <= 0.0

    def shifted(self, lam: float) -> 'GeneratorFamily':
        """The family A(x) - λI with growth bound m_B - λ."""
        eye = np.eye(self.dimension)
        batch = None
        if self.batch is not None:
            base_batch = self.batch
            batch = lambda xs: base_batch(xs) - lam * eye  # noqa: E731
        return GeneratorFamily(
            evaluator=lambda x: self.matrix(x) - lam * eye,
            dimension=self.dimension,
            growth_constant=self.growth_constant,
            growth_bound=self.growth_bound - lam,
            derivative_bound=self.derivative_bound,
            commuting=self.commuting,
            name=f'{self.name}-shifted',
            params={**self.params, 'shift': lam},
            batch=batch,
        )

    def estimate_derivative_bound(self, xs=None, step: float = 1e-5) -> float:
        """Central-difference estimate of sup ‖A'(x)‖₂ on sample points."""
        xs = _SAMPLE_POINTS if xs is None else np.atleast_1d(np.asarray(xs, dtype=float))
        upper = self.matrices(xs + step)
        lower = self.matrices(xs - step)
        slopes = np.linalg.norm(upper - lower, ord=2, axis=(1, 2)) / (2.0 * step)
        return float(slopes.max())

    def to_dict(self) -> Dict[str, Any]:
        return {
            'name': self.name,
            'dimension': self.dimension,
            'growth_constant': self.growth_constant,
            'growth_bound': self.growth_bound,
            'derivative_bound': self.derivative_bound if math.isfinite(self.derivative_bound) else None,
            'commuting': self.commuting,
            'contraction': self.contraction,
            'params': self.params,
        }

    @staticmethod
    def constant(matrix, growth_constant: Optional[float] = None,
                 growth_bound: Optional[float] = None) -> 'GeneratorFamily':
        """A(x) ≡ A."""
        value = np.atleast_2d(np.asarray(matrix, dtype=float))
        if value.ndim != 2 or value.shape[0] != value.shape[1]:
            raise ValidationError(f"generator must be square, got shape {value.shape}")
        value.setflags(write=False)
        d = value.shape[0]
        return GeneratorFamily(
            evaluator=lambda x: value,
            dimension=d,
            growth_constant=1.0 if growth_constant is None else float(growth_constant),
            growth_bound=log_norm(value) if growth_bound is None else float(growth_bound),
            derivative_bound=0.0,
            commuting=True,
            name='constant',
            params={'matrix': value.tolist()},
            batch=lambda xs: np.broadcast_to(value, (np.size(xs), d, d)).copy(),
        )

    @staticmethod
    def diagonal(rates: Sequence[float], amplitude: float = 0.0,
                 omega: float = 1.0) -> 'GeneratorFamily':
        """A(x) = -diag(r_i (1 + amplitude·sin(ωx))), a commuting family."""
        r = np.asarray(rates, dtype=float).reshape(-1)
        if np.any(r < 0) or not 0.0 <= amplitude < 1.0:
            raise ValidationError("diagonal family needs rates >= 0 and 0 <= amplitude < 1")
        d = r.size

        def batch(xs):
            factor = 1.0 + amplitude * np.sin(omega * np.atleast_1d(xs))
            stack = np.zeros((factor.size, d, d))
            stack[:, np.arange(d), np.arange(d)] = -factor[:, None] * r[None, :]
            return stack

        return GeneratorFamily(
            evaluator=lambda x: batch(x)[0],
            dimension=d,
            growth_bound=-float(r.min()) * (1.0 - amplitude),
            derivative_bound=float(r.max()) * amplitude * abs(omega),
            commuting=True,
            name='diagonal',
            params={'rates': r.tolist(), 'amplitude': amplitude, 'omega': omega},
            batch=batch,
        )

    @staticmethod
    def rotation_decay(omega: float = 1.0, rates=(1.0, 2.0)) -> 'GeneratorFamily':
        """A(x) = R(ωx)ᵀ diag(-r₁, -r₂) R(ωx): symmetric, m_B = -min r, non-commuting."""
        r1, r2 = (float(v) for v in rates)
        if min(r1, r2) < 0:
            raise ValidationError("rotation_decay rates must be nonnegative")
        diag = np.diag([-r1, -r2])

        def batch(xs):
            rot = _rotation(omega * np.atleast_1d(np.asarray(xs, dtype=float)))
            return np.swapaxes(rot, -1, -2) @ diag @ rot

        return GeneratorFamily(
            evaluator=lambda x: batch(x)[0],
            dimension=2,
            growth_bound=-min(r1, r2),
            derivative_bound=abs(omega) * abs(r1 - r2),
            commuting=omega == 0.0 or r1 == r2,
            name='rotation_decay',
            params={'omega': omega, 'rates': [r1, r2]},
            batch=batch,
        )

    @staticmethod
    def switch(first=None, second=None, threshold: float = 0.5) -> 'GeneratorFamily':
        """A(x) = first for x > threshold and second for x ≤ threshold."""
        upper = np.asarray(SWITCH_FIRST if first is None else first, dtype=float)
        lower = np.asarray(SWITCH_SECOND if second is None else second, dtype=float)
        if upper.shape != lower.shape or upper.shape[0] != upper.shape[1]:
            raise ValidationError("switch family needs two square matrices of equal shape")

        def batch(xs):
            above = np.atleast_1d(np.asarray(xs, dtype=float)) > threshold
            return np.where(above[:, None, None], upper[None], lower[None])

        return GeneratorFamily(
            evaluator=lambda x: batch(x)[0],
            dimension=upper.shape[0],
            growth_bound=max(log_norm(upper), log_norm(lower)),
            derivative_bound=math.inf,
            commuting=bool(np.allclose(upper @ lower, lower @ upper)),
            name='switch',
            params={'first': upper.tolist(), 'second': lower.tolist(), 'threshold': threshold},
            batch=batch,
        )

    @staticmethod
    def from_table(source: Union[str, Path, pd.DataFrame]) -> 'GeneratorFamily':
        """
        Piecewise-constant family from a table with columns x_lo, x_hi, a11, a12, ...

        Row i applies on x_lo ≤ x < x_hi. Positions below the first row use the
        first matrix and positions past the last row use the last one.

        Args:
            source: CSV path or DataFrame

        Returns:
            GeneratorFamily named 'piecewise_table'
        """
        frame = source if isinstance(source, pd.DataFrame) else pd.read_csv(source)
        if not {'x_lo', 'x_hi'} <= set(frame.columns):
            raise ValidationError("generator table needs x_lo and x_hi columns")
        entries = [c for c in frame.columns if c.startswith('a') and c[1:].isdigit()]
        d = int(round(math.sqrt(len(entries))))
        if d < 1 or d * d != len(entries):
            raise ValidationError(f"generator table has {len(entries)} matrix columns, "
                                  "expected a perfect square")
        names = [f'a{i}{j}' for i in range(1, d + 1) for j in range(1, d + 1)]
        if set(names) != set(entries):
            raise ValidationError(f"generator table columns must be {names}")
        frame = frame.sort_values('x_lo').reset_index(drop=True)
        lows = frame['x_lo'].to_numpy(dtype=float)
        highs = frame['x_hi'].to_numpy(dtype=float)
        if np.any(highs <= lows) or np.any(lows[1:] < highs[:-1]):
            raise ValidationError("generator table intervals must be nonempty and disjoint")
        stack = frame[names].to_numpy(dtype=float).reshape(-1, d, d)

        def batch(xs):
            xs = np.atleast_1d(np.asarray(xs, dtype=float))
            rows = np.clip(np.searchsorted(lows, xs, side='right') - 1, 0, len(lows) - 1)
            return stack[rows]

        return GeneratorFamily(
            evaluator=lambda x: batch(x)[0],
            dimension=d,
            growth_bound=max(log_norm(m) for m in stack),
            derivative_bound=math.inf,
            commuting=all(np.allclose(p @ q, q @ p) for p in stack for q in stack),
            name='piecewise_table',
            params={'rows': int(len(lows)), 'x_lo': lows.tolist(), 'x_hi': highs.tolist()},
            batch=batch,
        )

    @staticmethod
    def from_builtin(name: str, **params) -> 'GeneratorFamily':
        """
        Build a named family.

        Args:
            name: One of BUILTIN_FAMILIES
            **params: Keyword parameters of the family constructor; the table
                family takes ``path``

        Returns:
            GeneratorFamily
        """
        if name == 'constant':
            return GeneratorFamily.constant(**params)
        if name == 'diagonal':
            return GeneratorFamily.diagonal(**params)
        if name == 'rotation_decay':
            return GeneratorFamily.rotation_decay(**params)
        if name == 'switch':
            return GeneratorFamily.switch(**params)
        if name == 'piecewise_table':
            return GeneratorFamily.from_table(params['path'])
        raise ValidationError(f"unknown generator family '{name}', expected one of {BUILTIN_FAMILIES}")
