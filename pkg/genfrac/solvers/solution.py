"""
Solution curves: vector values and standard errors on a grid starting at a.

CSV layout is one row per grid point with columns ``x``, ``value_0`` …
``value_{d-1}``, ``stderr_0`` … ``stderr_{d-1}``.
"""
import json
import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional, Union

import numpy as np
import pandas as pd

from genfrac.errors import ValidationError
from genfrac.gen_derivative import GriddedFunction

logger = logging.getLogger(__name__)


@dataclass(eq=False)
class SolutionCurve:
    """Solution samples f(x_i) ∈ R^d with f(a) = Y on the first grid point."""

    grid: np.ndarray
    values: np.ndarray
    std_error: np.ndarray
    metadata: Dict[str, Any] = field(default_factory=dict)
    flags: List[str] = field(default_factory=list)

    def __post_init__(self):
        self.grid = np.asarray(self.grid, dtype=float)
        self.values = np.atleast_2d(np.asarray(self.values, dtype=float).T).T
        self.std_error = np.asarray(self.std_error, dtype=float).reshape(self.values.shape)

    @property
    def a(self) -> float:
        return float(self.grid[0])

    @property
    def dimension(self) -> int:
        return self.values.shape[1]

    @property
    def boundary_value(self) -> np.ndarray:
        return self.values[0]

    def to_gridded(self) -> GriddedFunction:
        values = self.values[:, 0] if self.dimension == 1 else self.values
        return GriddedFunction(self.grid, values)

    def max_std_error(self) -> float:
        return float(self.std_error.max()) if self.std_error.size else 0.0

    def to_frame(self) -> pd.DataFrame:
        data = {'x': self.grid}
        for j in range(self.dimension):
            data[f'value_{j}'] = self.values[:, j]
        for j in range(self.dimension):
            data[f'stderr_{j}'] = self.std_error[:, j]
        return pd.DataFrame(data)

    def to_csv(self, path: Union[str, Path]) -> Path:
        """Write the curve as CSV (header row, '.' decimal, UTF-8)."""
        path = Path(path)
        self.to_frame().to_csv(path, index=False, float_format='%.17g', encoding='utf-8')
        logger.debug(f"Wrote solution curve with {self.grid.size} points to {path}")
        return path

    @staticmethod
    def from_frame(frame: pd.DataFrame, metadata: Optional[Dict[str, Any]] = None) -> 'SolutionCurve':
        if 'x' not in frame.columns:
            raise ValidationError("solution table needs an 'x' column")
        value_cols = sorted((c for c in frame.columns if c.startswith('value_')),
                            key=lambda c: int(c.split('_')[1]))
        if not value_cols:
            raise ValidationError("solution table has no value_ columns")
        err_cols = [c.replace('value_', 'stderr_') for c in value_cols]
        values = frame[value_cols].to_numpy(dtype=float)
        if all(c in frame.columns for c in err_cols):
            errors = frame[err_cols].to_numpy(dtype=float)
        else:
            errors = np.zeros_like(values)
        return SolutionCurve(frame['x'].to_numpy(dtype=float), values, errors,
                             metadata=dict(metadata or {}))

    @staticmethod
    def from_csv(path: Union[str, Path], metadata: Optional[Dict[str, Any]] = None) -> 'SolutionCurve':
        """Read a curve written by :meth:`to_csv`."""
        frame = pd.read_csv(path, encoding='utf-8')
        return SolutionCurve.from_frame(frame, metadata)

    def summary(self) -> Dict[str, Any]:
        return {
            'n_points': int(self.grid.size),
            'a': self.a,
            'x_max': float(self.grid[-1]),
            'dimension': self.dimension,
            'boundary_value': self.boundary_value.tolist(),
            'final_value': self.values[-1].tolist(),
            'max_std_error': self.max_std_error(),
            'flags': list(self.flags),
            'metadata': json.loads(json.dumps(self.metadata, default=str)),
        }
