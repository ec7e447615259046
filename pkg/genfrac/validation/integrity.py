"""
    --- AUTO-GENERATED DOCSTRING ---
    Table of content is automatically generated by Agent Docstrings v1.3.5

    Classes/Functions:
        - SolutionIntegrityChecker (line 36):
            - validate_solution_curve(curve: SolutionCurve, boundary: Optional[Sequence[float]] = None) -> Tuple[bool, List[str]] (line 43)
            - _validate_grid(curve: SolutionCurve) (line 70)
            - _validate_values(curve: SolutionCurve) (line 85)
            - _validate_boundary(curve: SolutionCurve, boundary: Optional[Sequence[float]]) (line 100)
            - _validate_flags(curve: SolutionCurve) (line 116)
            - validate_manifest(manifest: Union[Mapping[str, Any], Any]) -> Tuple[bool, List[str]] (line 123)
    --- END AUTO-GENERATED DOCSTRING ---

Integrity checks for solution curves and experiment manifests.

A curve read back from disk is checked before anything is computed from it:
the grid must start at a and increase, the first row must carry the boundary
value exactly, and every value and standard error must be finite with errors
nonnegative.
"""
import logging
from typing import Any, List, Mapping, Optional, Sequence, Tuple, Union

import numpy as np

from genfrac.solvers.solution import SolutionCurve

logger = logging.getLogger(__name__)

MANIFEST_FIELDS = ('command', 'measure', 'params', 'n_samples', 'eps', 'seed',
                   'grid', 'outputs', 'version')
KNOWN_FLAGS = ('truncated', 'out_of_theorem', 'quadrature_error_estimated', 'y_bound_estimated')


class SolutionIntegrityChecker:
    """Structural checks on SolutionCurve objects and manifests."""

    def __init__(self):
        self.validation_errors: List[str] = []
        self.validation_warnings: List[str] = []

    def validate_solution_curve(self, curve: SolutionCurve,
                                boundary: Optional[Sequence[float]] = None) -> Tuple[bool, List[str]]:
        """
        Validate a solution curve.

        Args:
            curve: Curve to validate
            boundary: Expected f(a); defaults to metadata['Y'] when present

        Returns:
            Tuple of (is_valid, messages) with errors before warnings
        """
        self.validation_errors = []
        self.validation_warnings = []

        self._validate_grid(curve)
        self._validate_values(curve)
        if boundary is None:
            boundary = curve.metadata.get('Y')
        self._validate_boundary(curve, boundary)
        self._validate_flags(curve)

        is_valid = not self.validation_errors
        if not is_valid:
            logger.warning(f"Solution curve failed {len(self.validation_errors)} integrity checks")
        return is_valid, self.validation_errors + self.validation_warnings

    def _validate_grid(self, curve: SolutionCurve):
        grid = curve.grid
        if grid.ndim != 1 or grid.size == 0:
            self.validation_errors.append("Grid is empty or not one-dimensional")
            return
        if not np.all(np.isfinite(grid)):
            self.validation_errors.append("Grid contains non-finite points")
        elif np.any(np.diff(grid) <= 0):
            self.validation_errors.append("Grid is not strictly increasing")
        a = curve.metadata.get('a')
        if a is not None and grid[0] != float(a):
            self.validation_errors.append(f"Grid starts at {grid[0]!r}, not at a={a!r}")
        if grid.size < 2:
            self.validation_warnings.append("Grid holds the boundary point only")

    def _validate_values(self, curve: SolutionCurve):
        if curve.values.shape[0] != curve.grid.size:
            self.validation_errors.append(
                f"Values have {curve.values.shape[0]} rows for {curve.grid.size} grid points")
        if curve.std_error.shape != curve.values.shape:
            self.validation_errors.append("Standard errors and values differ in shape")
        if not np.all(np.isfinite(curve.values)):
            self.validation_errors.append("Values contain NaN or infinity")
        if not np.all(np.isfinite(curve.std_error)):
            self.validation_errors.append("Standard errors contain NaN or infinity")
        elif np.any(curve.std_error < 0):
            self.validation_errors.append("Negative standard errors")
        if curve.std_error.size and np.any(curve.std_error[0] != 0):
            self.validation_warnings.append("Boundary row carries a nonzero standard error")

    def _validate_boundary(self, curve: SolutionCurve, boundary: Optional[Sequence[float]]):
        if boundary is None:
            self.validation_warnings.append("No boundary value to compare with f(a)")
            return
        expected = np.atleast_1d(np.asarray(boundary, dtype=float))
        if expected.size == 1 and curve.dimension > 1:
            expected = np.full(curve.dimension, float(expected[0]))
        if expected.size != curve.dimension:
            self.validation_errors.append(
                f"Boundary value has dimension {expected.size}, curve has {curve.dimension}")
            return
        # f(a) = Y is imposed, not estimated, so it must match exactly
        if not np.array_equal(curve.boundary_value, expected):
            self.validation_errors.append(
                f"f(a)={curve.boundary_value.tolist()} differs from Y={expected.tolist()}")

    def _validate_flags(self, curve: SolutionCurve):
        for flag in curve.flags:
            if flag not in KNOWN_FLAGS:
                self.validation_warnings.append(f"Unknown result flag '{flag}'")
        if 'out_of_theorem' in curve.flags:
            self.validation_warnings.append("Solution computed outside the proven hypotheses")

    def validate_manifest(self, manifest: Union[Mapping[str, Any], Any]) -> Tuple[bool, List[str]]:
        """
        Check that an experiment manifest carries every required field.

        Args:
            manifest: Mapping or pydantic model

        Returns:
            Tuple of (is_valid, messages)
        """
        if hasattr(manifest, 'model_dump'):
            manifest = manifest.model_dump()
        if not isinstance(manifest, Mapping):
            return False, [f"Manifest must be a mapping, got {type(manifest).__name__}"]

        errors = [f"Manifest missing field '{name}'" for name in MANIFEST_FIELDS
                  if name not in manifest]
        warnings = []
        if not errors:
            if not manifest['command']:
                errors.append("Manifest has an empty command")
            samples = manifest['n_samples']
            if samples is not None and (not isinstance(samples, int) or samples < 0):
                errors.append(f"Invalid sample count: {samples!r}")
            eps = manifest['eps']
            if eps is not None and not (isinstance(eps, (int, float)) and eps > 0):
                errors.append(f"Invalid truncation level: {eps!r}")
            if manifest['seed'] is None and samples:
                warnings.append("Stochastic run without a recorded seed is not reproducible")
        return not errors, errors + warnings
