"""
    --- AUTO-GENERATED DOCSTRING ---
    Table of content is automatically generated by Agent Docstrings v1.3.5

    Classes/Functions:
        - TestSolveConst (line 32):
        - TestScalarRelaxation (line 141):
    --- END AUTO-GENERATED DOCSTRING ---

Tests for constant-generator problems and the scalar relaxation equation.
"""
import math

import numpy as np
import pytest

from genfrac.errors import ValidationError
from genfrac.gen_derivative import residual
from genfrac.measures import FiniteDiscrete, StableFractional
from genfrac.mittag_leffler import classical_ml, gen_ml_scalar
from genfrac.solvers.generators import GeneratorFamily
from genfrac.solvers.homogeneous import (
    passage_time_ensemble,
    solve_const,
    solve_scalar_relaxation,
)
from tests.conftest import ReferenceValues

GRID = np.array([0.0, 0.25, 0.5, 1.0])


class TestSolveConst:
    """D f = A f + g with constant A."""

    def test_stable_relaxation_monte_carlo(self, stable_half, seed):
        """First-passage estimate matches E_{1/2}(-x^{1/2})."""
        curve = solve_const(stable_half, [[-1.0]], 1.0, grid=GRID, n_samples=20000, seed=seed)
        expected = classical_ml(0.5, -np.sqrt(GRID[1:]))
        for value, error, target in zip(curve.values[1:, 0], curve.std_error[1:, 0], expected):
            ReferenceValues.assert_within(value, target, error)
        assert curve.values[0, 0] == 1.0
        assert curve.std_error[0, 0] == 0.0
        assert 'truncated' not in curve.flags

    def test_series_matches_mittag_leffler(self, stable_half):
        """The potential series is deterministic and accurate."""
        curve = solve_const(stable_half, [[-1.0]], 1.0, grid=GRID, method='series')
        expected = classical_ml(0.5, -np.sqrt(GRID[1:]))
        np.testing.assert_allclose(curve.values[1:, 0], expected, atol=1e-6)
        assert curve.max_std_error() == 0.0
        assert curve.metadata['n_samples'] == 0

    def test_reproducible_across_workers(self, stable_half, seed):
        """Same seed, different worker counts, same curve."""
        first = solve_const(stable_half, [[-1.0]], 1.0, grid=GRID, n_samples=3000, seed=seed, workers=1)
        second = solve_const(stable_half, [[-1.0]], 1.0, grid=GRID, n_samples=3000, seed=seed, workers=4)
        np.testing.assert_array_equal(first.values, second.values)
        assert first.metadata['seed'] == seed

    def test_two_dimensional(self, stable_half, seed):
        """Diagonal A decouples into two relaxations."""
        curve = solve_const(stable_half, [[-1.0, 0.0], [0.0, -2.0]], [1.0, 1.0], grid=[0.0, 1.0],
                            n_samples=20000, seed=seed)
        ReferenceValues.assert_within(curve.values[1, 0], float(classical_ml(0.5, -1.0)),
                                      curve.std_error[1, 0])
        ReferenceValues.assert_within(curve.values[1, 1], float(classical_ml(0.5, -2.0)),
                                      curve.std_error[1, 1])

    def test_non_contraction_needs_lower_bound(self, stable_half):
        """Growing A without a declared lower bound is refused."""
        with pytest.raises(ValidationError, match="not a contraction"):
            solve_const(stable_half, [[0.5]], 1.0, grid=GRID)

    def test_non_contraction_with_lower_bound(self, stable_half, caplog):
        """A declared bound admits the problem and flags it."""
        curve = solve_const(stable_half, [[0.5]], 1.0, grid=GRID, method='series',
                            lower_bound=(0.5, 1.0))
        assert 'out_of_theorem' in curve.flags
        assert "Non-contraction" in caplog.text
        expected = classical_ml(0.5, 0.5 * np.sqrt(GRID[1:]))
        np.testing.assert_allclose(curve.values[1:, 0], expected, rtol=1e-6)

    def test_source_with_atoms(self, poisson_unit, seed):
        """A = 0, g = 1, Y = 0 gives the mean exit time ⌈x⌉."""
        curve = solve_const(poisson_unit, [[0.0]], 0.0, g=1.0, grid=[0.0, 0.5, 1.5],
                            n_samples=20000, seed=seed)
        ReferenceValues.assert_within(curve.values[1, 0], 1.0, curve.std_error[1, 0])
        ReferenceValues.assert_within(curve.values[2, 0], 2.0, curve.std_error[2, 0])

    def test_source_solution_residual(self, poisson_unit, seed):
        """A Monte Carlo solution with a source satisfies the equation within its noise."""
        source = lambda x: 0.1 + 0.1 * np.asarray(x, dtype=float)  # noqa: E731
        grid = np.linspace(0.0, 1.0, 33)
        curve = solve_const(poisson_unit, [[-0.25]], 1.0, g=source, grid=grid,
                            n_samples=20000, seed=seed)
        # one jump exits, so f = (Y + g) / (1 - A) on (0, 1]
        ReferenceValues.assert_within(curve.values[-1, 0], 0.96, curve.std_error[-1, 0])
        report = residual(curve, poisson_unit, GeneratorFamily.constant([[-0.25]]), g=source)
        assert report.passes(5e-3 + 5 * curve.max_std_error())

    def test_grid_gets_boundary_point(self, poisson_unit):
        """a is prepended when the grid omits it."""
        curve = solve_const(poisson_unit, [[-1.0]], 0.0, grid=[0.5, 1.0], n_samples=10)
        np.testing.assert_array_equal(curve.grid, [0.0, 0.5, 1.0])
        # Y = 0 and g = 0 is the zero solution
        assert not np.any(curve.values)

    def test_grid_below_boundary(self, poisson_unit):
        """Grid points left of a are rejected."""
        with pytest.raises(ValidationError):
            solve_const(poisson_unit, [[-1.0]], 1.0, a=1.0, grid=[0.5, 1.0, 2.0])

    def test_series_rejects_source(self, stable_half):
        """The series method covers g = 0 only."""
        with pytest.raises(ValidationError):
            solve_const(stable_half, [[-1.0]], 1.0, g=1.0, grid=GRID, method='series')

    def test_series_needs_lower_bound(self, two_atoms):
        """Atomic measures have no fractional lower bound."""
        with pytest.raises(ValidationError):
            solve_const(two_atoms, [[-1.0]], 1.0, grid=GRID, method='series')

    @pytest.mark.parametrize("kwargs", [
        {'Y': [1.0, 2.0, 3.0]},
        {'Y': 1.0, 'method': 'euler'},
    ])
    def test_invalid_arguments(self, stable_half, kwargs):
        """Mismatched boundary vectors and unknown methods are rejected."""
        with pytest.raises(ValidationError):
            solve_const(stable_half, [[-1.0, 0.0], [0.0, -1.0]], grid=GRID, **kwargs)

    def test_passage_ensemble_shape(self, stable_half, poisson_unit):
        """One row per path, one column per level, nondecreasing in the level."""
        levels = np.array([0.5, 1.0, 2.0])
        for nu in (stable_half, poisson_unit):
            sigma = passage_time_ensemble(nu, levels, np.random.default_rng(0), 50)
            assert sigma.shape == (50, 3)
            assert np.all(np.diff(sigma, axis=1) >= 0)


class TestScalarRelaxation:
    """f(x) = Y·E_(ν),x(-λ)."""

    def test_closed_form_stable(self):
        """Stable measures use the classical Mittag-Leffler function with scale c."""
        nu = StableFractional(0.5, 2.0)
        curve = solve_scalar_relaxation(nu, 1.0, 2.0, grid=GRID)
        expected = 2.0 * classical_ml(0.5, -np.sqrt(GRID[1:]) / 2.0)
        np.testing.assert_allclose(curve.values[1:, 0], expected, rtol=1e-12)
        assert curve.metadata['method'] == 'closed_form'

    def test_closed_form_single_atom(self, poisson_unit):
        """(b/(b+λ))^k with k unit jumps needed to exit."""
        curve = solve_scalar_relaxation(poisson_unit, 1.0, 1.0, grid=[0.0, 1.0, 1.5])
        np.testing.assert_allclose(curve.values[:, 0], [1.0, 0.5, 0.25])

    def test_passage_rule_at_lattice_points(self, poisson_unit, seed):
        """Closed exit gives 1/2 at x = 1 where the open-rule Mittag-Leffler value is 1/4."""
        curve = solve_scalar_relaxation(poisson_unit, 1.0, 1.0, grid=[0.0, 1.0, 1.5])
        at_lattice = gen_ml_scalar(poisson_unit, 1.0, 1.0, n_samples=20000, seed=seed)
        off_lattice = gen_ml_scalar(poisson_unit, 1.5, 1.0, n_samples=20000, seed=seed)
        assert curve.values[1, 0] == pytest.approx(0.5)
        ReferenceValues.assert_within(at_lattice.value, 0.25, at_lattice.std_error)
        ReferenceValues.assert_within(off_lattice.value, curve.values[2, 0], off_lattice.std_error)

    def test_monte_carlo_matches_closed_form(self, stable_half, seed):
        """The first-passage estimator agrees with the Mittag-Leffler value."""
        curve = solve_scalar_relaxation(stable_half, 1.0, 1.0, grid=[0.0, 1.0],
                                        method='first_passage', n_samples=20000, seed=seed)
        ReferenceValues.assert_within(curve.values[1, 0], ReferenceValues.ML_HALF_MINUS_ONE,
                                      curve.std_error[1, 0])
        assert curve.metadata['seed'] == seed

    def test_auto_falls_back_to_monte_carlo(self, two_atoms, seed):
        """Two atoms have no closed form."""
        curve = solve_scalar_relaxation(two_atoms, 1.0, 1.0, grid=[0.0, 1.0], n_samples=200, seed=seed)
        assert curve.metadata['method'] == 'first_passage'
        assert 0.0 < curve.values[1, 0] < 1.0

    def test_zero_rate(self, stable_half):
        """λ = 0 keeps the boundary value."""
        curve = solve_scalar_relaxation(stable_half, 0.0, 3.0, grid=GRID)
        assert np.all(curve.values == 3.0)

    def test_negative_rate(self, stable_half):
        """λ < 0 is rejected."""
        with pytest.raises(ValidationError):
            solve_scalar_relaxation(stable_half, -1.0, 1.0, grid=GRID)

    def test_closed_form_unavailable(self, two_atoms):
        """Requesting a closed form that does not exist fails."""
        with pytest.raises(ValidationError):
            solve_scalar_relaxation(two_atoms, 1.0, 1.0, grid=GRID, method='closed_form')

    def test_two_atoms_exact_probability(self, seed):
        """Unit atoms at rate 2: E e^{-σ_1} = 2/3."""
        nu = FiniteDiscrete(((1.0, 2.0),))
        curve = solve_scalar_relaxation(nu, 1.0, 1.0, grid=[0.0, 1.0], method='first_passage',
                                        n_samples=20000, seed=seed)
        ReferenceValues.assert_within(curve.values[1, 0], 2.0 / 3.0, curve.std_error[1, 0])
        assert math.isclose(solve_scalar_relaxation(nu, 1.0, 1.0, grid=[0.0, 1.0]).values[1, 0],
                            2.0 / 3.0)
