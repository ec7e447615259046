"""
    --- AUTO-GENERATED DOCSTRING ---
    Table of content is automatically generated by Agent Docstrings v1.3.5

    Classes/Functions:
        - heat() (line 31)
        - TestSymbolFamily (line 39):
        - TestGreenFunction (line 79):
        - TestSolvePsido (line 100):
    --- END AUTO-GENERATED DOCSTRING ---

Tests for the periodic pseudo-differential solver.
"""
import math

import numpy as np
import pytest

from genfrac.errors import ValidationError
from genfrac.mittag_leffler import classical_ml
from genfrac.solvers.psido import SymbolFamily, green_along_path, parseval_check, solve_psido
from genfrac.subordinator_paths import JumpPath
from tests.conftest import ReferenceValues

# 2π-periodic torus: mode k has frequency p = k
N_NODES = 8
LENGTH = 2.0 * math.pi


@pytest.fixture
def heat():
    return SymbolFamily.heat(N_NODES, LENGTH)


def _cosine(t, w):
    return np.cos(w)


class TestSymbolFamily:
    """Symbol construction and the dissipativity gate."""

    def test_frequencies(self, heat):
        """Frequencies follow the FFT ordering."""
        np.testing.assert_allclose(heat.frequencies, [0, 1, 2, 3, -4, -3, -2, -1], atol=1e-12)
        assert heat.nodes[1] == pytest.approx(LENGTH / N_NODES)

    def test_heat_switch(self):
        """The coefficient changes across the threshold."""
        symbols = SymbolFamily.heat(N_NODES, LENGTH, coef=2.0, coef_low=1.0, threshold=0.5)
        values = symbols.evaluate([0.2, 1.0])
        assert values[0, 1].real == pytest.approx(1.0)
        assert values[1, 1].real == pytest.approx(2.0)
        assert not symbols.position_independent

    def test_undamped_transport_rejected(self):
        """Purely oscillatory modes are not dissipative."""
        with pytest.raises(ValidationError, match="oscillatory"):
            SymbolFamily.transport(N_NODES, LENGTH, c=1.0).check_dissipative()

    def test_damped_transport_accepted(self):
        """A viscous term makes transport dissipative."""
        SymbolFamily.transport(N_NODES, LENGTH, c=1.0, damping=0.1).check_dissipative()

    def test_negative_heat_rejected(self):
        """Re ψ < 0 grows modes."""
        with pytest.raises(ValidationError, match="not dissipative"):
            SymbolFamily.heat(N_NODES, LENGTH, coef=-1.0).check_dissipative()

    def test_builtin_lookup(self):
        """Built-in symbols are found by name."""
        symbols = SymbolFamily.from_builtin('frac_laplace', N_NODES, LENGTH, alpha=1.0)
        assert symbols.evaluate([0.0])[0, 2].real == pytest.approx(2.0)
        with pytest.raises(ValidationError):
            SymbolFamily.from_builtin('wave', N_NODES, LENGTH)
        with pytest.raises(ValidationError):
            SymbolFamily.frac_laplace(N_NODES, LENGTH, alpha=2.5)


class TestGreenFunction:
    """Green function along one path."""

    def test_mass_conservation(self, heat):
        """ψ(0) = 0 keeps Σ_w G = 1."""
        path = JumpPath(x=1.0, horizon=1.0, jump_times=[0.4], jump_sizes=[0.3])
        green = green_along_path(path, heat, 1.0)
        assert green.sum().real == pytest.approx(1.0, abs=1e-12)
        assert abs(green.sum().imag) < 1e-12

    def test_time_zero_is_delta(self, heat):
        """G at s = 0 is the unit mass at the origin."""
        path = JumpPath(x=1.0, horizon=1.0)
        np.testing.assert_allclose(green_along_path(path, heat, 0.0), np.eye(N_NODES)[0], atol=1e-12)

    def test_time_outside_horizon(self, heat):
        """s must lie on the path."""
        with pytest.raises(ValidationError):
            green_along_path(JumpPath(x=1.0, horizon=1.0), heat, 2.0)


class TestSolvePsido:
    """Mode-wise Monte Carlo solution."""

    def test_single_jump_modes(self, heat, poisson_unit, seed):
        """One exit jump at unit rate gives f̂ = ĝ/(1 + ψ)."""
        profile = np.cos(heat.nodes)
        solution = solve_psido(poisson_unit, heat, profile, 0.0, [0.5], n_samples=20000, seed=seed)
        # ĝ(±1) = n/2 and ψ(±1) = 1
        ReferenceValues.assert_within(solution.modes[1, 1].real, 2.0, solution.mode_std_error[1, 1])
        ReferenceValues.assert_within(solution.modes[1, 7].real, 2.0, solution.mode_std_error[1, 7])
        assert abs(solution.modes[1, 0]) < 1e-12
        np.testing.assert_allclose(solution.values[0], 0.0)

    def test_callable_source_matches_profile(self, heat, poisson_unit, seed):
        """The path-wise loop agrees with the constant-symbol shortcut."""
        solution = solve_psido(poisson_unit, heat, _cosine, 0.0, [0.5, 1.5], n_samples=20000, seed=seed)
        ReferenceValues.assert_within(solution.modes[1, 1].real, 2.0, solution.mode_std_error[1, 1])
        # two jumps to exit: (1 - (1+ψ)^{-2})/ψ = 3/4 at ψ = 1
        ReferenceValues.assert_within(solution.modes[2, 1].real, 3.0, solution.mode_std_error[2, 1])
        ReferenceValues.assert_within(solution.values[2, 0], 0.75, solution.std_error[2, 0])

    def test_stable_measure(self, heat, stable_half, seed):
        """Exact stable exits give the mode value (1 - E_{1/2}(-p²(t - a)^{1/2}))/p² without truncation."""
        solution = solve_psido(stable_half, heat, np.cos(heat.nodes), 0.0, [0.5, 1.0],
                               n_samples=20000, seed=seed)
        assert solution.metadata['eps'] is None
        assert solution.metadata['seed'] == seed
        for i, t in enumerate([0.5, 1.0], start=1):
            # p = 1 and ĝ(1) = n/2
            expected = 1.0 - classical_ml(0.5, -math.sqrt(t))
            gap = abs(solution.modes[i, 1].real - 0.5 * N_NODES * expected)
            assert gap <= 3 * solution.mode_std_error[i, 1] + 1e-6
            assert abs(solution.values[i, 0] - expected) <= 3 * solution.std_error[i, 0] + 1e-6

    def test_no_source(self, heat, poisson_unit):
        """g = None is the zero field."""
        solution = solve_psido(poisson_unit, heat, None, 0.0, [0.5, 1.0])
        assert not np.any(solution.values)
        assert solution.t_grid[0] == 0.0

    def test_rejects_growing_symbol(self, poisson_unit):
        """The dissipativity gate runs before sampling."""
        symbols = SymbolFamily.heat(N_NODES, LENGTH, coef=-1.0)
        with pytest.raises(ValidationError):
            solve_psido(poisson_unit, symbols, np.ones(N_NODES), 0.0, [1.0])

    def test_frame_layout(self, heat, poisson_unit, seed):
        """One row per time, one column per node."""
        solution = solve_psido(poisson_unit, heat, np.cos(heat.nodes), 0.0, [0.5], n_samples=100, seed=seed)
        frame = solution.to_frame()
        assert list(frame.columns) == ['t'] + [f'w_{j}' for j in range(N_NODES)]
        assert len(frame) == 2
        np.testing.assert_allclose(solution.mode_frequencies(), heat.frequencies, atol=1e-12)

    def test_parseval(self):
        """Σ|f|² = Σ|f̂|²/n."""
        values = np.random.default_rng(0).normal(size=(3, 16))
        assert parseval_check(values) < 1e-12
