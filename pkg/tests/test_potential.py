"""
    --- AUTO-GENERATED DOCSTRING ---
    Table of content is automatically generated by Agent Docstrings v1.3.5

    Classes/Functions:
        - TestPotentialMass (line 38):
        - TestPotentialTable (line 155):
        - TestFractionalIntegral (line 198):
        - TestIteratedPotentials (line 264):
    --- END AUTO-GENERATED DOCSTRING ---

Tests for potential measures, generalized fractional integrals and their
iterates.
"""
import math

import numpy as np
import pytest
from scipy import special

from genfrac.config import GenFracConfig
from genfrac.errors import NumericalGuardError, ValidationError
from genfrac.measures import FiniteDiscrete, StableFractional, Sum, TemperedStable, Truncated
from genfrac.potential import (
    PotentialEstimate,
    atomic_part,
    check_exponential_bound,
    fractional_integral,
    iterated_potential_one,
    iterated_potentials,
    passage_jump_count,
    potential_mass,
    tabulate_potential,
)
from tests.conftest import ReferenceValues


class TestPotentialMass:
    """U_λ([0, z]) by every method."""

    def test_poisson_series_counts_jumps(self, poisson_unit):
        """Unit atoms: U([0, 2.5]) counts S_0, S_1, S_2."""
        estimate = potential_mass(poisson_unit, 0.0, 2.5, method='series')
        assert estimate.value == pytest.approx(3.0, rel=1e-12)
        assert estimate.method == 'series'
        assert estimate.flags == []

    def test_poisson_closed_form_matches_series(self, poisson_unit):
        """λ = 1, z = 1.5: 1/2 + 1/4."""
        closed = potential_mass(poisson_unit, 1.0, 1.5, method='closed_form')
        series = potential_mass(poisson_unit, 1.0, 1.5, method='series')
        assert closed.value == pytest.approx(0.75, rel=1e-12)
        assert series.value == pytest.approx(0.75, rel=1e-12)

    def test_auto_method(self, stable_half, poisson_unit, two_atoms):
        """Closed forms first, then series, then Laplace inversion."""
        assert potential_mass(stable_half, 0.0, 1.0).method == 'closed_form'
        assert potential_mass(poisson_unit, 0.0, 1.0).method == 'closed_form'
        assert potential_mass(two_atoms, 0.0, 1.0).method == 'series'
        assert potential_mass(TemperedStable(0.5, 1.0), 0.0, 1.0).method == 'laplace_inversion'

    def test_stable_closed_form(self, stable_half):
        """U([0, 1]) = 1/Γ(3/2) = 2/√π."""
        estimate = potential_mass(stable_half, 0.0, 1.0, method='closed_form')
        assert estimate.value == pytest.approx(ReferenceValues.STABLE_HALF_POTENTIAL_ONE, rel=1e-12)

    def test_stable_laplace_inversion(self, stable_half):
        """Talbot inversion reproduces the closed form."""
        for lam in (0.0, 1.0):
            closed = potential_mass(stable_half, lam, 1.0, method='closed_form').value
            inverted = potential_mass(stable_half, lam, 1.0, method='laplace_inversion').value
            assert inverted == pytest.approx(closed, rel=1e-6)

    def test_stable_with_killing(self, stable_half):
        """U_1([0, 1]) = 1 - E_{1/2}(-1)."""
        estimate = potential_mass(stable_half, 1.0, 1.0, method='closed_form')
        assert estimate.value == pytest.approx(1.0 - ReferenceValues.ML_HALF_MINUS_ONE, rel=1e-9)

    def test_stable_monte_carlo(self, stable_half, seed):
        """Exact passage times estimate U([0, 1])."""
        estimate = potential_mass(stable_half, 0.0, 1.0, method='monte_carlo',
                                  n_samples=20000, seed=seed)
        ReferenceValues.assert_within(estimate.value, ReferenceValues.STABLE_HALF_POTENTIAL_ONE,
                                      estimate.std_error)
        assert estimate.params['seed'] == seed
        assert estimate.flags == []

    def test_atoms_monte_carlo_matches_series(self, two_atoms, seed):
        """Open passage convention agrees with the series."""
        series = potential_mass(two_atoms, 0.0, 1.25, method='series').value
        estimate = potential_mass(two_atoms, 0.0, 1.25, method='monte_carlo',
                                  n_samples=20000, seed=seed)
        ReferenceValues.assert_within(estimate.value, series, estimate.std_error)

    def test_binned_series_matches_monte_carlo(self, stable_half, seed):
        """Non-atomic finite measures use the binned series."""
        nu = Truncated(stable_half, 0.05)
        series = potential_mass(nu, 0.0, 1.0, method='series')
        assert series.flags == ['binned']
        estimate = potential_mass(nu, 0.0, 1.0, method='monte_carlo', n_samples=20000, seed=seed)
        ReferenceValues.assert_within(estimate.value, series.value, estimate.std_error, floor=0.02)

    def test_truncated_monte_carlo_is_flagged(self, seed):
        """Monte Carlo on an infinite non-stable measure records the cutoff."""
        estimate = potential_mass(TemperedStable(0.5, 1.0), 0.0, 0.5, method='monte_carlo',
                                  n_samples=2000, eps=1e-3, seed=seed)
        assert estimate.flags == ['truncated']
        assert estimate.params['eps'] == 1e-3

    def test_invalid_arguments(self, stable_half, two_atoms):
        """Negative λ, nonpositive z and inapplicable methods are rejected."""
        with pytest.raises(ValidationError):
            potential_mass(stable_half, -1.0, 1.0)
        with pytest.raises(ValidationError):
            potential_mass(stable_half, 0.0, 0.0)
        with pytest.raises(ValidationError):
            potential_mass(stable_half, 0.0, 1.0, method='quadrature')
        with pytest.raises(ValidationError):
            potential_mass(two_atoms, 0.0, 1.0, method='closed_form')
        with pytest.raises(ValidationError):
            potential_mass(stable_half, 0.0, 1.0, method='series')
        with pytest.raises(ValidationError):
            potential_mass(two_atoms, 0.0, 1.0, method='laplace_inversion')

    def test_atom_tuple_guard(self, monkeypatch):
        """Incommensurate atoms stop when the sum support grows too large."""
        monkeypatch.setattr(GenFracConfig, 'MAX_ATOM_TUPLES', 5)
        nu = FiniteDiscrete(((1.0, 1.0), (math.sqrt(2.0), 1.0)))
        with pytest.raises(NumericalGuardError):
            potential_mass(nu, 0.0, 20.0, method='series')

    def test_exponential_bound(self, stable_half):
        """U([0, z]) ≤ e^{kz}/φ(k)."""
        assert check_exponential_bound(stable_half, 1.0, 1.0)
        too_large = PotentialEstimate(value=100.0, method='closed_form')
        assert not check_exponential_bound(stable_half, 1.0, 1.0, estimate=too_large)
        with pytest.raises(ValidationError):
            check_exponential_bound(stable_half, 1.0, 0.0)

    def test_passage_jump_count(self):
        """Closed counts reach z, open counts pass it."""
        assert passage_jump_count(2.0, 1.0, closed=True) == 2
        assert passage_jump_count(2.0, 1.0, closed=False) == 3
        assert passage_jump_count(0.25, 1.0, closed=True) == 1
        assert passage_jump_count(0.25, 1.0, closed=False) == 1

    def test_atomic_part(self, stable_half, poisson_unit):
        """Sums of atoms merge; anything continuous has no atomic form."""
        merged = atomic_part(Sum((poisson_unit, FiniteDiscrete(((1.0, 2.0), (0.5, 1.0))))))
        assert merged.atoms == ((0.5, 1.0), (1.0, 3.0))
        assert atomic_part(stable_half) is None
        assert atomic_part(Truncated(FiniteDiscrete(((0.5, 1.0), (2.0, 1.0))), 1.0)).atoms == ((2.0, 1.0),)


class TestPotentialTable:
    """Tabulated cumulative potentials."""

    def test_stable_table(self, stable_half):
        """Table values follow z^β/Γ(1+β) and start at 0."""
        table = tabulate_potential(stable_half, 2.0, h=0.25)
        assert table.grid.size == 9
        assert table.step == pytest.approx(0.25)
        assert table.cumulative[0] == 0.0
        np.testing.assert_allclose(table.cumulative[1:],
                                   np.sqrt(table.grid[1:]) / special.gamma(1.5), rtol=1e-12)
        assert table.masses().sum() == pytest.approx(table.cumulative[-1])

    def test_atom_table_has_mass_at_zero(self, poisson_unit):
        """Finite measures put 1/‖ν‖ at the origin."""
        table = tabulate_potential(poisson_unit, 2.0, h=0.5)
        np.testing.assert_allclose(table.cumulative, [1.0, 1.0, 2.0, 2.0, 3.0])
        assert table(0.75) == 1.0
        assert table(1.0) == 2.0

    def test_laplace_table_matches_closed_form(self, stable_half):
        """Laplace inversion table agrees with the closed form."""
        inverted = tabulate_potential(stable_half, 1.0, h=0.125, method='laplace_inversion')
        closed = tabulate_potential(stable_half, 1.0, h=0.125, method='closed_form')
        np.testing.assert_allclose(inverted.cumulative, closed.cumulative, atol=1e-7)

    def test_monte_carlo_table(self, two_atoms, seed):
        """Monte Carlo table carries standard errors and matches the series."""
        table = tabulate_potential(two_atoms, 1.0, h=0.25, method='monte_carlo',
                                   n_samples=10000, seed=seed)
        series = tabulate_potential(two_atoms, 1.0, h=0.25, method='series')
        assert table.std_error is not None
        gap = np.abs(table.cumulative - series.cumulative)
        assert np.all(gap <= 5 * table.std_error + 1e-2)

    def test_invalid_table(self, stable_half):
        """z_max > 0 and λ ≥ 0 are required."""
        with pytest.raises(ValidationError):
            tabulate_potential(stable_half, 0.0)
        with pytest.raises(ValidationError):
            tabulate_potential(stable_half, 1.0, lam=-1.0)


class TestFractionalIntegral:
    """I^(ν)_a g(x) on grids and by simulation."""

    def test_constant_function(self, stable_half):
        """I 1(1) = U([0, 1]) and is flagged generalized."""
        estimate = fractional_integral(stable_half, 0.0, lambda y: np.ones_like(y), 1.0)
        assert estimate.value == pytest.approx(ReferenceValues.STABLE_HALF_POTENTIAL_ONE, rel=1e-9)
        assert estimate.flags == ['generalized']

    def test_linear_function(self, stable_half):
        """I y(x) = x^{3/2}/Γ(5/2) for the stable measure of order 1/2."""
        estimate = fractional_integral(stable_half, 0.0, lambda y: y, 1.0)
        assert estimate.value == pytest.approx(1.0 / special.gamma(2.5), rel=1e-3)
        assert estimate.flags == []

    def test_shifted_left_end(self, stable_half):
        """Only x - a matters for a translated function."""
        shifted = fractional_integral(stable_half, 2.0, lambda y: y - 2.0, 3.0)
        assert shifted.value == pytest.approx(1.0 / special.gamma(2.5), rel=1e-3)

    def test_scalar_callable(self, poisson_unit):
        """Non-vectorized callables are evaluated point by point."""
        estimate = fractional_integral(poisson_unit, 0.0, lambda y: 1.0, 1.5, h=0.25)
        assert estimate.value == pytest.approx(2.0, rel=1e-12)

    def test_at_left_end(self, stable_half, poisson_unit):
        """x = a gives g(a)/‖ν‖ for finite measures and 0 otherwise."""
        assert fractional_integral(poisson_unit, 0.0, lambda y: 3.0 + 0 * y, 0.0).value == 3.0
        assert fractional_integral(stable_half, 0.0, lambda y: 3.0 + 0 * y, 0.0).value == 0.0

    def test_monte_carlo(self, poisson_unit, seed):
        """I 1(1.5) = E τ_{1.5} = 2 for unit atoms."""
        estimate = fractional_integral(poisson_unit, 0.0, lambda y: np.ones_like(y), 1.5,
                                       method='monte_carlo', n_samples=20000, seed=seed)
        ReferenceValues.assert_within(estimate.value, 2.0, estimate.std_error)
        assert estimate.method == 'monte_carlo'

    def test_monte_carlo_truncated(self, stable_half, seed):
        """Simulation on an infinite measure records the cutoff."""
        estimate = fractional_integral(stable_half, 0.0, lambda y: y, 1.0, method='monte_carlo',
                                       n_samples=4000, eps=1e-3, seed=seed)
        assert 'truncated' in estimate.flags
        ReferenceValues.assert_within(estimate.value, 1.0 / special.gamma(2.5),
                                      estimate.std_error, floor=0.06)

    @pytest.mark.parametrize('name, cutoff, eps', [
        ('two_atoms', 0.75, None),
        ('stable_half', 0.05, 1e-3),
    ])
    def test_comparison_principle(self, request, name, cutoff, eps, seed):
        """Adding jumps lowers ∫(z - y)₊ U(dy), i.e. raises ∫f dU for nondecreasing f = -(z - y)₊."""
        nu = request.getfixturevalue(name)
        kwargs = dict(method='monte_carlo', n_samples=20000, seed=seed)
        more = fractional_integral(nu, 0.0, lambda y: y, 1.5, eps=eps, **kwargs)
        fewer = fractional_integral(Truncated(nu, cutoff), 0.0, lambda y: y, 1.5, **kwargs)
        combined = math.hypot(more.std_error, fewer.std_error)
        assert -more.value >= -fewer.value - 3 * combined

    def test_invalid_arguments(self, stable_half):
        """x < a and unknown methods are rejected."""
        with pytest.raises(ValidationError):
            fractional_integral(stable_half, 1.0, lambda y: y, 0.5)
        with pytest.raises(ValidationError):
            fractional_integral(stable_half, 0.0, lambda y: y, 0.5, method='spline')


class TestIteratedPotentials:
    """Repeated fractional integrals of the constant 1."""

    def test_stable_closed_form(self, stable_half):
        """[(I_0)^k 1](z) = z^{kβ}/Γ(1+kβ)."""
        values = iterated_potentials(stable_half, 4.0, 3)
        expected = [4.0 ** (0.5 * k) / special.gamma(1.0 + 0.5 * k) for k in range(4)]
        np.testing.assert_allclose(values, expected, rtol=1e-12)
        assert iterated_potential_one(stable_half, 1.0, 2) == pytest.approx(1.0)

    def test_atoms_on_grid(self, poisson_unit):
        """Unit atoms: I 1(2.5) = 3 and I² 1(2.5) = 3 + 2 + 1."""
        values = iterated_potentials(poisson_unit, 2.5, 2)
        np.testing.assert_allclose(values, [1.0, 3.0, 6.0], rtol=1e-9)

    def test_grid_matches_stable_closed_form(self):
        """Grid iteration approximates the closed form."""
        nu = StableFractional(0.5)
        table = tabulate_potential(nu, 1.0, h=1.0 / 1024)
        values = iterated_potentials(nu, 1.0, 2, table=table)
        assert values[1] == pytest.approx(1.0 / special.gamma(1.5), rel=1e-9)
        assert values[2] == pytest.approx(1.0, rel=2e-2)

    def test_zero_point_and_negative_order(self, stable_half):
        """z = 0 keeps only the k = 0 term; k < 0 is rejected."""
        np.testing.assert_array_equal(iterated_potentials(stable_half, 0.0, 2), [1.0, 0.0, 0.0])
        with pytest.raises(ValidationError):
            iterated_potentials(stable_half, 1.0, -1)
