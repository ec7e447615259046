"""
    --- AUTO-GENERATED DOCSTRING ---
    Table of content is automatically generated by Agent Docstrings v1.3.5

    Classes/Functions:
        - TestVectorFunctions (line 33):
        - TestGeneratorFamily (line 59):
        - TestBuiltinFamilies (line 111):
    --- END AUTO-GENERATED DOCSTRING ---

Tests for generator families x ↦ A(x) and source coercion.
"""
import json
import math

import numpy as np
import pandas as pd
import pytest

from genfrac.errors import ValidationError
from genfrac.solvers.generators import (
    SWITCH_FIRST,
    SWITCH_SECOND,
    GeneratorFamily,
    as_vector_function,
)


def _table():
    return pd.DataFrame({'x_lo': [0.0, 0.5], 'x_hi': [0.5, 1.0], 'a11': [-1.0, -3.0]})


class TestVectorFunctions:
    """Coercion of sources and boundary data to (n, d) arrays."""

    def test_none_is_zero(self):
        """None becomes the zero function."""
        values = as_vector_function(None, 2)(np.linspace(0, 1, 3))
        assert values.shape == (3, 2)
        assert np.all(values == 0.0)

    def test_constants(self):
        """Scalars broadcast and vectors must have the right length."""
        values = as_vector_function(2.0, 3)(np.array([0.1, 0.2]))
        np.testing.assert_array_equal(values, np.full((2, 3), 2.0))
        with pytest.raises(ValidationError, match="length 2, expected 3"):
            as_vector_function([1.0, 2.0], 3)

    def test_callables(self):
        """Vectorized callables are used directly; scalar-only ones point by point."""
        xs = np.linspace(0.0, 1.0, 5)
        np.testing.assert_allclose(as_vector_function(np.sin, 1)(xs), np.sin(xs)[:, None])
        pair = as_vector_function(lambda x: [math.cos(x), math.sin(x)], 2)(xs)
        np.testing.assert_allclose(pair, np.column_stack([np.cos(xs), np.sin(xs)]))
        with pytest.raises(ValidationError, match="expected 2"):
            as_vector_function(lambda x: [x, x, x], 2)(xs)


class TestGeneratorFamily:
    """Bounds, validation and shifts of a family."""

    def test_custom_bounds_estimated(self):
        """A custom evaluator gets m_B and sup ‖A'‖ from sample points."""
        family = GeneratorFamily(evaluator=lambda x: np.array([[-np.sin(x)]]), dimension=1)
        assert family.growth_bound == pytest.approx(1.0, abs=1e-3)
        assert family.derivative_bound == pytest.approx(1.0, abs=1e-3)
        assert not family.contraction

    def test_estimate_matches_declared(self):
        """Finite differences reproduce the closed-form derivative bounds."""
        rotation = GeneratorFamily.rotation_decay(omega=2.0, rates=(1.0, 2.0))
        diagonal = GeneratorFamily.diagonal([1.0, 2.0], amplitude=0.5, omega=2.0)
        for family in (rotation, diagonal):
            assert family.derivative_bound == pytest.approx(2.0)
            assert family.estimate_derivative_bound() == pytest.approx(family.derivative_bound, rel=1e-5)
        custom = GeneratorFamily(evaluator=rotation.evaluator, dimension=2)
        assert custom.growth_bound == pytest.approx(-1.0, abs=1e-12)
        assert custom.derivative_bound == pytest.approx(2.0, rel=1e-5)

    def test_contraction(self):
        """Contraction needs M_B = 1 and m_B ≤ 0."""
        assert GeneratorFamily.constant([[-1.0]]).contraction
        assert not GeneratorFamily.constant([[-1.0]], growth_constant=2.0).contraction
        assert not GeneratorFamily.constant([[0.5]]).contraction

    def test_invalid_families(self):
        """Shape, finiteness and growth constant are checked."""
        with pytest.raises(ValidationError, match="dimension"):
            GeneratorFamily(evaluator=lambda x: np.eye(1), dimension=0)
        with pytest.raises(ValidationError, match="growth constant"):
            GeneratorFamily(evaluator=lambda x: np.eye(1), dimension=1, growth_constant=0.5)
        with pytest.raises(ValidationError, match="shape"):
            GeneratorFamily(evaluator=lambda x: np.eye(2), dimension=3)
        with pytest.raises(ValidationError, match="non-finite"):
            GeneratorFamily(evaluator=lambda x: np.array([[np.nan]]), dimension=1)
        with pytest.raises(ValidationError, match="square"):
            GeneratorFamily.constant([[1.0, 2.0]])

    def test_shifted(self):
        """Shifting by λ subtracts λI and lowers m_B by λ."""
        base = GeneratorFamily.rotation_decay(omega=1.0, rates=(1.0, 2.0))
        shifted = base.shifted(0.5)
        assert shifted.growth_bound == pytest.approx(-1.5)
        assert shifted.derivative_bound == base.derivative_bound
        np.testing.assert_allclose(shifted.matrix(0.3), base.matrix(0.3) - 0.5 * np.eye(2))
        xs = np.array([0.0, 0.7])
        np.testing.assert_allclose(shifted.matrices(xs), base.matrices(xs) - 0.5 * np.eye(2))
        assert shifted.params['shift'] == 0.5


class TestBuiltinFamilies:
    """Named families and piecewise tables."""

    def test_rotation_is_symmetric_and_noncommuting(self):
        """R(ωx)ᵀ diag(-r) R(ωx) keeps its spectrum but not its eigenvectors."""
        family = GeneratorFamily.from_builtin('rotation_decay', omega=2.0, rates=(1.0, 2.0))
        a0, a1 = family.matrix(0.0), family.matrix(1.0)
        np.testing.assert_allclose(a1, a1.T)
        np.testing.assert_allclose(np.linalg.eigvalsh(a1), [-2.0, -1.0])
        assert not np.allclose(a0 @ a1, a1 @ a0)
        assert not family.commuting

    def test_switch(self):
        """The switch jumps at the threshold and has no finite derivative bound."""
        family = GeneratorFamily.switch(threshold=0.5)
        np.testing.assert_array_equal(family.matrix(0.5), np.array(SWITCH_SECOND))
        np.testing.assert_array_equal(family.matrix(0.6), np.array(SWITCH_FIRST))
        assert math.isinf(family.derivative_bound)
        assert not family.commuting
        record = family.to_dict()
        assert record['derivative_bound'] is None
        json.dumps(record)

    def test_table(self, temp_dir):
        """Rows apply on [x_lo, x_hi) and the end rows extend outward."""
        path = temp_dir / 'generators.csv'
        _table().to_csv(path, index=False)
        family = GeneratorFamily.from_builtin('piecewise_table', path=str(path))
        values = family.matrices(np.array([-1.0, 0.25, 0.5, 0.75, 2.0]))[:, 0, 0]
        np.testing.assert_array_equal(values, [-1.0, -1.0, -3.0, -3.0, -3.0])
        assert family.growth_bound == pytest.approx(-1.0)
        assert family.commuting
        assert family.to_dict()['derivative_bound'] is None

    def test_table_validation(self):
        """Overlapping rows and non-square column sets are rejected."""
        overlapping = _table().assign(x_lo=[0.0, 0.4])
        with pytest.raises(ValidationError, match="disjoint"):
            GeneratorFamily.from_table(overlapping)
        rectangular = _table().assign(a12=[0.0, 0.0])
        with pytest.raises(ValidationError, match="perfect square"):
            GeneratorFamily.from_table(rectangular)
        with pytest.raises(ValidationError, match="x_lo and x_hi"):
            GeneratorFamily.from_table(_table().drop(columns='x_hi'))

    def test_unknown_and_invalid(self):
        """Unknown names and out-of-range parameters are invalid input."""
        with pytest.raises(ValidationError, match="unknown generator family"):
            GeneratorFamily.from_builtin('spiral')
        with pytest.raises(ValidationError, match="amplitude"):
            GeneratorFamily.diagonal([1.0], amplitude=1.0)
        with pytest.raises(ValidationError, match="nonnegative"):
            GeneratorFamily.rotation_decay(rates=(-1.0, 1.0))
