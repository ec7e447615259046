"""
    --- AUTO-GENERATED DOCSTRING ---
    Table of content is automatically generated by Agent Docstrings v1.3.5

    Classes/Functions:
        - stable_half() (line 47)
        - poisson_unit() (line 54)
        - two_atoms() (line 61)
        - seed() (line 68)
        - temp_dir() (line 74)
        - rotation_family() (line 81)
        - decay_family() (line 88)
        - linear_function() (line 95)
        - clean_config() (line 103)
        - genfrac_log_propagation() (line 116)
        - pytest_configure(config) (line 127)
        - pytest_collection_modifyitems(config, items) (line 154)
        - ReferenceValues (line 172):
            - ml_series(beta: float, s: float, terms: int = 400) -> float (line 181)
            - assert_within(value: float, expected: float, std_error: float, floor: float = 1e-3) (line 191)
    --- END AUTO-GENERATED DOCSTRING ---

genfrac Test Configuration and Fixtures

Shared fixtures, markers and reference values for the genfrac test suite.
Monte Carlo tests use fixed seeds and small sample counts; statistical
assertions allow several standard errors plus a small floor.
"""
import logging
import math
import os
import sys
import tempfile
from pathlib import Path

import numpy as np
import pytest

# Add project root to Python path
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

# Test data and fixtures


@pytest.fixture
def stable_half():
    """Stable measure of order 1/2 with unit scale."""
    from genfrac.measures import StableFractional
    return StableFractional(0.5, 1.0)


@pytest.fixture
def poisson_unit():
    """Single atom of mass 1 at y = 1 (unit Poisson subordinator)."""
    from genfrac.measures import FiniteDiscrete
    return FiniteDiscrete(((1.0, 1.0),))


@pytest.fixture
def two_atoms():
    """Two atoms with total mass 1.5 and mean jump rate 1."""
    from genfrac.measures import FiniteDiscrete
    return FiniteDiscrete(((0.5, 1.0), (1.0, 0.5)))


@pytest.fixture
def seed():
    """Master seed for Monte Carlo tests."""
    return 20240611


@pytest.fixture
def temp_dir():
    """Temporary directory for test files."""
    with tempfile.TemporaryDirectory() as tmpdir:
        yield Path(tmpdir)


@pytest.fixture
def rotation_family():
    """Non-commuting symmetric family with m_B = -1."""
    from genfrac.solvers import GeneratorFamily
    return GeneratorFamily.rotation_decay(omega=2.0, rates=(1.0, 2.0))


@pytest.fixture
def decay_family():
    """Scalar family A(x) = [[-1]]."""
    from genfrac.solvers import GeneratorFamily
    return GeneratorFamily.constant([[-1.0]])


@pytest.fixture
def linear_function():
    """f(x) = x sampled on [0, 1] with 64 intervals."""
    from genfrac.gen_derivative import GriddedFunction
    grid = np.linspace(0.0, 1.0, 65)
    return GriddedFunction(grid, grid.copy())


@pytest.fixture
def clean_config(monkeypatch):
    """Strip GENFRAC_ variables from the environment and restore defaults afterwards."""
    from genfrac.config import GenFracConfig
    for name in list(os.environ):
        if name.startswith('GENFRAC_'):
            monkeypatch.delenv(name, raising=False)
    GenFracConfig.refresh()
    yield GenFracConfig
    monkeypatch.undo()
    GenFracConfig.refresh()


@pytest.fixture(autouse=True)
def genfrac_log_propagation():
    """Let caplog see package records after the CLI installed its own handlers."""
    package_logger = logging.getLogger('genfrac')
    previous = package_logger.propagate
    package_logger.propagate = True
    yield
    package_logger.propagate = previous

# Test markers


def pytest_configure(config):
    """Configure pytest with custom markers."""
    config.addinivalue_line(
        "markers", "unit: Unit tests for individual components"
    )
    config.addinivalue_line(
        "markers", "integration: Tests that run a solver or command end to end"
    )
    config.addinivalue_line(
        "markers", "statistical: Monte Carlo tests compared within standard errors"
    )
    config.addinivalue_line(
        "markers", "error_handling: Tests for error handling and edge cases"
    )
    config.addinivalue_line(
        "markers", "configuration: Tests for configuration and settings"
    )
    config.addinivalue_line(
        "markers", "cli: Tests of the command-line front end"
    )
    config.addinivalue_line(
        "markers", "slow: Tests that take a long time to run"
    )

# Test collection hooks


def pytest_collection_modifyitems(config, items):
    """Modify test collection to add markers based on test names."""
    for item in items:
        if "test_cli" in item.nodeid:
            item.add_marker(pytest.mark.cli)
            item.add_marker(pytest.mark.integration)
        if "Statistical" in item.nodeid or "monte_carlo" in item.nodeid:
            item.add_marker(pytest.mark.statistical)
        if "error" in item.nodeid or "invalid" in item.nodeid:
            item.add_marker(pytest.mark.error_handling)
        if "config" in item.nodeid:
            item.add_marker(pytest.mark.configuration)
        if not any(m.name in ('integration', 'statistical') for m in item.iter_markers()):
            item.add_marker(pytest.mark.unit)

# Reference values


class ReferenceValues:
    """Closed-form values shared by several test modules."""

    # E_{1/2}(-1) = e·erfc(1)
    ML_HALF_MINUS_ONE = 0.42758357615580705
    # U([0, 1]) for the stable measure of order 1/2
    STABLE_HALF_POTENTIAL_ONE = 2.0 / math.sqrt(math.pi)

    @staticmethod
    def ml_series(beta: float, s: float, terms: int = 400) -> float:
        """Direct power series of E_β(s), accurate for moderate |s|."""
        total = 0.0
        for k in range(terms):
            log_term = k * math.log(abs(s)) - math.lgamma(1.0 + beta * k) if s != 0 else (
                0.0 if k == 0 else -math.inf)
            total += math.copysign(1.0, s) ** k * math.exp(log_term)
        return total

    @staticmethod
    def assert_within(value: float, expected: float, std_error: float, floor: float = 1e-3):
        """Assert |value - expected| ≤ 5σ + floor."""
        gap = abs(float(value) - float(expected))
        allowed = 5.0 * float(std_error) + floor
        assert gap <= allowed, f"{value} differs from {expected} by {gap:.3g} > {allowed:.3g}"
