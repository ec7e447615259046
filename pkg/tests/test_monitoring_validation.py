"""
    --- AUTO-GENERATED DOCSTRING ---
    Table of content is automatically generated by Agent Docstrings v1.3.5

    Classes/Functions:
        - TestRunMonitor (line 34):
        - TestSolutionIntegrity (line 71):
        - TestHealthChecker (line 124):
        - TestPlotting (line 145):
    --- END AUTO-GENERATED DOCSTRING ---

Tests for run monitoring, solution integrity checks, the self-check and plots.
"""
import json

import numpy as np
import pytest

from genfrac.errors import ValidationError
from genfrac.monitoring import RunMonitor
from genfrac.plotting import plot_solution_curve
from genfrac.solvers.solution import SolutionCurve
from genfrac.validation.health_checker import HealthChecker
from genfrac.validation.integrity import SolutionIntegrityChecker


def _curve(values=None, flags=None, metadata=None):
    grid = np.linspace(0.0, 1.0, 5)
    values = np.linspace(1.0, 0.5, 5) if values is None else values
    return SolutionCurve(grid, values, np.zeros(5), metadata=metadata or {'a': 0.0, 'Y': [1.0]},
                         flags=flags or [])


class TestRunMonitor:
    """Timing, errors and thresholds."""

    def test_track_success(self):
        """Completed blocks count as successes with their sample totals."""
        monitor = RunMonitor()
        with monitor.track('ml', n_samples=100):
            pass
        metrics = monitor.get_metrics()
        assert metrics['success_count'] == 1
        assert metrics['operations']['ml']['samples'] == 100
        assert metrics['error_rate'] == 0.0
        assert monitor.check_health()['status'] == 'healthy'

    def test_track_error(self):
        """Errors are recorded, re-raised and listed in the metrics."""
        monitor = RunMonitor()
        with pytest.raises(ValidationError):
            with monitor.track('verify'):
                raise ValidationError("bad input")
        assert monitor.error_count == 1
        assert monitor.get_metrics()['recent_errors'][0]['operation'] == 'verify'
        # one failure out of one call exceeds the error-rate threshold
        assert monitor.check_health()['status'] == 'unhealthy'

    def test_write_metrics(self, temp_dir):
        """The metrics file is sorted JSON."""
        monitor = RunMonitor()
        with monitor.track('simulate', n_samples=10):
            pass
        path = monitor.write_metrics(temp_dir / 'metrics.json')
        data = json.loads(path.read_text(encoding='utf-8'))
        assert data['total_operations'] == 1
        assert data['operations']['simulate']['samples'] == 10
        assert data['recent_errors'] == []


class TestSolutionIntegrity:
    """Structural checks on curves and manifests."""

    def test_valid_curve(self):
        """A well-formed curve passes."""
        is_valid, messages = SolutionIntegrityChecker().validate_solution_curve(_curve())
        assert is_valid
        assert messages == []

    def test_boundary_mismatch(self):
        """f(a) must equal Y exactly."""
        is_valid, messages = SolutionIntegrityChecker().validate_solution_curve(_curve(), boundary=[1.5])
        assert not is_valid
        assert any("differs from Y" in m for m in messages)

    def test_non_finite_values(self):
        """NaN values are errors."""
        values = np.array([1.0, np.nan, 0.5, 0.4, 0.3])
        is_valid, messages = SolutionIntegrityChecker().validate_solution_curve(_curve(values))
        assert not is_valid
        assert "Values contain NaN or infinity" in messages

    def test_grid_start(self):
        """The grid starts at the recorded a."""
        curve = _curve(metadata={'a': 0.5, 'Y': [1.0]})
        is_valid, _ = SolutionIntegrityChecker().validate_solution_curve(curve)
        assert not is_valid

    def test_flag_warnings(self):
        """Unknown flags and out-of-theorem results warn without failing."""
        curve = _curve(flags=['out_of_theorem', 'mystery'])
        is_valid, messages = SolutionIntegrityChecker().validate_solution_curve(curve)
        assert is_valid
        assert "Unknown result flag 'mystery'" in messages
        assert len(messages) == 2

    def test_manifest(self):
        """Manifests carry every field and sane values."""
        checker = SolutionIntegrityChecker()
        manifest = {'command': 'ml', 'measure': 'stable(beta=0.5,c=1.0)', 'params': {},
                    'n_samples': 100, 'eps': None, 'seed': 3, 'grid': None,
                    'outputs': ['result.json'], 'version': '0.1.0'}
        assert checker.validate_manifest(manifest) == (True, [])
        is_valid, messages = checker.validate_manifest({**manifest, 'eps': -1.0})
        assert not is_valid
        is_valid, messages = checker.validate_manifest({'command': 'ml'})
        assert not is_valid
        assert any("missing field" in m for m in messages)
        is_valid, messages = checker.validate_manifest({**manifest, 'seed': None})
        assert is_valid
        assert "not reproducible" in messages[0]


class TestHealthChecker:
    """Deterministic oracle checks."""

    def test_oracles_pass(self):
        """Every oracle component is healthy."""
        checker = HealthChecker()
        status = checker.run_health_checks()
        assert status['errors'] == []
        for name in ('measures', 'mittag_leffler', 'potentials', 'matrix_exp'):
            assert status['components'][name]['status'] == 'healthy'
        assert status['overall_status'] in ('healthy', 'warning')

    def test_run_metrics_included(self):
        """A monitor contributes run metrics."""
        monitor = RunMonitor()
        with monitor.track('ml'):
            pass
        status = HealthChecker(monitor=monitor).run_health_checks()
        assert status['run_metrics']['success_count'] == 1


class TestPlotting:
    """SVG output."""

    def test_solution_plot(self, temp_dir):
        """Two components with error bands are drawn to an SVG file."""
        grid = np.linspace(0.0, 1.0, 5)
        curve = SolutionCurve(grid, np.column_stack([grid, 1.0 - grid]), np.full((5, 2), 0.01))
        path = plot_solution_curve(curve, temp_dir / 'plot.svg', title='test')
        text = path.read_text(encoding='utf-8')
        assert '<svg' in text
