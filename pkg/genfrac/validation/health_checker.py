"""
    --- AUTO-GENERATED DOCSTRING ---
    Table of content is automatically generated by Agent Docstrings v1.3.5

    Classes/Functions:
        - HealthChecker (line 48):
            - run_health_checks() -> Dict[str, Any] (line 62)
            - _run_oracles(name: str, checks: List[Tuple[str, Callable[[], float], float, float]], health_status: Dict[str, Any]) (line 92)
            - _check_measures(health_status: Dict[str, Any]) (line 121)
            - _check_mittag_leffler(health_status: Dict[str, Any]) (line 132)
            - _check_potentials(health_status: Dict[str, Any]) (line 140)
            - _check_matrix_exponentials(health_status: Dict[str, Any]) (line 154)
            - _check_system_resources(health_status: Dict[str, Any]) (line 164)
            - _check_run_metrics(health_status: Dict[str, Any]) (line 186)
            - _determine_overall_status(health_status: Dict[str, Any]) -> str (line 199)
    --- END AUTO-GENERATED DOCSTRING ---

Self-check of the numerical stack.

Runs fast deterministic oracles with known closed-form values (Laplace
exponents, classical Mittag-Leffler identities, the stable potential and the
Van Loan block exponential) and reports host resources. No random numbers are
drawn, so two runs on the same installation give the same component results.
"""
import logging
import math
import time
from datetime import datetime
from typing import Any, Callable, Dict, List, Optional, Tuple

import numpy as np
import psutil
from scipy import special

from genfrac.errors import GenFracError
from genfrac.measures.levy_measure import FiniteDiscrete, StableFractional, TemperedStable
from genfrac.mittag_leffler import classical_ml
from genfrac.monitoring import RunMonitor
from genfrac.numerics.matrix_exp import exp_and_integral
from genfrac.potential import potential_mass

logger = logging.getLogger(__name__)

# (label, computation, expected, absolute tolerance)
Oracle = Tuple[str, Callable[[], float], float, float]


class HealthChecker:
    """Deterministic oracle checks plus host resource checks."""

    def __init__(self, monitor: Optional[RunMonitor] = None):
        """
        Initialize the health checker.

        Args:
            monitor: Run monitor whose metrics are included in the report
        """
        self.logger = logging.getLogger(__name__)
        self.monitor = monitor
        self.last_check_time: Optional[datetime] = None

    def run_health_checks(self) -> Dict[str, Any]:
        """
        Run every check.

        Returns:
            Health status dictionary with overall_status, components,
            system_resources, run_metrics, errors and warnings
        """
        self.last_check_time = datetime.now()
        health_status: Dict[str, Any] = {
            'timestamp': self.last_check_time.isoformat(),
            'overall_status': 'healthy',
            'components': {},
            'system_resources': {},
            'run_metrics': {},
            'errors': [],
            'warnings': [],
        }

        self._check_measures(health_status)
        self._check_mittag_leffler(health_status)
        self._check_potentials(health_status)
        self._check_matrix_exponentials(health_status)
        self._check_system_resources(health_status)
        self._check_run_metrics(health_status)

        health_status['overall_status'] = self._determine_overall_status(health_status)
        self.logger.info(f"Health check finished: {health_status['overall_status']}")
        return health_status

    def _run_oracles(self, name: str, checks: List[Oracle], health_status: Dict[str, Any]):
        start = time.perf_counter()
        results = []
        failures = []
        for label, compute, expected, tolerance in checks:
            try:
                value = float(compute())
            except GenFracError as e:
                failures.append(f"{label}: {type(e).__name__}: {e}")
                results.append({'check': label, 'expected': expected, 'value': None})
                continue
            deviation = abs(value - expected)
            results.append({'check': label, 'expected': expected, 'value': value,
                            'deviation': deviation})
            if not deviation <= tolerance:
                failures.append(f"{label}: got {value!r}, expected {expected!r} (tol {tolerance:g})")

        status = {
            'status': 'unhealthy' if failures else 'healthy',
            'checks': results,
            'elapsed_seconds': time.perf_counter() - start,
        }
        if failures:
            status['failures'] = failures
            for failure in failures:
                health_status['errors'].append(f"{name}: {failure}")
                self.logger.error(f"Health oracle failed in {name}: {failure}")
        health_status['components'][name] = status

    def _check_measures(self, health_status: Dict[str, Any]):
        stable = StableFractional(0.5, 1.0)
        poisson = FiniteDiscrete(((1.0, 1.0),))
        tempered = TemperedStable(0.5, 1.0, 1.0)
        self._run_oracles('measures', [
            ('stable laplace exponent at 4', lambda: stable.laplace_exponent(4.0), 2.0, 1e-12),
            ('poisson laplace exponent at 1', lambda: poisson.laplace_exponent(1.0),
             1.0 - math.exp(-1.0), 1e-12),
            ('tempered laplace exponent at 0', lambda: tempered.laplace_exponent(0.0), 0.0, 1e-12),
        ], health_status)

    def _check_mittag_leffler(self, health_status: Dict[str, Any]):
        self._run_oracles('mittag_leffler', [
            ('E_1(-1) = exp(-1)', lambda: classical_ml(1.0, -1.0), math.exp(-1.0), 1e-12),
            ('E_1/2(-1) = e erfc(1)', lambda: classical_ml(0.5, -1.0),
             math.e * special.erfc(1.0), 1e-8),
            ('E_1/2(0) = 1', lambda: classical_ml(0.5, 0.0), 1.0, 0.0),
        ], health_status)

    def _check_potentials(self, health_status: Dict[str, Any]):
        stable = StableFractional(0.5, 1.0)
        expected = 2.0 / math.sqrt(math.pi)
        self._run_oracles('potentials', [
            ('stable U([0,1]) closed form',
             lambda: potential_mass(stable, 0.0, 1.0, method='closed_form').value, expected, 1e-12),
            ('stable U([0,1]) Laplace inversion',
             lambda: potential_mass(stable, 0.0, 1.0, method='laplace_inversion').value,
             expected, 1e-6),
            ('poisson U([0,2.5]) series',
             lambda: potential_mass(FiniteDiscrete(((1.0, 1.0),)), 0.0, 2.5, method='series').value,
             3.0, 1e-9),
        ], health_status)

    def _check_matrix_exponentials(self, health_status: Dict[str, Any]):
        def block_integral() -> float:
            expo, integral = exp_and_integral(np.array([[[-1.0]]]), np.array([1.0]))
            return float(expo[0, 0, 0] + integral[0, 0, 0])

        # e^{-1} + (1 - e^{-1}) = 1
        self._run_oracles('matrix_exp', [
            ('exp and integral of -1 over [0,1]', block_integral, 1.0, 1e-12),
        ], health_status)

    def _check_system_resources(self, health_status: Dict[str, Any]):
        """Check host resource usage."""
        try:
            cpu_usage = psutil.cpu_percent(interval=None)
            memory = psutil.virtual_memory()
            disk = psutil.disk_usage('.')
            health_status['system_resources'] = {
                'cpu_count': psutil.cpu_count(),
                'cpu_usage_percent': cpu_usage,
                'memory_usage_percent': memory.percent,
                'memory_available_gb': memory.available / 1024 ** 3,
                'disk_usage_percent': disk.percent,
                'disk_free_gb': disk.free / 1024 ** 3,
            }
            if memory.percent > 90:
                health_status['warnings'].append(f"High memory usage: {memory.percent:.1f}%")
            if disk.percent > 95:
                health_status['warnings'].append(f"High disk usage: {disk.percent:.1f}%")
        except (psutil.Error, OSError) as e:
            health_status['system_resources'] = {'status': 'error', 'error': str(e)}
            health_status['warnings'].append(f"System resource check failed: {e}")

    def _check_run_metrics(self, health_status: Dict[str, Any]):
        if self.monitor is None:
            return
        monitor_health = self.monitor.check_health()
        metrics = monitor_health['metrics']
        health_status['run_metrics'] = {
            'success_count': metrics['success_count'],
            'error_count': metrics['error_count'],
            'error_rate': metrics['error_rate'],
            'peak_rss_mb': metrics['peak_rss_mb'],
        }
        health_status['warnings'].extend(monitor_health['health_issues'])

    def _determine_overall_status(self, health_status: Dict[str, Any]) -> str:
        if health_status['errors']:
            return 'unhealthy'
        statuses = [c.get('status') for c in health_status['components'].values()]
        if 'unhealthy' in statuses:
            return 'unhealthy'
        if health_status['warnings']:
            return 'warning'
        return 'healthy'
