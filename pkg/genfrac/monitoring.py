"""
    --- AUTO-GENERATED DOCSTRING ---
    Table of content is automatically generated by Agent Docstrings v1.3.5

    Classes/Functions:
        - RunMonitor (line 34):
            - track(operation: str, n_samples: Optional[int] = None) (line 62)
            - record_success(operation: str, wall_time: float, n_samples: Optional[int] = None) (line 81)
            - record_error(operation: str, error_message: str) (line 96)
            - record_memory_usage() (line 106)
            - get_metrics() -> Dict[str, Any] (line 114)
            - check_health() -> Dict[str, Any] (line 145)
            - write_metrics(path: Union[str, Path]) -> Path (line 170)
    --- END AUTO-GENERATED DOCSTRING ---

Run monitoring for estimator and solver calls.

Tracks wall time and sample throughput per operation, failures, and the
resident memory of the process. Metrics are written next to outputs on
request and never enter experiment manifests.
"""
import json
import logging
import time
from collections import defaultdict, deque
from contextlib import contextmanager
from datetime import datetime
from pathlib import Path
from typing import Any, Dict, Optional, Union

import psutil


class RunMonitor:
    """Per-operation timing, error history and memory samples."""

    def __init__(self, max_history: int = 1000):
        """
        Initialize the monitor.

        Args:
            max_history: Maximum number of entries kept per history
        """
        self.max_history = max_history
        self.logger = logging.getLogger(__name__)

        self.success_count = 0
        self.error_count = 0
        self.wall_times: Dict[str, deque] = defaultdict(lambda: deque(maxlen=max_history))
        self.samples: Dict[str, int] = defaultdict(int)
        self.error_history: deque = deque(maxlen=max_history)
        self.memory_usage: deque = deque(maxlen=max_history)

        self.thresholds = {
            'max_wall_time': 600.0,    # seconds per operation
            'max_error_rate': 0.1,
            'max_memory_mb': 4096.0,
        }
        self.start_time = time.time()

    @contextmanager
    def track(self, operation: str, n_samples: Optional[int] = None):
        """
        Time a block and record success or the raised error.

        Args:
            operation: Operation name
            n_samples: Paths used, for throughput
        """
        start = time.perf_counter()
        try:
            yield self
        except Exception as e:
            self.record_error(operation, f"{type(e).__name__}: {e}")
            raise
        else:
            self.record_success(operation, time.perf_counter() - start, n_samples)
        finally:
            self.record_memory_usage()

    def record_success(self, operation: str, wall_time: float, n_samples: Optional[int] = None):
        """
        Record a completed operation.

        Args:
            operation: Operation name
            wall_time: Elapsed seconds
            n_samples: Paths used
        """
        self.success_count += 1
        self.wall_times[operation].append(wall_time)
        if n_samples:
            self.samples[operation] += int(n_samples)
        self.logger.debug(f"Operation '{operation}' completed in {wall_time:.3f}s")

    def record_error(self, operation: str, error_message: str):
        """Record a failed operation."""
        self.error_count += 1
        self.error_history.append({
            'operation': operation,
            'error': error_message,
            'timestamp': datetime.now().isoformat(),
        })
        self.logger.error(f"Operation '{operation}' failed: {error_message}")

    def record_memory_usage(self):
        """Sample the resident set size of this process."""
        try:
            rss = psutil.Process().memory_info().rss / 2 ** 20
            self.memory_usage.append({'timestamp': datetime.now().isoformat(), 'rss_mb': rss})
        except psutil.Error as e:
            self.logger.warning(f"Failed to record memory usage: {e}")

    def get_metrics(self) -> Dict[str, Any]:
        """
        Current metrics.

        Returns:
            Counts, error rate, per-operation timing and memory peak
        """
        total = self.success_count + self.error_count
        operations = {}
        for name, times in self.wall_times.items():
            elapsed = sum(times)
            operations[name] = {
                'calls': len(times),
                'total_seconds': elapsed,
                'max_seconds': max(times),
                'samples': self.samples.get(name, 0),
                'samples_per_second': self.samples.get(name, 0) / elapsed if elapsed > 0 else 0.0,
            }
        peak = max((entry['rss_mb'] for entry in self.memory_usage), default=0.0)
        return {
            'success_count': self.success_count,
            'error_count': self.error_count,
            'total_operations': total,
            'error_rate': self.error_count / total if total else 0.0,
            'operations': operations,
            'peak_rss_mb': peak,
            'uptime_seconds': time.time() - self.start_time,
            'thresholds': self.thresholds.copy(),
            'recent_errors': list(self.error_history)[-10:],
        }

    def check_health(self) -> Dict[str, Any]:
        """Compare metrics with the thresholds; status is healthy, degraded or unhealthy."""
        metrics = self.get_metrics()
        issues = []
        for name, stats in metrics['operations'].items():
            if stats['max_seconds'] > self.thresholds['max_wall_time']:
                issues.append(f"Slow operation '{name}': {stats['max_seconds']:.1f}s")
        if metrics['error_rate'] > self.thresholds['max_error_rate']:
            issues.append(f"High error rate: {metrics['error_rate']:.2%}")
        if metrics['peak_rss_mb'] > self.thresholds['max_memory_mb']:
            issues.append(f"High memory usage: {metrics['peak_rss_mb']:.0f} MB")

        if issues:
            status = 'unhealthy'
        elif self.error_count:
            status = 'degraded'
        else:
            status = 'healthy'
        return {
            'status': status,
            'timestamp': datetime.now().isoformat(),
            'metrics': metrics,
            'health_issues': issues,
        }

    def write_metrics(self, path: Union[str, Path]) -> Path:
        """Write the metrics as JSON to ``path``."""
        path = Path(path)
        path.write_text(json.dumps(self.get_metrics(), indent=2, sort_keys=True), encoding='utf-8')
        self.logger.info(f"Metrics written to {path}")
        return path
