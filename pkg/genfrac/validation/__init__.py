"""
Validation and self-check utilities for genfrac.

Integrity checks on solution curves and manifests, and a health checker that
runs deterministic numerical oracles.
"""
from .health_checker import HealthChecker
from .integrity import MANIFEST_FIELDS, SolutionIntegrityChecker

__all__ = [
    'HealthChecker',
    'SolutionIntegrityChecker',
    'MANIFEST_FIELDS',
]
