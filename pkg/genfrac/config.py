"""
    --- AUTO-GENERATED DOCSTRING ---
    Table of content is automatically generated by Agent Docstrings v1.3.5

    Classes/Functions:
        - GenFracConfig (line 38):
            - refresh(cls) (line 108)
            - get_config_dict(cls) -> Dict[str, Any] (line 114)
            - validate_config(cls) -> List[str] (line 139)
            - resolve_workers(cls, workers: Optional[int] = None) -> int (line 179)
        - build_logging_config(level: Optional[str] = None, log_file: Optional[str] = None) -> Dict[str, Any] (line 191)
        - setup_logging(level: Optional[str] = None, log_file: Optional[str] = None) (line 246)
        - export_config(file_path: str) (line 251)
    --- END AUTO-GENERATED DOCSTRING ---

Runtime configuration for genfrac.

Settings are read from the environment with the ``GENFRAC_`` prefix. A ``.env``
file in the working directory is loaded first, so the same keys can live in a
project-local file. Numerical tolerances, batch sizes and logging all come
from here; call :meth:`GenFracConfig.refresh` after changing the environment.
"""
import json
import logging
import logging.config
import os
from typing import Any, Dict, List, Optional

from dotenv import load_dotenv

load_dotenv()


def _env_bool(name: str, default: str) -> bool:
    return os.getenv(name, default).lower() in ('1', 'true', 'yes', 'on')


class GenFracConfig:
    """Configuration for simulation, quadrature and logging."""

    # Reproducibility
    SEED: Optional[int] = None

    # Quadrature
    QUAD_REL_TOL = 1e-10
    QUAD_ABS_TOL = 1e-13
    QUAD_LIMIT = 200
    LEVY_INTEGRAL_BOUND = 1e12

    # Truncation and grids
    DRIFT_TOLERANCE = 1e-3
    GRID_POINTS_PER_UNIT = 512
    USE_EXACT_STABLE = True

    # Monte Carlo execution
    BATCH_SIZE = 2000
    WORKERS = 0
    PROGRESS = False

    # Series and guards
    SERIES_CAP = 200
    SERIES_TOL = 1e-10
    TAIL_TOLERANCE = 1e-8
    MAX_ATOM_TUPLES = 100000
    EXPM_CACHE_QUANTUM = 0.0

    # Residual certification
    RESIDUAL_SKIP_FRACTION = 0.1

    # Logging
    LOG_LEVEL = 'INFO'
    LOG_FILE: Optional[str] = None

    @classmethod
    def _read_env(cls):
        seed = os.getenv('GENFRAC_SEED')
        cls.SEED = int(seed) if seed not in (None, '') else None

        cls.QUAD_REL_TOL = float(os.getenv('GENFRAC_QUAD_REL_TOL', '1e-10'))
        cls.QUAD_ABS_TOL = float(os.getenv('GENFRAC_QUAD_ABS_TOL', '1e-13'))
        cls.QUAD_LIMIT = int(os.getenv('GENFRAC_QUAD_LIMIT', '200'))
        cls.LEVY_INTEGRAL_BOUND = float(
            os.getenv('GENFRAC_LEVY_INTEGRAL_BOUND', '1e12'))

        cls.DRIFT_TOLERANCE = float(os.getenv('GENFRAC_DRIFT_TOLERANCE', '1e-3'))
        cls.GRID_POINTS_PER_UNIT = int(
            os.getenv('GENFRAC_GRID_POINTS_PER_UNIT', '512'))
        cls.USE_EXACT_STABLE = _env_bool('GENFRAC_USE_EXACT_STABLE', 'true')

        cls.BATCH_SIZE = int(os.getenv('GENFRAC_BATCH_SIZE', '2000'))
        cls.WORKERS = int(os.getenv('GENFRAC_WORKERS', '0'))
        cls.PROGRESS = _env_bool('GENFRAC_PROGRESS', 'false')

        cls.SERIES_CAP = int(os.getenv('GENFRAC_SERIES_CAP', '200'))
        cls.SERIES_TOL = float(os.getenv('GENFRAC_SERIES_TOL', '1e-10'))
        cls.TAIL_TOLERANCE = float(os.getenv('GENFRAC_TAIL_TOLERANCE', '1e-8'))
        cls.MAX_ATOM_TUPLES = int(os.getenv('GENFRAC_MAX_ATOM_TUPLES', '100000'))
        cls.EXPM_CACHE_QUANTUM = float(
            os.getenv('GENFRAC_EXPM_CACHE_QUANTUM', '0'))

        cls.RESIDUAL_SKIP_FRACTION = float(
            os.getenv('GENFRAC_RESIDUAL_SKIP_FRACTION', '0.1'))

        cls.LOG_LEVEL = os.getenv('GENFRAC_LOG_LEVEL', 'INFO').upper()
        cls.LOG_FILE = os.getenv('GENFRAC_LOG_FILE') or None

    @classmethod
    def refresh(cls):
        """Re-read all settings from the environment."""
        cls._read_env()
        return cls

    @classmethod
    def get_config_dict(cls) -> Dict[str, Any]:
        """Get configuration as dictionary."""
        return {
            'seed': cls.SEED,
            'quad_rel_tol': cls.QUAD_REL_TOL,
            'quad_abs_tol': cls.QUAD_ABS_TOL,
            'quad_limit': cls.QUAD_LIMIT,
            'levy_integral_bound': cls.LEVY_INTEGRAL_BOUND,
            'drift_tolerance': cls.DRIFT_TOLERANCE,
            'grid_points_per_unit': cls.GRID_POINTS_PER_UNIT,
            'use_exact_stable': cls.USE_EXACT_STABLE,
            'batch_size': cls.BATCH_SIZE,
            'workers': cls.WORKERS,
            'progress': cls.PROGRESS,
            'series_cap': cls.SERIES_CAP,
            'series_tol': cls.SERIES_TOL,
            'tail_tolerance': cls.TAIL_TOLERANCE,
            'max_atom_tuples': cls.MAX_ATOM_TUPLES,
            'expm_cache_quantum': cls.EXPM_CACHE_QUANTUM,
            'residual_skip_fraction': cls.RESIDUAL_SKIP_FRACTION,
            'log_level': cls.LOG_LEVEL,
            'log_file': cls.LOG_FILE,
        }

    @classmethod
    def validate_config(cls) -> List[str]:
        """Validate configuration and return any errors."""
        errors = []

        if not 0 < cls.QUAD_REL_TOL < 1:
            errors.append("QUAD_REL_TOL must be between 0 and 1")

        if cls.QUAD_ABS_TOL < 0:
            errors.append("QUAD_ABS_TOL must be nonnegative")

        if cls.QUAD_LIMIT <= 0:
            errors.append("QUAD_LIMIT must be positive")

        if cls.DRIFT_TOLERANCE <= 0:
            errors.append("DRIFT_TOLERANCE must be positive")

        if cls.GRID_POINTS_PER_UNIT < 2:
            errors.append("GRID_POINTS_PER_UNIT must be at least 2")

        if cls.BATCH_SIZE <= 0:
            errors.append("BATCH_SIZE must be positive")

        if cls.WORKERS < 0:
            errors.append("WORKERS must be nonnegative")

        if cls.SERIES_CAP <= 0:
            errors.append("SERIES_CAP must be positive")

        if cls.EXPM_CACHE_QUANTUM < 0:
            errors.append("EXPM_CACHE_QUANTUM must be nonnegative")

        if not 0 <= cls.RESIDUAL_SKIP_FRACTION < 1:
            errors.append("RESIDUAL_SKIP_FRACTION must be in [0, 1)")

        if cls.LOG_LEVEL not in ('DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL'):
            errors.append(f"LOG_LEVEL must be a logging level name, got {cls.LOG_LEVEL}")

        return errors

    @classmethod
    def resolve_workers(cls, workers: Optional[int] = None) -> int:
        """Number of worker threads; 0 or None means hardware parallelism."""
        if workers is None:
            workers = cls.WORKERS
        if workers <= 0:
            workers = os.cpu_count() or 1
        return workers


GenFracConfig._read_env()


def build_logging_config(level: Optional[str] = None,
                         log_file: Optional[str] = None) -> Dict[str, Any]:
    """
    Build a ``logging.config.dictConfig`` mapping.

    Args:
        level: Log level name, defaults to ``GENFRAC_LOG_LEVEL``
        log_file: Optional path for a rotating file handler

    Returns:
        Logging configuration dictionary
    """
    level = (level or GenFracConfig.LOG_LEVEL).upper()
    log_file = log_file or GenFracConfig.LOG_FILE

    handlers: Dict[str, Any] = {
        'console': {
            'class': 'logging.StreamHandler',
            'level': level,
            'formatter': 'standard',
            'stream': 'ext://sys.stderr',
        }
    }
    if log_file:
        handlers['file'] = {
            'class': 'logging.handlers.RotatingFileHandler',
            'level': 'DEBUG',
            'formatter': 'detailed',
            'filename': log_file,
            'maxBytes': 10485760,
            'backupCount': 3,
        }

    return {
        'version': 1,
        'disable_existing_loggers': False,
        'formatters': {
            'standard': {
                'format': '%(asctime)s [%(levelname)s] %(name)s: %(message)s'
            },
            'detailed': {
                'format': '%(asctime)s [%(levelname)s] %(name)s:%(lineno)d: %(message)s'
            },
        },
        'handlers': handlers,
        'loggers': {
            'genfrac': {
                'handlers': list(handlers),
                'level': level,
                'propagate': False,
            }
        },
    }


def setup_logging(level: Optional[str] = None, log_file: Optional[str] = None):
    """Apply the genfrac logging configuration."""
    logging.config.dictConfig(build_logging_config(level, log_file))


def export_config(file_path: str):
    """Export the current configuration to a JSON file."""
    with open(file_path, 'w', encoding='utf-8') as f:
        json.dump(GenFracConfig.get_config_dict(), f, indent=2, sort_keys=True)
    logging.getLogger(__name__).info(f"Configuration exported to {file_path}")


genfrac_config = GenFracConfig()
