"""
Numerical kernels shared by the estimators and solvers.

Quadrature wrappers, matrix exponentials, Laplace inversion and the
reproducible batch runner for Monte Carlo.
"""
from .laplace_inversion import talbot
from .matrix_exp import (
    MatrixGenerator,
    QuantizedExpmCache,
    exp_and_integral,
    exp_scaled,
    expm,
    log_norm,
    ordered_simplex_integral,
)
from .quadrature import gauss_laguerre, quad, quad_power_singular
from .sampling import BatchRunner, MonteCarloEstimate, SeedLike, as_seed_sequence, seed_value

__all__ = [
    'quad',
    'quad_power_singular',
    'gauss_laguerre',
    'talbot',
    'MatrixGenerator',
    'QuantizedExpmCache',
    'expm',
    'exp_scaled',
    'exp_and_integral',
    'log_norm',
    'ordered_simplex_integral',
    'BatchRunner',
    'MonteCarloEstimate',
    'SeedLike',
    'as_seed_sequence',
    'seed_value',
]

__version__ = "0.1.0"
