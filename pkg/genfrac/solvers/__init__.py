"""
Solvers for generalized fractional evolution equations.

Constant generators (homogeneous), x-dependent generator families
(timedep) and spatially homogeneous pseudo-differential generators (psido),
all returning estimates with Monte Carlo standard errors.
"""
from .generators import BUILTIN_FAMILIES, GeneratorFamily, as_vector_function
from .homogeneous import passage_time_ensemble, solve_const, solve_scalar_relaxation
from .psido import BUILTIN_SYMBOLS, PsidoSolution, SymbolFamily, green_along_path, parseval_check, solve_psido
from .solution import SolutionCurve
from .timedep import (
    ChronExpAccumulator,
    EpsilonStudy,
    SeriesResult,
    chron_exp,
    epsilon_convergence_study,
    finite_measure_right_limit,
    killed_path_estimate,
    perturbation_series,
    resolvent,
    resolvent_admissibility,
    resolvent_curve,
    semigroup_apply,
    semigroup_growth_bound,
    solve_boundary,
)

__all__ = [
    'SolutionCurve',
    'GeneratorFamily',
    'BUILTIN_FAMILIES',
    'as_vector_function',
    'solve_const',
    'solve_scalar_relaxation',
    'passage_time_ensemble',
    'ChronExpAccumulator',
    'chron_exp',
    'killed_path_estimate',
    'semigroup_apply',
    'SeriesResult',
    'perturbation_series',
    'semigroup_growth_bound',
    'resolvent_admissibility',
    'resolvent',
    'resolvent_curve',
    'solve_boundary',
    'finite_measure_right_limit',
    'EpsilonStudy',
    'epsilon_convergence_study',
    'SymbolFamily',
    'BUILTIN_SYMBOLS',
    'PsidoSolution',
    'green_along_path',
    'solve_psido',
    'parseval_check',
]

__version__ = "0.1.0"
