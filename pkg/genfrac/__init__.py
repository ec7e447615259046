# Core estimators and solvers (always available)
from .version import __version__
from .config import GenFracConfig, genfrac_config, setup_logging
from .errors import GenFracError, InvalidMeasureError, MeasureSpecError, NumericalGuardError, ValidationError
from .measures import (
    FiniteDiscrete,
    LevyMeasure,
    StableFractional,
    StableMixture,
    Sum,
    TemperedStable,
    Truncated,
    parse_measure,
)
from .gen_derivative import GriddedFunction, ResidualReport, caputo_beta, gen_caputo, gen_rl, residual
from .mittag_leffler import MLValue, classical_ml, gen_ml_operator, gen_ml_scalar, ml_operator_bound
from .potential import PotentialEstimate, fractional_integral, potential_mass, tabulate_potential
from .subordinator_paths import JumpPath, PathEnsemble, exit_time, first_passage_time, sample_path
from .solvers import (
    GeneratorFamily,
    PsidoSolution,
    SolutionCurve,
    SymbolFamily,
    chron_exp,
    perturbation_series,
    resolvent,
    semigroup_apply,
    solve_boundary,
    solve_const,
    solve_psido,
    solve_scalar_relaxation,
)
from .monitoring import RunMonitor
from .validation import HealthChecker, SolutionIntegrityChecker

# SVG output needs matplotlib
try:
    from .plotting import plot_psido_field, plot_solution_curve
    PLOTTING_AVAILABLE = True
except ImportError:
    PLOTTING_AVAILABLE = False

__all__ = [
    '__version__',
    'GenFracConfig',
    'genfrac_config',
    'setup_logging',
    'GenFracError',
    'ValidationError',
    'MeasureSpecError',
    'InvalidMeasureError',
    'NumericalGuardError',
    'LevyMeasure',
    'StableFractional',
    'TemperedStable',
    'FiniteDiscrete',
    'StableMixture',
    'Truncated',
    'Sum',
    'parse_measure',
    'GriddedFunction',
    'ResidualReport',
    'caputo_beta',
    'gen_caputo',
    'gen_rl',
    'residual',
    'MLValue',
    'classical_ml',
    'gen_ml_scalar',
    'gen_ml_operator',
    'ml_operator_bound',
    'PotentialEstimate',
    'potential_mass',
    'tabulate_potential',
    'fractional_integral',
    'JumpPath',
    'PathEnsemble',
    'sample_path',
    'exit_time',
    'first_passage_time',
    'SolutionCurve',
    'GeneratorFamily',
    'SymbolFamily',
    'PsidoSolution',
    'solve_const',
    'solve_scalar_relaxation',
    'chron_exp',
    'semigroup_apply',
    'perturbation_series',
    'resolvent',
    'solve_boundary',
    'solve_psido',
    'RunMonitor',
    'HealthChecker',
    'SolutionIntegrityChecker',
]

if PLOTTING_AVAILABLE:
    __all__.extend(['plot_solution_curve', 'plot_psido_field'])
