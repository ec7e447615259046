"""
Jump measures for generalized fractional derivatives.

This package provides the Levy measure variants, their analytic functionals
and the textual specification grammar.
"""
from .levy_measure import (
    FiniteDiscrete,
    LevyMeasure,
    StableFractional,
    StableMixture,
    Sum,
    TemperedStable,
    Truncated,
    default_truncation,
    laplace_exponent,
    levy_condition_integral,
    resolve_finite,
    sample_jump,
    sample_stable_increment,
    small_jump_mean,
    tail_mass,
    total_mass,
    truncate,
)
from .measure_spec import parse_measure

__all__ = [
    'LevyMeasure',
    'StableFractional',
    'TemperedStable',
    'FiniteDiscrete',
    'StableMixture',
    'Truncated',
    'Sum',
    'levy_condition_integral',
    'laplace_exponent',
    'total_mass',
    'tail_mass',
    'small_jump_mean',
    'truncate',
    'sample_jump',
    'default_truncation',
    'resolve_finite',
    'sample_stable_increment',
    'parse_measure',
]

__version__ = "0.1.0"
