"""
    --- AUTO-GENERATED DOCSTRING ---
    Table of content is automatically generated by Agent Docstrings v1.3.5

    Classes/Functions:
        - uses_exact_passage(nu: LevyMeasure, eps: Optional[float]) -> bool (line 52)
        - passage_time_ensemble(nu: LevyMeasure, levels: np.ndarray, rng: np.random.Generator, n: int, eps: Optional[float] = None) -> np.ndarray (line 57)
        - solve_const(nu, generator, Y, g=None, a: float = 0.0, grid=None, method: str = 'first_passage', ...) -> SolutionCurve (line 84)
        - solve_scalar_relaxation(nu, lam, Y, a: float = 0.0, grid=None, method: str = 'auto', ...) -> SolutionCurve (line 192)
    --- END AUTO-GENERATED DOCSTRING ---

Constant-generator problems D^(ν)_{a+*} f = A f + g, f(a) = Y.

The solution is

    f(x) = E_(ν),x-a(A)·Y + ∫₀^{x-a} U^(ν)_{-A}(dy) g(x - y),

where E_(ν),z(A) = E[e^{σA}] over the exit time σ of Z_x from (a, ∞) and the
operator-valued potential term is E ∫₀^σ e^{sA} g(x - S_s) ds. All grid points
share one path ensemble, followed until it passes the largest level x - a.
Between grid points the source is evaluated at the exact path positions.
"""
import logging
from typing import Any, Dict, List, Optional, Tuple

import numpy as np

from genfrac.config import GenFracConfig
from genfrac.errors import ValidationError
from genfrac.measures.levy_measure import (
    FiniteDiscrete,
    LevyMeasure,
    StableFractional,
    resolve_finite,
    sample_stable_increment,
)
from genfrac.mittag_leffler import classical_ml, series_order
from genfrac.numerics.matrix_exp import MatrixGenerator, exp_scaled
from genfrac.numerics.sampling import BatchRunner, SeedLike, seed_value
from genfrac.potential import iterated_potentials, passage_jump_count
from genfrac.solvers.generators import GeneratorFamily, as_vector_function
from genfrac.solvers.solution import SolutionCurve
from genfrac.solvers.timedep import _prepare_grid, killed_path_estimate
from genfrac.subordinator_paths import simulate_batch

logger = logging.getLogger(__name__)

CONST_METHODS = ('first_passage', 'series')
RELAXATION_METHODS = ('auto', 'closed_form', 'first_passage')


def uses_exact_passage(nu: LevyMeasure, eps: Optional[float]) -> bool:
    """Stable measures without ε draw exact passage times."""
    return isinstance(nu, StableFractional) and eps is None and GenFracConfig.USE_EXACT_STABLE


def passage_time_ensemble(nu: LevyMeasure, levels: np.ndarray, rng: np.random.Generator,
                          n: int, eps: Optional[float] = None) -> np.ndarray:
    """
    Exit times σ for every level on n shared paths, shape (n, len(levels)).

    Stable measures without ε scale one S_1 draw per path:
    σ_z = z^β / (c·S_1^β). Other measures follow one compound Poisson path per
    row up to the largest level, with the closed crossing rule S ≥ z.
    """
    levels = np.atleast_1d(np.asarray(levels, dtype=float))
    if uses_exact_passage(nu, eps):
        s1 = sample_stable_increment(nu.beta, 1.0, 1.0, rng, n)
        return np.power(levels[None, :], nu.beta) / (nu.c * np.power(s1, nu.beta)[:, None])
    finite, _ = resolve_finite(nu, eps)
    batch = simulate_batch(finite, n, rng, level=float(levels.max()), closed=True)
    return batch.passage_times(levels, closed=True)


def _boundary_vector(Y, d: int) -> np.ndarray:
    y = np.asarray(Y, dtype=float).reshape(-1)
    if y.size == 1 and d > 1:
        y = np.full(d, float(y[0]))
    if y.size != d:
        raise ValidationError(f"boundary vector has length {y.size}, expected {d}")
    return y


def solve_const(nu: LevyMeasure, generator, Y, g=None, a: float = 0.0, grid=None,
                method: str = 'first_passage', n_samples: int = 10000,
                eps: Optional[float] = None, seed: SeedLike = None,
                workers: Optional[int] = None,
                lower_bound: Optional[Tuple[float, float]] = None) -> SolutionCurve:
    """
    Solve D^(ν)_{a+*} f = A f + g with constant matrix A and f(a) = Y.

    Args:
        nu: Jump measure
        generator: MatrixGenerator or square array
        Y: Boundary vector
        g: Source (function of position, constant vector or None)
        a: Boundary point
        grid: Points x ≥ a; defaults to GENFRAC_GRID_POINTS_PER_UNIT points on [a, a+1]
        method: 'first_passage' or 'series' (series needs g = None)
        n_samples: Paths N
        eps: Truncation for infinite measures
        seed: Master seed
        workers: Thread count
        lower_bound: Declared (β, C) with ν ≥ C·ν_β; required for non-contractions

    Returns:
        SolutionCurve with f(a) = Y exactly
    """
    gen = generator if isinstance(generator, MatrixGenerator) else MatrixGenerator.from_matrix(generator)
    if np.iscomplexobj(gen.matrix):
        raise ValidationError("solve_const works with real generators")
    if method not in CONST_METHODS:
        raise ValidationError(f"unknown method '{method}', expected one of {CONST_METHODS}")
    if grid is None:
        grid = np.linspace(a, a + 1.0, GenFracConfig.GRID_POINTS_PER_UNIT + 1)
    grid = _prepare_grid(grid, a)
    d = gen.dimension
    y = _boundary_vector(Y, d)

    flags: List[str] = []
    if not gen.contraction:
        if lower_bound is None:
            raise ValidationError(
                f"A is not a contraction (M={gen.growth_constant}, m={gen.growth_bound:.4g}); "
                "the regular case needs a declared lower bound nu >= C*nu_beta (lower_bound=(beta, C))")
        logger.warning("Non-contraction A accepted under the declared lower bound "
                       f"{lower_bound}; Monte Carlo variance grows like e^(m sigma)")
        flags.append('out_of_theorem')

    values = np.tile(y, (grid.size, 1))
    errors = np.zeros((grid.size, d))
    levels = grid[1:] - a
    metadata: Dict[str, Any] = {'problem': 'solve_const', 'measure': nu.to_spec(),
                                'generator': gen.to_dict(), 'Y': y.tolist(), 'a': a,
                                'method': method, 'n_samples': n_samples, 'seed': seed_value(seed)}

    if method == 'series':
        if g is not None:
            raise ValidationError("the series method covers g = 0 only")
        bound = lower_bound or nu.fractional_lower_bound()
        if bound is None:
            raise ValidationError(f"the series method needs a lower bound for {nu.to_spec()}")
        norm = float(np.linalg.norm(gen.matrix, 2))
        for i, z in enumerate(levels, start=1):
            order = series_order(bound, z, norm)
            iterates = iterated_potentials(nu, z, order)
            power = y.copy()
            total = np.zeros(d)
            for k in range(order + 1):
                total = total + iterates[k] * power
                power = gen.matrix @ power
            values[i] = total
        metadata.update({'eps': None, 'n_samples': 0})
        return SolutionCurve(grid, values, errors, metadata=metadata, flags=flags)

    if levels.size == 0 or (g is None and not np.any(y)):
        metadata['eps'] = eps
        return SolutionCurve(grid, values, errors, metadata=metadata, flags=flags)

    if g is None:
        eps_used = None if uses_exact_passage(nu, eps) else resolve_finite(nu, eps)[1]

        def kernel(rng: np.random.Generator, n: int):
            sigma = passage_time_ensemble(nu, levels, rng, n, eps)
            outcomes = exp_scaled(gen.matrix, sigma) @ y
            return outcomes.sum(axis=0), np.square(outcomes).sum(axis=0)

        runner = BatchRunner(n_samples, seed, workers=workers, description='solve-const')
        estimate = runner.run(kernel)
    else:
        family = GeneratorFamily.constant(gen.matrix, gen.growth_constant, gen.growth_bound)
        forcing = as_vector_function(g, d)
        estimate, eps_used = killed_path_estimate(
            nu, family, grid[1:], a, source=lambda pos, mats: forcing(pos), terminal=y,
            n_samples=n_samples, eps=eps, seed=seed, workers=workers, description='solve-const')

    values[1:] = estimate.mean
    errors[1:] = estimate.std_error
    if eps_used is not None:
        flags.append('truncated')
    metadata['eps'] = eps_used
    logger.info(f"solve_const on {grid.size} points with N={n_samples}, eps={eps_used}")
    return SolutionCurve(grid, values, errors, metadata=metadata, flags=flags)


def _single_atom(nu: LevyMeasure) -> Optional[Tuple[float, float]]:
    if isinstance(nu, FiniteDiscrete) and len(nu.atoms) == 1:
        return nu.atoms[0]
    return None


def solve_scalar_relaxation(nu: LevyMeasure, lam: float, Y: float, a: float = 0.0, grid=None,
                            method: str = 'auto', n_samples: int = 10000,
                            eps: Optional[float] = None, seed: SeedLike = None,
                            workers: Optional[int] = None) -> SolutionCurve:
    """
    f(x) = Y·E_(ν),x-a(-λ), the solution of D^(ν)_{a+*} f = -λf, f(a) = Y.

    'closed_form' covers stable measures (E_β(-λ(x-a)^β/c)) and a single atom
    (b/(b+λ))^k with k jumps to exit; 'auto' picks it when available and falls
    back to first-passage Monte Carlo.

    Exit here is S ≥ x - a, the passage rule of the solvers. gen_ml_scalar and
    the potentials use S > z, so for atoms the two differ where x - a is a sum
    of atom sizes: one unit atom gives 1/2 here at x - a = 1 while
    E_(ν),1(-1) = 1/4. Off those lattice points they agree.
    """
    if lam < 0:
        raise ValidationError(f"relaxation rate must be nonnegative, got {lam}")
    if method not in RELAXATION_METHODS:
        raise ValidationError(f"unknown method '{method}', expected one of {RELAXATION_METHODS}")
    if grid is None:
        grid = np.linspace(a, a + 1.0, GenFracConfig.GRID_POINTS_PER_UNIT + 1)
    grid = _prepare_grid(grid, a)
    y = float(Y)
    levels = grid[1:] - a
    values = np.full((grid.size, 1), y)
    errors = np.zeros((grid.size, 1))
    atom = _single_atom(nu)
    closed_available = isinstance(nu, StableFractional) or atom is not None
    if method == 'auto':
        method = 'closed_form' if closed_available else 'first_passage'
    if method == 'closed_form' and not closed_available:
        raise ValidationError(f"no closed form for {nu.to_spec()}")
    metadata: Dict[str, Any] = {'problem': 'solve_scalar_relaxation', 'measure': nu.to_spec(),
                                'lambda': lam, 'Y': y, 'a': a, 'method': method}
    flags: List[str] = []

    if lam == 0.0 or levels.size == 0:
        return SolutionCurve(grid, values, errors, metadata=metadata, flags=flags)

    if method == 'closed_form':
        if isinstance(nu, StableFractional):
            values[1:, 0] = y * classical_ml(nu.beta, -lam * np.power(levels, nu.beta) / nu.c)
        else:
            position, mass = atom
            counts = np.array([passage_jump_count(z, position, closed=True) for z in levels])
            values[1:, 0] = y * np.power(mass / (mass + lam), counts)
        return SolutionCurve(grid, values, errors, metadata=metadata, flags=flags)

    eps_used = None if uses_exact_passage(nu, eps) else resolve_finite(nu, eps)[1]

    def kernel(rng: np.random.Generator, n: int):
        sigma = passage_time_ensemble(nu, levels, rng, n, eps)
        outcomes = y * np.exp(-lam * sigma)
        return outcomes.sum(axis=0), np.square(outcomes).sum(axis=0)

    runner = BatchRunner(n_samples, seed, workers=workers, description='relaxation')
    estimate = runner.run(kernel)
    values[1:, 0] = estimate.mean
    errors[1:, 0] = estimate.std_error
    if eps_used is not None:
        flags.append('truncated')
    metadata.update({'n_samples': n_samples, 'eps': eps_used,
                     'seed': seed_value(runner.seed_sequence)})
    return SolutionCurve(grid, values, errors, metadata=metadata, flags=flags)
