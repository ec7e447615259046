"""
    --- AUTO-GENERATED DOCSTRING ---
    Table of content is automatically generated by Agent Docstrings v1.3.5

    Classes/Functions:
        - PotentialEstimate (line 67):
            - to_dict() -> Dict[str, Any] (line 76)
        - PotentialTable (line 87):
            - masses() -> np.ndarray (line 99)
            - __call__(z: ArrayLike) -> ArrayLike (line 106)
        - atomic_part(nu: LevyMeasure) -> Optional[FiniteDiscrete] (line 113)
        - passage_jump_count(z: float, jump: float, closed: bool) -> int (line 132)
        - potential_mass(nu: LevyMeasure, lam: float, z: float, method: str = 'auto', n_samples: int = 100000, eps: Optional[float] = None, seed: SeedLike = None, workers: Optional[int] = None) -> PotentialEstimate (line 290)
        - tabulate_potential(nu: LevyMeasure, z_max: float, h: Optional[float] = None, lam: float = 0.0, method: str = 'auto', n_samples: int = 20000, eps: Optional[float] = None, seed: SeedLike = None, workers: Optional[int] = None) -> PotentialTable (line 359)
        - check_exponential_bound(nu: LevyMeasure, z: float, k: float, estimate: Optional[PotentialEstimate] = None, **kwargs) -> bool (line 408)
        - fractional_integral(nu: LevyMeasure, a: float, g: Callable, x: float, method: str = 'grid', h: Optional[float] = None, n_samples: int = 20000, eps: Optional[float] = None, seed: SeedLike = None, workers: Optional[int] = None) -> PotentialEstimate (line 447)
        - iterated_potentials(nu: LevyMeasure, z: float, k_max: int, h: Optional[float] = None, table: Optional[PotentialTable] = None) -> np.ndarray (line 515)
        - iterated_potential_one(nu: LevyMeasure, z: float, k: int, h: Optional[float] = None) -> float (line 547)
    --- END AUTO-GENERATED DOCSTRING ---

Potential measures U^(ν)_λ([0, z]) and the generalized fractional integral.

The default estimator is the first-passage identity

    U_λ([0, z]) = E ∫₀^{τ_z} e^{-λt} dt = E[(1 - e^{-λτ_z}) / λ],

with τ_z the time S first exceeds z, so the level z itself is counted inside
[0, z]. Deterministic alternatives are the stable closed form, the series over
jump counts for finite ν, and Talbot inversion of 1/(p(λ + φ(p))).

For finite ν the measure U has an atom δ₀/(‖ν‖ + λ) at the origin. When ν is
concentrated on a lattice the potential is a lattice measure as well and
fundamental solutions are not unique; only [0, z] masses are computed here.
"""
import logging
import math
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional, Union

import numpy as np
from scipy import signal, special

from genfrac.config import GenFracConfig
from genfrac.errors import NumericalGuardError, ValidationError
from genfrac.measures.levy_measure import (
    FiniteDiscrete,
    LevyMeasure,
    StableFractional,
    StableMixture,
    Sum,
    TemperedStable,
    Truncated,
    resolve_finite,
)
from genfrac.numerics.laplace_inversion import talbot
from genfrac.numerics.sampling import BatchRunner, SeedLike, seed_value
from genfrac.subordinator_paths import first_passage_time, simulate_batch

logger = logging.getLogger(__name__)

ArrayLike = Union[float, np.ndarray]

METHODS = ('closed_form', 'series', 'monte_carlo', 'laplace_inversion')


@dataclass
class PotentialEstimate:
    """A value of U^(ν)_λ([0, z]) or of I^(ν)_a g(x) with its provenance."""

    value: float
    method: str
    std_error: float = 0.0
    params: Dict[str, Any] = field(default_factory=dict)
    flags: List[str] = field(default_factory=list)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'value': float(self.value),
            'method': self.method,
            'std_error': float(self.std_error),
            'params': self.params,
            'flags': list(self.flags),
        }


@dataclass
class PotentialTable:
    """Cumulative masses U([0, z_j]) on the grid z_j = j·h."""

    grid: np.ndarray
    cumulative: np.ndarray
    method: str
    std_error: Optional[np.ndarray] = None

    @property
    def step(self) -> float:
        return float(self.grid[1] - self.grid[0]) if self.grid.size > 1 else 0.0

    def masses(self) -> np.ndarray:
        """
        Cell masses: entry 0 is U({0}), entry j > 0 is U((z_{j-1}, z_j]).
        """
        masses = np.diff(self.cumulative, prepend=0.0)
        return np.maximum(masses, 0.0)

    def __call__(self, z: ArrayLike) -> ArrayLike:
        """Right-continuous step interpolation of z -> U([0, z])."""
        index = np.searchsorted(self.grid, np.asarray(z, dtype=float), side='right') - 1
        index = np.clip(index, 0, self.grid.size - 1)
        return self.cumulative[index]


def atomic_part(nu: LevyMeasure) -> Optional[FiniteDiscrete]:
    """Return ν as a FiniteDiscrete measure when it is purely atomic, else None."""
    if isinstance(nu, FiniteDiscrete):
        return nu
    if isinstance(nu, Truncated):
        base = atomic_part(nu.base)
        return None if base is None else base.truncate(nu.eps)
    if isinstance(nu, Sum):
        parts = [atomic_part(m) for m in nu.members]
        if any(p is None for p in parts):
            return None
        merged: Dict[float, float] = {}
        for part in parts:
            for y, b in part.atoms:
                merged[y] = merged.get(y, 0.0) + b
        return FiniteDiscrete(tuple(sorted(merged.items())))
    return None


def passage_jump_count(z: float, jump: float, closed: bool) -> int:
    """Jumps of fixed size ``jump`` needed to reach S ≥ z (closed) or S > z."""
    ratio = z / jump
    if closed:
        return max(int(math.ceil(ratio - 1e-12)), 1)
    return int(math.floor(ratio + 1e-12)) + 1


def _closed_form(nu: LevyMeasure, lam: float, z: ArrayLike) -> ArrayLike:
    z = np.asarray(z, dtype=float)
    if isinstance(nu, StableFractional):
        beta, c = nu.beta, nu.c
        if lam == 0.0:
            return np.power(z, beta) / (c * special.gamma(1.0 + beta))
        from genfrac.mittag_leffler import classical_ml
        return (1.0 - classical_ml(beta, -lam * np.power(z, beta) / c)) / lam

    atoms = atomic_part(nu)
    if atoms is not None and len(atoms.atoms) == 1:
        (y0, b), = atoms.atoms
        counts = np.vectorize(lambda level: passage_jump_count(level, y0, closed=False))(z)
        if lam == 0.0:
            return counts / b
        return (1.0 - np.power(b / (b + lam), counts)) / lam
    raise ValidationError(
        f"no closed form for the potential of {nu.to_spec()}; "
        "closed forms exist for stable measures and single atoms")


def _atomic_sum_law(atoms: FiniteDiscrete, lam: float, levels: np.ndarray):
    """Series Σ_k ‖ν‖^k/(‖ν‖+λ)^{k+1} P(Y_1+…+Y_k ≤ z) with exact atom sums."""
    mass = atoms.total_mass()
    ratio = mass / (mass + lam)
    top = float(levels.max())
    law: Dict[float, float] = {0.0: 1.0}
    total = np.zeros_like(levels)
    positions = atoms.positions
    probs = atoms.masses / mass
    for k in range(10 * GenFracConfig.SERIES_CAP + 1):
        if not law:
            return total, k
        support = np.array(sorted(law))
        cdf = np.cumsum([law[s] for s in support])
        index = np.searchsorted(support, levels, side='right') - 1
        below = np.where(index >= 0, cdf[np.clip(index, 0, None)], 0.0)
        term = ratio ** k / (mass + lam) * below
        total += term
        if np.max(term) < GenFracConfig.SERIES_TOL * max(np.max(total), 1e-300):
            return total, k
        nxt: Dict[float, float] = {}
        for s, p in law.items():
            for y, q in zip(positions, probs):
                level = round(s + y, 12)
                if level <= top + 1e-12:
                    nxt[level] = nxt.get(level, 0.0) + p * q
        if len(nxt) > GenFracConfig.MAX_ATOM_TUPLES:
            raise NumericalGuardError(
                f"atom-sum support exceeded {GenFracConfig.MAX_ATOM_TUPLES} points")
        law = nxt
    raise NumericalGuardError(
        f"potential series for {atoms.to_spec()} did not settle within "
        f"{10 * GenFracConfig.SERIES_CAP} terms")


def _binned_sum_law(nu: LevyMeasure, lam: float, levels: np.ndarray, bins: int = 2048):
    """Same series for non-atomic finite ν, jumps binned to lower cell edges."""
    mass = nu.total_mass()
    ratio = mass / (mass + lam)
    top = float(levels.max())
    h = top / bins
    edges = np.arange(bins + 2) * h
    tails = np.array([nu.tail_mass(e) for e in edges])
    cell = np.maximum(tails[:-1] - tails[1:], 0.0) / mass
    law = np.zeros(bins + 1)
    law[0] = 1.0
    total = np.zeros_like(levels)
    index = np.clip(np.floor(levels / h + 1e-9).astype(int), 0, bins)
    for k in range(10 * GenFracConfig.SERIES_CAP + 1):
        cdf = np.cumsum(law)
        term = ratio ** k / (mass + lam) * cdf[index]
        total += term
        if np.max(term) < GenFracConfig.SERIES_TOL * max(np.max(total), 1e-300):
            return total, k
        law = np.maximum(signal.fftconvolve(law, cell)[:bins + 1], 0.0)
    raise NumericalGuardError(
        f"potential series for {nu.to_spec()} did not settle within "
        f"{10 * GenFracConfig.SERIES_CAP} terms")


def _series(nu: LevyMeasure, lam: float, levels: np.ndarray):
    if not nu.is_finite():
        raise ValidationError(
            f"the potential series needs a finite measure, got {nu.to_spec()}")
    if nu.total_mass() <= 0:
        raise ValidationError("the potential series needs a measure with positive mass")
    atoms = atomic_part(nu)
    if atoms is not None:
        values, terms = _atomic_sum_law(atoms, lam, levels)
        return values, terms, []
    values, terms = _binned_sum_law(nu, lam, levels)
    return values, terms, ['binned']


def _laplace_capable(nu: LevyMeasure) -> bool:
    if isinstance(nu, (StableFractional, TemperedStable, StableMixture)):
        return True
    if isinstance(nu, Sum):
        return all(_laplace_capable(m) for m in nu.members)
    return False


def _laplace_inversion(nu: LevyMeasure, lam: float, levels: np.ndarray) -> np.ndarray:
    if not _laplace_capable(nu):
        raise ValidationError(
            f"Laplace inversion needs an absolutely continuous measure with analytic "
            f"exponent (stable, tempered, mixtures), got {nu.to_spec()}")

    def transform(p):
        return 1.0 / (p * (lam + nu.laplace_exponent(p)))

    return talbot(transform, levels)


def _passage_kernel(nu: LevyMeasure, lam: float, z: float, eps: Optional[float]):
    def kernel(rng: np.random.Generator, n: int):
        taus = first_passage_time(nu, z, rng, eps=eps, size=n, closed=False)
        values = taus if lam == 0.0 else -np.expm1(-lam * taus) / lam
        return values.sum(), np.square(values).sum()

    return kernel


def _monte_carlo(nu: LevyMeasure, lam: float, z: float, n_samples: int,
                 eps: Optional[float], seed: SeedLike, workers: Optional[int]):
    flags = []
    if not (isinstance(nu, StableFractional) and eps is None and GenFracConfig.USE_EXACT_STABLE):
        finite, eps = resolve_finite(nu, eps)
        if eps is not None:
            flags.append('truncated')
        nu = finite
    runner = BatchRunner(n_samples, seed, workers=workers, description='potential')
    estimate = runner.run(_passage_kernel(nu, lam, z, eps))
    return float(estimate.mean), float(estimate.std_error), eps, flags, runner


def _auto_method(nu: LevyMeasure) -> str:
    if isinstance(nu, StableFractional):
        return 'closed_form'
    atoms = atomic_part(nu)
    if atoms is not None and len(atoms.atoms) == 1:
        return 'closed_form'
    if nu.is_finite():
        return 'series'
    if _laplace_capable(nu):
        return 'laplace_inversion'
    return 'monte_carlo'


def potential_mass(nu: LevyMeasure, lam: float, z: float, method: str = 'auto',
                   n_samples: int = 100000, eps: Optional[float] = None,
                   seed: SeedLike = None, workers: Optional[int] = None) -> PotentialEstimate:
    """
    Estimate U^(ν)_λ([0, z]).

    Args:
        nu: Jump measure
        lam: λ ≥ 0
        z: Level z > 0
        method: 'closed_form', 'series', 'monte_carlo', 'laplace_inversion' or 'auto'
        n_samples: Paths for Monte Carlo
        eps: Truncation for infinite measures (Monte Carlo only)
        seed: Master seed
        workers: Thread count

    Returns:
        PotentialEstimate
    """
    if lam < 0:
        raise ValidationError(
            "potential_mass needs lambda >= 0; use the Mittag-Leffler functions "
            "for negative arguments")
    if not z > 0:
        raise ValidationError(f"potential level z must be positive, got {z}")
    if method == 'auto':
        method = _auto_method(nu)
    if method not in METHODS:
        raise ValidationError(f"unknown potential method '{method}', expected one of {METHODS}")

    params: Dict[str, Any] = {'measure': nu.to_spec(), 'lambda': lam, 'z': z}
    flags: List[str] = []
    std_error = 0.0
    if method == 'closed_form':
        value = float(_closed_form(nu, lam, z))
    elif method == 'series':
        values, terms, flags = _series(nu, lam, np.array([float(z)]))
        value = float(values[0])
        params['terms'] = terms
    elif method == 'laplace_inversion':
        value = float(_laplace_inversion(nu, lam, np.array([float(z)]))[0])
    else:
        value, std_error, eps_used, flags, runner = _monte_carlo(
            nu, lam, z, n_samples, eps, seed, workers)
        params.update({'n_samples': n_samples, 'eps': eps_used,
                       'seed': seed_value(runner.seed_sequence)})
    logger.debug(f"U_{lam}([0,{z}]) of {nu.to_spec()} = {value:.6g} ({method})")
    return PotentialEstimate(value=value, method=method, std_error=std_error,
                             params=params, flags=flags)


def _tabulate_monte_carlo(nu: LevyMeasure, lam: float, grid: np.ndarray, n_samples: int,
                          eps: Optional[float], seed: SeedLike, workers: Optional[int]):
    finite, _ = resolve_finite(nu, eps)
    levels = grid.copy()
    levels[0] = 0.0
    top = float(grid[-1])

    def kernel(rng: np.random.Generator, n: int):
        batch = simulate_batch(finite, n, rng, level=top, closed=False)
        taus = batch.passage_times(levels, closed=False)
        values = taus if lam == 0.0 else -np.expm1(-lam * taus) / lam
        return values.sum(axis=0), np.square(values).sum(axis=0)

    runner = BatchRunner(n_samples, seed, workers=workers, description='potential table')
    estimate = runner.run(kernel)
    return np.asarray(estimate.mean), np.asarray(estimate.std_error)


def tabulate_potential(nu: LevyMeasure, z_max: float, h: Optional[float] = None,
                       lam: float = 0.0, method: str = 'auto', n_samples: int = 20000,
                       eps: Optional[float] = None, seed: SeedLike = None,
                       workers: Optional[int] = None) -> PotentialTable:
    """
    Tabulate z -> U_λ([0, z]) on a uniform grid over [0, z_max].

    Args:
        nu: Jump measure
        z_max: Right end of the table
        h: Grid step, defaults to 1/GENFRAC_GRID_POINTS_PER_UNIT
        lam: λ ≥ 0
        method: As for :func:`potential_mass`
        n_samples: Paths for Monte Carlo
        eps: Truncation for Monte Carlo on infinite measures
        seed: Master seed
        workers: Thread count

    Returns:
        PotentialTable with cumulative masses
    """
    if not z_max > 0:
        raise ValidationError(f"table end must be positive, got {z_max}")
    if lam < 0:
        raise ValidationError("tabulate_potential needs lambda >= 0")
    h = h or 1.0 / GenFracConfig.GRID_POINTS_PER_UNIT
    n = max(int(math.ceil(z_max / h - 1e-9)), 1)
    grid = np.arange(n + 1) * (z_max / n)
    if method == 'auto':
        method = _auto_method(nu)

    std_error = None
    if method == 'closed_form':
        cumulative = np.asarray(_closed_form(nu, lam, grid), dtype=float)
        if not nu.is_finite():
            cumulative[0] = 0.0
    elif method == 'series':
        cumulative, _, _ = _series(nu, lam, grid)
    elif method == 'laplace_inversion':
        cumulative = np.concatenate([[0.0], _laplace_inversion(nu, lam, grid[1:])])
    elif method == 'monte_carlo':
        cumulative, std_error = _tabulate_monte_carlo(nu, lam, grid, n_samples, eps, seed, workers)
    else:
        raise ValidationError(f"unknown potential method '{method}'")

    cumulative = np.maximum.accumulate(np.maximum(cumulative, 0.0))
    return PotentialTable(grid=grid, cumulative=cumulative, method=method, std_error=std_error)


def check_exponential_bound(nu: LevyMeasure, z: float, k: float,
                            estimate: Optional[PotentialEstimate] = None, **kwargs) -> bool:
    """
    Check U_0([0, z]) ≤ e^{kz}/φ_ν(k) within three standard errors.

    Args:
        nu: Jump measure
        z: Level z > 0
        k: Exponent k > 0
        estimate: Precomputed U_0([0, z]); computed with ``potential_mass`` otherwise
        **kwargs: Passed to ``potential_mass``

    Returns:
        True when the bound holds
    """
    if not (z > 0 and k > 0):
        raise ValidationError("check_exponential_bound needs z > 0 and k > 0")
    phi = float(nu.laplace_exponent(k))
    if phi <= 0:
        return True
    bound = math.exp(k * z) / phi
    if estimate is None:
        estimate = potential_mass(nu, 0.0, z, **kwargs)
    holds = estimate.value <= bound + 3.0 * estimate.std_error
    if not holds:
        logger.warning(f"exponential potential bound violated: {estimate.value:.6g} > {bound:.6g}")
    return holds


def _as_function(g: Callable) -> Callable[[np.ndarray], np.ndarray]:
    def vectorized(points: np.ndarray) -> np.ndarray:
        values = np.asarray(g(points), dtype=float)
        if values.shape[:1] != points.shape[:1]:
            values = np.array([np.asarray(g(p), dtype=float) for p in points])
        return values

    return vectorized


def fractional_integral(nu: LevyMeasure, a: float, g: Callable, x: float,
                        method: str = 'grid', h: Optional[float] = None,
                        n_samples: int = 20000, eps: Optional[float] = None,
                        seed: SeedLike = None, workers: Optional[int] = None) -> PotentialEstimate:
    """
    Generalized fractional integral I^(ν)_a g(x) = ∫_[0, x-a] g(x - z) U^(ν)(dz).

    Args:
        nu: Jump measure
        a: Left end
        g: Callable on points ≥ a (vectorized or scalar); GriddedFunction works
        x: Evaluation point, x ≥ a
        method: 'grid' (tabulated U, midpoint rule) or 'monte_carlo'
        h: Grid step for the table
        n_samples: Paths for Monte Carlo
        eps: Truncation for Monte Carlo on infinite measures
        seed: Master seed
        workers: Thread count

    Returns:
        PotentialEstimate; flagged 'generalized' when g(a) ≠ 0
    """
    if x < a:
        raise ValidationError(f"fractional_integral needs x >= a, got x={x}, a={a}")
    func = _as_function(g)
    g_a = float(np.asarray(func(np.array([a]))).ravel()[0])
    flags = [] if abs(g_a) <= 1e-14 else ['generalized']
    params: Dict[str, Any] = {'measure': nu.to_spec(), 'a': a, 'x': x, 'method': method}
    if x == a:
        atom = 0.0 if not nu.is_finite() else 1.0 / nu.total_mass()
        return PotentialEstimate(value=atom * g_a, method=method, params=params, flags=flags)

    if method == 'grid':
        table = tabulate_potential(nu, x - a, h=h)
        masses = table.masses()
        mids = np.concatenate([[0.0], 0.5 * (table.grid[1:] + table.grid[:-1])])
        values = func(x - mids)
        value = float(np.dot(masses, values))
        return PotentialEstimate(value=value, method='grid', params=params, flags=flags)

    if method != 'monte_carlo':
        raise ValidationError(f"unknown fractional_integral method '{method}'")
    finite, eps_used = resolve_finite(nu, eps)
    level = x - a

    def kernel(rng: np.random.Generator, n: int):
        batch = simulate_batch(finite, n, rng, level=level, closed=False)
        index = batch.passage_index(level, closed=False)[:, 0]
        width = batch.times.shape[1] - 1
        cols = np.arange(width)[None, :]
        alive = cols < index[:, None]
        with np.errstate(invalid='ignore'):
            durations = np.where(alive, np.diff(batch.times, axis=1), 0.0)
            positions = np.where(alive, x - batch.levels[:, :-1], x)
        values = func(positions.ravel()).reshape(positions.shape)
        totals = np.sum(durations * values, axis=1)
        return totals.sum(), np.square(totals).sum()

    runner = BatchRunner(n_samples, seed, workers=workers, description='fractional integral')
    estimate = runner.run(kernel)
    params.update({'n_samples': n_samples, 'eps': eps_used,
                   'seed': seed_value(runner.seed_sequence)})
    if eps_used is not None:
        flags.append('truncated')
    return PotentialEstimate(value=float(estimate.mean), method='monte_carlo',
                             std_error=float(estimate.std_error), params=params, flags=flags)


def iterated_potentials(nu: LevyMeasure, z: float, k_max: int, h: Optional[float] = None,
                        table: Optional[PotentialTable] = None) -> np.ndarray:
    """
    Values [(I^(ν)_0)^k 1](z) for k = 0..k_max.

    Stable measures use z^{kβ}/(c^k Γ(1+kβ)); otherwise the iterates are
    convolved on a uniform grid against the tabulated potential.
    """
    if k_max < 0:
        raise ValidationError("iteration order must be nonnegative")
    if not z > 0:
        return np.array([1.0] + [0.0] * k_max)
    if isinstance(nu, StableFractional) and table is None:
        k = np.arange(k_max + 1)
        logs = k * (nu.beta * math.log(z) - math.log(nu.c)) - special.gammaln(1.0 + k * nu.beta)
        return np.exp(logs)

    table = table or tabulate_potential(nu, z, h=h)
    masses = table.masses()
    n = table.grid.size
    current = np.ones(n)
    out = [1.0]
    for _ in range(k_max):
        # cell j > 0 carries mass at the midpoint, so F is averaged over its two nodes
        shifted = 0.5 * (current + np.concatenate([current[1:], current[-1:]]))
        conv = masses[0] * current
        conv[1:] += signal.fftconvolve(masses[1:], shifted[:-1])[:n - 1]
        current = np.maximum(conv, 0.0)
        out.append(float(current[-1]))
    return np.array(out)


def iterated_potential_one(nu: LevyMeasure, z: float, k: int, h: Optional[float] = None) -> float:
    """
    [(I^(ν)_0)^k 1](z); k = 0 gives 1.

    Args:
        nu: Jump measure
        z: Point z ≥ 0
        k: Order k ≥ 0
        h: Grid step for non-stable measures

    Returns:
        The k-th iterate at z
    """
    return float(iterated_potentials(nu, z, k, h=h)[k])
