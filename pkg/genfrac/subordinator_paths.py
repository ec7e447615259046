"""
    --- AUTO-GENERATED DOCSTRING ---
    Table of content is automatically generated by Agent Docstrings v1.3.5

    Classes/Functions:
        - JumpPath (line 72):
            - n_jumps() -> int (line 99)
            - level(s: float) -> float (line 102)
            - evaluate(s: float) -> float (line 109)
            - segments(t0: float, t1: float) -> List[Tuple[float, float, float]] (line 113)
            - to_rows(path_id: int) -> List[Dict[str, float]] (line 130)
        - PathBatch (line 136):
            - n_paths() -> int (line 149)
            - passage_index(levels: ArrayLike, closed: bool = True) -> np.ndarray (line 152)
            - passage_times(levels: ArrayLike, closed: bool = True) -> np.ndarray (line 167)
            - jump_counts(t: float) -> np.ndarray (line 173)
            - level_at(t: float) -> np.ndarray (line 177)
            - to_paths(x: float, horizon: float) -> List[JumpPath] (line 182)
        - PathEnsemble (line 194):
            - mean_jump_count() -> float (line 208)
            - to_frame() -> pd.DataFrame (line 211)
            - summary() -> Dict[str, Any] (line 218)
        - simulate_batch(nu: LevyMeasure, n_paths: int, rng: np.random.Generator, level: Optional[float] = None, horizon: Optional[float] = None, closed: bool = True) -> PathBatch (line 235)
        - sample_path(nu: LevyMeasure, t: float, x: float, rng: np.random.Generator) -> JumpPath (line 317)
        - evaluate(path: JumpPath, s: float) -> float (line 340)
        - exit_time(nu: LevyMeasure, x: float, a: float, rng: np.random.Generator) -> Tuple[float, JumpPath] (line 345)
        - first_passage_time(nu: LevyMeasure, z: float, rng: np.random.Generator, eps: Optional[float] = None, size: SizeLike = None, closed: bool = True) (line 372)
        - empirical_transition(nu: LevyMeasure, t: float, z: float, n_samples: int, seed: SeedLike = None, eps: Optional[float] = None, workers: Optional[int] = None) -> MonteCarloEstimate (line 407)
        - sample_coupled_paths(nu: LevyMeasure, eps_fine: float, eps_coarse: float, t: float, x: float, rng: np.random.Generator) -> Tuple[JumpPath, JumpPath] (line 453)
        - simulate_ensemble(nu: LevyMeasure, t: float, x: float, n_paths: int, seed: SeedLike = None, eps: Optional[float] = None, workers: Optional[int] = None) -> PathEnsemble (line 486)
    --- END AUTO-GENERATED DOCSTRING ---

Piecewise-constant subordinator paths.

A finite jump measure ν generates a compound Poisson subordinator S with
exponential inter-arrival times of rate ‖ν‖ and jumps distributed as ν/‖ν‖.
The inverted process is Z_x(s) = x - S(s). Infinite measures are simulated
through their truncation ν_ε. Batches of paths are stored as padded arrays
(``PathBatch``) so estimators can vectorize over paths.

Passage conventions: ``closed=True`` stops at the first time with S ≥ z (exit
from (a, ∞) at Z ≤ a); ``closed=False`` stops when S > z, which counts the
level z itself as inside [0, z].
"""
import logging
import math
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple, Union

import numpy as np
import pandas as pd

from genfrac.errors import ValidationError
from genfrac.config import GenFracConfig
from genfrac.measures.levy_measure import (
    LevyMeasure,
    SizeLike,
    StableFractional,
    resolve_finite,
    sample_jump,
    sample_stable_increment,
    truncate,
)
from genfrac.numerics.sampling import BatchRunner, MonteCarloEstimate, SeedLike, seed_value

logger = logging.getLogger(__name__)

ArrayLike = Union[float, np.ndarray]


@dataclass(frozen=True, eq=False)
class JumpPath:
    """One trajectory: start x, horizon t, jump times and jump sizes."""

    x: float
    horizon: float
    jump_times: np.ndarray = field(default_factory=lambda: np.zeros(0))
    jump_sizes: np.ndarray = field(default_factory=lambda: np.zeros(0))

    def __post_init__(self):
        times = np.asarray(self.jump_times, dtype=float).reshape(-1)
        sizes = np.asarray(self.jump_sizes, dtype=float).reshape(-1)
        if times.shape != sizes.shape:
            raise ValidationError("jump_times and jump_sizes must have the same length")
        if self.horizon < 0:
            raise ValidationError(f"horizon must be nonnegative, got {self.horizon}")
        if times.size:
            if np.any(np.diff(times) <= 0):
                raise ValidationError("jump times must be strictly increasing")
            # exit paths record the crossing jump at the horizon itself
            if times[0] <= 0 or times[-1] > self.horizon:
                raise ValidationError("jump times must lie in (0, horizon]")
            if np.any(sizes <= 0):
                raise ValidationError("jump sizes must be positive")
        object.__setattr__(self, 'jump_times', times)
        object.__setattr__(self, 'jump_sizes', sizes)

    @property
    def n_jumps(self) -> int:
        return int(self.jump_times.size)

    def level(self, s: float) -> float:
        """S(s) = Σ_{s_i ≤ s} z_i, right-continuous."""
        if s < 0 or s > self.horizon:
            raise ValidationError(f"time {s} outside [0, {self.horizon}]")
        count = int(np.searchsorted(self.jump_times, s, side='right'))
        return float(self.jump_sizes[:count].sum())

    def evaluate(self, s: float) -> float:
        """Z_x(s) = x - S(s)."""
        return self.x - self.level(s)

    def segments(self, t0: float, t1: float) -> List[Tuple[float, float, float]]:
        """
        Constant pieces of Z_x on [t0, t1] as (start, end, position).

        Pieces of zero length are skipped.
        """
        if not 0 <= t0 <= t1 <= self.horizon:
            raise ValidationError(f"need 0 <= t0 <= t1 <= {self.horizon}, got [{t0}, {t1}]")
        cuts = [t0] + [s for s in self.jump_times if t0 < s < t1] + [t1]
        pieces = []
        for start, end in zip(cuts[:-1], cuts[1:]):
            if end > start:
                pieces.append((start, end, self.evaluate(start)))
        if not pieces and t1 == t0:
            return []
        return pieces

    def to_rows(self, path_id: int) -> List[Dict[str, float]]:
        return [{'path_id': path_id, 's_i': float(s), 'z_i': float(z)}
                for s, z in zip(self.jump_times, self.jump_sizes)]


@dataclass
class PathBatch:
    """
    Padded arrays for many paths started at level 0.

    ``times[:, 0] = 0`` and ``levels[:, 0] = 0``; column i > 0 holds the i-th
    arrival time and the level S just after it. Unused columns are ``inf``.
    """

    times: np.ndarray
    levels: np.ndarray
    n_jumps: np.ndarray

    @property
    def n_paths(self) -> int:
        return self.times.shape[0]

    def passage_index(self, levels: ArrayLike, closed: bool = True) -> np.ndarray:
        """
        Column of the first crossing of each level, shape (n_paths, n_levels).

        Args:
            levels: Positive level or array of levels
            closed: Cross at S ≥ z when True, at S > z otherwise
        """
        z = np.atleast_1d(np.asarray(levels, dtype=float))
        side = 'left' if closed else 'right'
        index = np.empty((self.n_paths, z.size), dtype=int)
        for row in range(self.n_paths):
            index[row] = np.searchsorted(self.levels[row], z, side=side)
        return index

    def passage_times(self, levels: ArrayLike, closed: bool = True) -> np.ndarray:
        """First passage times τ_z, shape (n_paths, n_levels)."""
        index = self.passage_index(levels, closed)
        rows = np.arange(self.n_paths)[:, None]
        return self.times[rows, index]

    def jump_counts(self, t: float) -> np.ndarray:
        """Number of jumps in (0, t] per path."""
        return np.array([np.searchsorted(row, t, side='right') - 1 for row in self.times])

    def level_at(self, t: float) -> np.ndarray:
        """S(t) per path."""
        counts = self.jump_counts(t)
        return self.levels[np.arange(self.n_paths), counts]

    def to_paths(self, x: float, horizon: float) -> List[JumpPath]:
        """Convert rows to JumpPath objects restricted to (0, horizon)."""
        paths = []
        for row in range(self.n_paths):
            count = int(np.searchsorted(self.times[row], horizon, side='left')) - 1
            times = self.times[row, 1:count + 1]
            sizes = np.diff(self.levels[row, :count + 1])
            paths.append(JumpPath(x=x, horizon=horizon, jump_times=times, jump_sizes=sizes))
        return paths


@dataclass
class PathEnsemble:
    """Paths sharing start and horizon, with the data needed to reproduce them."""

    paths: List[JumpPath]
    measure_spec: str
    seed: Optional[int]
    eps: Optional[float] = None

    def __post_init__(self):
        if self.paths:
            x, horizon = self.paths[0].x, self.paths[0].horizon
            if any(p.x != x or p.horizon != horizon for p in self.paths):
                raise ValidationError("all paths in an ensemble must share start and horizon")

    def mean_jump_count(self) -> float:
        return float(np.mean([p.n_jumps for p in self.paths])) if self.paths else 0.0

    def to_frame(self) -> pd.DataFrame:
        """Long-format table with columns path_id, s_i, z_i."""
        rows: List[Dict[str, float]] = []
        for path_id, path in enumerate(self.paths):
            rows.extend(path.to_rows(path_id))
        return pd.DataFrame(rows, columns=['path_id', 's_i', 'z_i'])

    def summary(self) -> Dict[str, Any]:
        counts = np.array([p.n_jumps for p in self.paths], dtype=float)
        finals = np.array([p.evaluate(p.horizon) for p in self.paths], dtype=float)
        n = max(len(self.paths), 1)
        return {
            'measure': self.measure_spec,
            'seed': self.seed,
            'eps': self.eps,
            'n_paths': len(self.paths),
            'x': self.paths[0].x if self.paths else None,
            'horizon': self.paths[0].horizon if self.paths else None,
            'mean_jump_count': float(counts.mean()) if counts.size else 0.0,
            'jump_count_std_error': float(counts.std(ddof=1) / math.sqrt(n)) if counts.size > 1 else 0.0,
            'mean_final_position': float(finals.mean()) if finals.size else None,
        }


def simulate_batch(nu: LevyMeasure, n_paths: int, rng: np.random.Generator,
                   level: Optional[float] = None, horizon: Optional[float] = None,
                   closed: bool = True) -> PathBatch:
    """
    Simulate compound Poisson paths until a level is crossed or a horizon passed.

    Jumps are generated in blocks of exponential gaps and ν/‖ν‖ sizes. Each
    path records its jumps up to and including the stopping jump.

    Args:
        nu: Finite measure
        n_paths: Number of paths
        rng: Generator for this batch
        level: Stop at the first crossing of this level
        horizon: Stop at the first jump after this time
        closed: Level crossing convention (S ≥ z when True)

    Returns:
        PathBatch with padded arrays
    """
    if level is None and horizon is None:
        raise ValidationError("simulate_batch needs a level or a horizon")
    rate = nu.total_mass()
    if not math.isfinite(rate):
        raise ValidationError(f"cannot simulate {nu.to_spec()} without truncation")

    zeros = np.zeros((n_paths, 1))
    if rate == 0.0:
        if level is not None:
            raise ValidationError("a measure with zero mass never crosses a level")
        return PathBatch(times=zeros.copy(), levels=zeros.copy(),
                         n_jumps=np.zeros(n_paths, dtype=int))

    time_blocks = [zeros.copy()]
    level_blocks = [zeros.copy()]
    last_t = np.zeros(n_paths)
    last_s = np.zeros(n_paths)
    n_jumps = np.zeros(n_paths, dtype=int)
    active = np.ones(n_paths, dtype=bool)

    if horizon is not None:
        mean = rate * horizon
        block = int(mean + 4.0 * math.sqrt(mean) + 8)
    else:
        block = 16

    while active.any():
        idx = np.flatnonzero(active)
        gaps = rng.exponential(1.0 / rate, size=(idx.size, block))
        jumps = sample_jump(nu, rng, size=(idx.size, block))
        t_new = last_t[idx, None] + np.cumsum(gaps, axis=1)
        s_new = last_s[idx, None] + np.cumsum(jumps, axis=1)

        stop = np.zeros((idx.size, block), dtype=bool)
        if level is not None:
            stop |= (s_new >= level) if closed else (s_new > level)
        if horizon is not None:
            stop |= t_new > horizon
        done = stop.any(axis=1)
        first = np.where(done, stop.argmax(axis=1), block - 1)

        after = np.arange(block)[None, :] > first[:, None]
        t_new[after] = np.inf
        s_new[after] = np.inf

        t_full = np.full((n_paths, block), np.inf)
        s_full = np.full((n_paths, block), np.inf)
        t_full[idx] = t_new
        s_full[idx] = s_new
        time_blocks.append(t_full)
        level_blocks.append(s_full)

        rows = np.arange(idx.size)
        n_jumps[idx] += first + 1
        last_t[idx] = t_new[rows, first]
        last_s[idx] = s_new[rows, first]
        active[idx[done]] = False
        block = min(2 * block, 4096)

    return PathBatch(times=np.hstack(time_blocks), levels=np.hstack(level_blocks), n_jumps=n_jumps)


def sample_path(nu: LevyMeasure, t: float, x: float, rng: np.random.Generator) -> JumpPath:
    """
    Sample one path of Z_x on [0, t].

    Args:
        nu: Finite measure
        t: Horizon (t = 0 gives a path without jumps)
        x: Start
        rng: Seeded generator

    Returns:
        JumpPath with jumps in (0, t)
    """
    if t < 0:
        raise ValidationError(f"horizon must be nonnegative, got {t}")
    if not math.isfinite(nu.total_mass()):
        raise ValidationError(f"sample_path needs a finite measure; truncate {nu.to_spec()} first")
    if t == 0:
        return JumpPath(x=x, horizon=0.0)
    batch = simulate_batch(nu, 1, rng, horizon=t)
    return batch.to_paths(x, t)[0]


def evaluate(path: JumpPath, s: float) -> float:
    """Z_x(s) for 0 ≤ s ≤ t."""
    return path.evaluate(s)


def exit_time(nu: LevyMeasure, x: float, a: float,
              rng: np.random.Generator) -> Tuple[float, JumpPath]:
    """
    Exit time σ_a = inf{t: Z_x(t) ≤ a} and the path up to σ_a.

    Args:
        nu: Finite measure with positive mass
        x: Start
        a: Boundary, a < x
        rng: Seeded generator

    Returns:
        Tuple of (σ_a, path whose horizon is σ_a and whose last jump crosses)
    """
    if not a < x:
        raise ValidationError(f"exit_time needs a < x, got a={a}, x={x}")
    if not math.isfinite(nu.total_mass()):
        raise ValidationError(f"exit_time needs a finite measure; truncate {nu.to_spec()} first")
    batch = simulate_batch(nu, 1, rng, level=x - a, closed=True)
    count = int(batch.n_jumps[0])
    sigma = float(batch.times[0, count])
    path = JumpPath(x=x, horizon=sigma,
                    jump_times=batch.times[0, 1:count + 1],
                    jump_sizes=np.diff(batch.levels[0, :count + 1]))
    return sigma, path


def first_passage_time(nu: LevyMeasure, z: float, rng: np.random.Generator,
                       eps: Optional[float] = None, size: SizeLike = None,
                       closed: bool = True):
    """
    First passage time τ_z = inf{t: S_t ≥ z}.

    StableFractional without an explicit ``eps`` uses the exact law
    τ_z = z^β / (c·S_1^β); otherwise the (truncated) compound Poisson path.

    Args:
        nu: Jump measure
        z: Positive level
        rng: Seeded generator
        eps: Truncation for infinite measures
        size: None for one sample, else number of samples
        closed: Crossing convention for finite measures

    Returns:
        Float or array of passage times
    """
    if not z > 0:
        raise ValidationError(f"passage level must be positive, got {z}")
    n = 1 if size is None else int(np.prod(size))
    if isinstance(nu, StableFractional) and eps is None and GenFracConfig.USE_EXACT_STABLE:
        s1 = sample_stable_increment(nu.beta, 1.0, 1.0, rng, n)
        taus = z ** nu.beta / (nu.c * s1 ** nu.beta)
    else:
        finite, _ = resolve_finite(nu, eps)
        batch = simulate_batch(finite, n, rng, level=z, closed=closed)
        taus = batch.passage_times(z, closed)[:, 0]
    if size is None:
        return float(taus[0])
    return taus.reshape(size)


def empirical_transition(nu: LevyMeasure, t: float, z: float, n_samples: int,
                         seed: SeedLike = None, eps: Optional[float] = None,
                         workers: Optional[int] = None) -> MonteCarloEstimate:
    """
    Monte Carlo estimate of G_(ν)(t, [0, z]) = P(S_t ≤ z).

    Args:
        nu: Jump measure
        t: Time, t ≥ 0
        z: Level, z ≥ 0
        n_samples: Number of paths N
        seed: Master seed
        eps: Truncation for infinite measures
        workers: Thread count

    Returns:
        Estimate with binomial standard error
    """
    if t < 0 or z < 0:
        raise ValidationError("empirical_transition needs t >= 0 and z >= 0")
    if n_samples < 1:
        raise ValidationError("empirical_transition needs N >= 1")
    if t == 0:
        estimate = MonteCarloEstimate(mean=np.array(1.0), std_error=np.array(0.0), n_samples=n_samples)
        estimate.metadata.update({'t': t, 'z': z})
        return estimate

    exact = isinstance(nu, StableFractional) and eps is None and GenFracConfig.USE_EXACT_STABLE
    finite = None if exact else resolve_finite(nu, eps)[0]

    def kernel(rng: np.random.Generator, n: int):
        if exact:
            values = sample_stable_increment(nu.beta, nu.c, t, rng, n)
        else:
            values = simulate_batch(finite, n, rng, horizon=t).level_at(t)
        inside = (values <= z).astype(float)
        return inside.sum(), inside.sum()

    runner = BatchRunner(n_samples, seed, workers=workers, description='transition')
    estimate = runner.run(kernel)
    p = float(estimate.mean)
    estimate.std_error = np.array(math.sqrt(max(p * (1.0 - p), 0.0) / n_samples))
    estimate.metadata.update({'t': t, 'z': z, 'eps': eps, 'seed': seed_value(seed)})
    return estimate


def sample_coupled_paths(nu: LevyMeasure, eps_fine: float, eps_coarse: float,
                         t: float, x: float,
                         rng: np.random.Generator) -> Tuple[JumpPath, JumpPath]:
    """
    Paths of the ε_fine and ε_coarse truncations sharing the jumps ≥ ε_coarse.

    The fine path superposes independent jumps in [ε_fine, ε_coarse) on the
    coarse path, so S^{fine}(s) ≥ S^{coarse}(s) for every s.
    """
    if not 0 < eps_fine < eps_coarse:
        raise ValidationError("need 0 < eps_fine < eps_coarse")
    coarse = sample_path(truncate(nu, eps_coarse), t, x, rng)
    fine_measure = truncate(nu, eps_fine)
    band_rate = nu.tail_mass(eps_fine) - nu.tail_mass(eps_coarse)
    extra_times: List[float] = []
    extra_sizes: List[float] = []
    clock = 0.0
    while band_rate > 0:
        clock += rng.exponential(1.0 / band_rate)
        if clock >= t:
            break
        size = fine_measure.sample_tail(eps_fine, rng)
        while size >= eps_coarse:
            size = fine_measure.sample_tail(eps_fine, rng)
        extra_times.append(clock)
        extra_sizes.append(size)
    times = np.concatenate([coarse.jump_times, np.array(extra_times)])
    sizes = np.concatenate([coarse.jump_sizes, np.array(extra_sizes)])
    order = np.argsort(times, kind='stable')
    fine = JumpPath(x=x, horizon=t, jump_times=times[order], jump_sizes=sizes[order])
    return fine, coarse


def simulate_ensemble(nu: LevyMeasure, t: float, x: float, n_paths: int,
                      seed: SeedLike = None, eps: Optional[float] = None,
                      workers: Optional[int] = None) -> PathEnsemble:
    """
    Sample N paths on [0, t] from x for export.

    Args:
        nu: Jump measure (truncated when infinite)
        t: Horizon
        x: Start
        n_paths: Number of paths
        seed: Master seed
        eps: Truncation cutoff
        workers: Thread count

    Returns:
        PathEnsemble recording (measure, seed, ε)
    """
    finite, eps_used = resolve_finite(nu, eps)
    if t == 0:
        paths = [JumpPath(x=x, horizon=0.0) for _ in range(n_paths)]
        return PathEnsemble(paths=paths, measure_spec=nu.to_spec(), seed=seed_value(seed), eps=eps_used)
    runner = BatchRunner(n_paths, seed, workers=workers, description='paths')
    batches = runner.map(lambda rng, n: simulate_batch(finite, n, rng, horizon=t).to_paths(x, t))
    paths = [path for batch in batches for path in batch]
    logger.info(f"Simulated {len(paths)} paths of {finite.to_spec()} on [0, {t}]")
    return PathEnsemble(paths=paths, measure_spec=nu.to_spec(),
                        seed=seed_value(runner.seed_sequence), eps=eps_used)
