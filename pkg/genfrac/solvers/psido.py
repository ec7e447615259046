"""
Spatially homogeneous pseudo-differential generators on a periodic grid.

The spatial variable w lives on a torus of length L discretized with n points.
A symbol family ψ_t(p) acts on Fourier mode p = 2π·k/L; along a path of Z
the Green function is the inverse DFT of exp(-∫₀^s ψ_{Z(τ)}(p) dτ), and the
boundary problem with source g(t, w) is solved mode by mode:

    f̂(t, p) = E Σ_j e^{-Ψ_j(p)} (1 - e^{-Δ_jψ_j(p)})/ψ_j(p) ĝ(Z_j, p),

summing over the path segments before the exit from (a, ∞).
"""
import logging
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, Optional

import numpy as np
import pandas as pd

from genfrac.errors import ValidationError
from genfrac.measures.levy_measure import LevyMeasure, resolve_finite
from genfrac.numerics.sampling import BatchRunner, SeedLike, seed_value
from genfrac.solvers.homogeneous import passage_time_ensemble, uses_exact_passage
from genfrac.solvers.timedep import _prepare_grid
from genfrac.subordinator_paths import JumpPath, simulate_batch

logger = logging.getLogger(__name__)

BUILTIN_SYMBOLS = ('heat', 'frac_laplace', 'transport')
DISSIPATIVITY_TOLERANCE = 1e-12


@dataclass(eq=False)
class SymbolFamily:
    """Symbols ψ_t(p) on the frequency grid of n points over length L."""

    evaluator: Callable[[np.ndarray, np.ndarray], np.ndarray]
    n: int
    length: float
    name: str = 'custom'
    position_independent: bool = False
    params: Dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        if self.n < 2 or self.length <= 0:
            raise ValidationError("symbol family needs n >= 2 and a positive length")

    @property
    def frequencies(self) -> np.ndarray:
        return 2.0 * np.pi * np.fft.fftfreq(self.n, d=self.length / self.n)

    @property
    def nodes(self) -> np.ndarray:
        return np.arange(self.n) * (self.length / self.n)

    def evaluate(self, positions) -> np.ndarray:
        """ψ at each position for all frequencies, shape (len(positions), n)."""
        positions = np.atleast_1d(np.asarray(positions, dtype=float))
        values = np.asarray(self.evaluator(positions[:, None], self.frequencies[None, :]),
                            dtype=complex)
        return np.broadcast_to(values, (positions.size, self.n))

    def check_dissipative(self, positions=None):
        """
        Require Re ψ ≥ 0 everywhere and Re ψ > 0 wherever Im ψ ≠ 0 off p = 0.

        Purely oscillatory modes are rejected along with growing ones.
        """
        sample_points = np.linspace(-4.0, 4.0, 33) if positions is None else positions
        values = self.evaluate(sample_points)
        if np.any(values.real < -DISSIPATIVITY_TOLERANCE):
            raise ValidationError(f"symbol '{self.name}' is not dissipative: Re psi < 0 "
                                  f"(min {values.real.min():.3g})")
        oscillatory = (np.abs(values.imag) > DISSIPATIVITY_TOLERANCE) & \
                      (values.real <= DISSIPATIVITY_TOLERANCE)
        oscillatory[:, self.frequencies == 0] = False
        if np.any(oscillatory):
            raise ValidationError(f"symbol '{self.name}' has undamped oscillatory modes; "
                                  "add damping so that Re psi > 0")

    def to_dict(self) -> Dict[str, Any]:
        return {'name': self.name, 'n': self.n, 'length': self.length,
                'position_independent': self.position_independent, 'params': self.params}

    @staticmethod
    def heat(n: int, length: float, coef: float = 1.0, coef_low: Optional[float] = None,
             threshold: float = 0.0) -> 'SymbolFamily':
        """ψ_t(p) = coef·p² for t > threshold and coef_low·p² below."""
        low = coef if coef_low is None else coef_low

        def evaluator(t, p):
            return np.where(t > threshold, coef, low) * p ** 2

        return SymbolFamily(evaluator, n, length, name='heat', position_independent=low == coef,
                            params={'coef': coef, 'coef_low': low, 'threshold': threshold})

    @staticmethod
    def frac_laplace(n: int, length: float, alpha: float = 1.5, coef: float = 1.0) -> 'SymbolFamily':
        """ψ(p) = coef·|p|^α."""
        if not 0.0 < alpha <= 2.0:
            raise ValidationError(f"fractional Laplacian order must be in (0, 2], got {alpha}")
        return SymbolFamily(lambda t, p: coef * np.abs(p) ** alpha + 0.0 * t, n, length,
                            name='frac_laplace', position_independent=True,
                            params={'alpha': alpha, 'coef': coef})

    @staticmethod
    def transport(n: int, length: float, c: float = 1.0, damping: float = 0.0) -> 'SymbolFamily':
        """ψ(p) = i·c·p + damping·p²."""
        return SymbolFamily(lambda t, p: 1j * c * p + damping * p ** 2 + 0.0 * t, n, length,
                            name='transport', position_independent=True,
                            params={'c': c, 'damping': damping})

    @staticmethod
    def from_builtin(name: str, n: int, length: float, **params) -> 'SymbolFamily':
        if name not in BUILTIN_SYMBOLS:
            raise ValidationError(f"unknown symbol '{name}', expected one of {BUILTIN_SYMBOLS}")
        return getattr(SymbolFamily, name)(n, length, **params)


def _phi(psi: np.ndarray, duration) -> np.ndarray:
    """(1 - e^{-Δψ})/ψ with the limit Δ at ψ = 0."""
    duration = np.asarray(duration, dtype=float)
    dpsi = duration * psi
    small = np.abs(dpsi) < 1e-12
    safe = np.where(small, 1.0, psi)
    return np.where(small, duration * (1.0 - 0.5 * dpsi), -np.expm1(-dpsi) / safe)


def green_along_path(path: JumpPath, symbols: SymbolFamily, s: float) -> np.ndarray:
    """
    Periodic Green function G_{s,0}(w) along a path, a complex vector of length n.

    The exponent ∫₀^s ψ_{Z(τ)}(p) dτ is summed exactly over constant segments.
    """
    if not 0 <= s <= path.horizon:
        raise ValidationError(f"time {s} outside [0, {path.horizon}]")
    exponent = np.zeros(symbols.n, dtype=complex)
    for start, end, position in path.segments(0.0, s):
        exponent += (end - start) * symbols.evaluate([position])[0]
    return np.fft.ifft(np.exp(-exponent))


@dataclass
class PsidoSolution:
    """Field estimate f(t, w) with Fourier-mode means and standard errors."""

    t_grid: np.ndarray
    nodes: np.ndarray
    values: np.ndarray
    std_error: np.ndarray
    modes: np.ndarray
    mode_std_error: np.ndarray
    metadata: Dict[str, Any] = field(default_factory=dict)

    def to_frame(self, std_error: bool = False) -> pd.DataFrame:
        """Field (or its standard error) as a matrix: one row per t, one column per node."""
        data = self.std_error if std_error else self.values
        frame = pd.DataFrame(data, columns=[f'w_{j}' for j in range(self.nodes.size)])
        frame.insert(0, 't', self.t_grid)
        return frame

    def mode_frequencies(self) -> np.ndarray:
        n = self.nodes.size
        length = n * (self.nodes[1] - self.nodes[0])
        return 2.0 * np.pi * np.fft.fftfreq(n, d=length / n)


def _source_modes(source, symbols: SymbolFamily, positions: np.ndarray) -> np.ndarray:
    """ĝ(position, p) for each position, shape (len(positions), n)."""
    w = symbols.nodes
    if not callable(source):
        profile = np.broadcast_to(np.asarray(source, dtype=float), (symbols.n,))
        return np.broadcast_to(np.fft.fft(profile), (positions.size, symbols.n))
    rows = [np.broadcast_to(np.asarray(source(float(t), w), dtype=complex), (symbols.n,))
            for t in positions]
    return np.fft.fft(np.array(rows).reshape(positions.size, symbols.n), axis=1)


def solve_psido(nu: LevyMeasure, symbols: SymbolFamily, source, a: float, t_grid,
                n_samples: int = 10000, eps: Optional[float] = None, seed: SeedLike = None,
                workers: Optional[int] = None) -> PsidoSolution:
    """
    f = R_0 g for the ΨDO generator, killed at t = a, by Monte Carlo per mode.

    Args:
        nu: Jump measure
        symbols: Dissipative symbol family
        source: g(t, w) callable, an array profile h(w) (time independent) or None
        a: Boundary in t
        t_grid: Times t ≥ a; a is prepended when missing
        n_samples: Paths N
        eps: Truncation for infinite measures
        seed: Master seed
        workers: Thread count

    Returns:
        PsidoSolution with field and mode estimates on (t_grid, nodes)
    """
    symbols.check_dissipative()
    t_grid = _prepare_grid(t_grid, a)
    n = symbols.n
    levels = t_grid[1:] - a
    shape = (t_grid.size, n)
    field_mean = np.zeros(shape)
    field_err = np.zeros(shape)
    mode_mean = np.zeros(shape, dtype=complex)
    mode_err = np.zeros(shape)
    metadata: Dict[str, Any] = {'problem': 'solve_psido', 'measure': nu.to_spec(),
                                'symbols': symbols.to_dict(), 'a': a, 'n_samples': n_samples}
    if source is None or levels.size == 0:
        metadata['eps'] = eps
        return PsidoSolution(t_grid, symbols.nodes, field_mean, field_err, mode_mean, mode_err,
                             metadata)

    # symbol and source constant in t: only the exit time matters per mode
    fast = symbols.position_independent and not callable(source)
    if fast and uses_exact_passage(nu, eps):
        finite, eps_used = nu, None
    else:
        finite, eps_used = resolve_finite(nu, eps)

    def accumulate(spectra: np.ndarray):
        fields = np.fft.ifft(spectra, axis=-1).real
        return (spectra.sum(axis=0), (np.abs(spectra) ** 2).sum(axis=0),
                fields.sum(axis=0), np.square(fields).sum(axis=0))

    def kernel(rng: np.random.Generator, count: int):
        if fast:
            psi = symbols.evaluate([0.0])[0]
            g_hat = _source_modes(source, symbols, np.zeros(1))[0]
            sigma = passage_time_ensemble(finite, levels, rng, count, eps_used)
            return accumulate(g_hat * _phi(psi[None, None, :], sigma[:, :, None]))
        spectra = np.zeros((count, levels.size, n), dtype=complex)
        batch = simulate_batch(finite, count, rng, level=float(levels.max()), closed=True)
        crossing = batch.passage_index(levels, closed=True)
        for i, t in enumerate(t_grid[1:]):
            exponent = np.zeros((count, n), dtype=complex)
            for j in range(int(crossing[:, i].max())):
                rows = np.flatnonzero(crossing[:, i] > j)
                positions = t - batch.levels[rows, j]
                durations = batch.times[rows, j + 1] - batch.times[rows, j]
                psi = symbols.evaluate(positions)
                g_hat = _source_modes(source, symbols, positions)
                spectra[rows, i] += np.exp(-exponent[rows]) * _phi(psi, durations[:, None]) * g_hat
                exponent[rows] += durations[:, None] * psi
        return accumulate(spectra)

    runner = BatchRunner(n_samples, seed, workers=workers, description='psido')
    results = runner.map(kernel)
    sums = [sum(r[k] for r in results) for k in range(4)]
    mode_mean[1:] = sums[0] / n_samples
    field_mean[1:] = sums[2] / n_samples
    if n_samples > 1:
        mode_var = (sums[1] - n_samples * np.abs(mode_mean[1:]) ** 2) / (n_samples - 1)
        field_var = (sums[3] - n_samples * field_mean[1:] ** 2) / (n_samples - 1)
        mode_err[1:] = np.sqrt(np.maximum(mode_var, 0.0) / n_samples)
        field_err[1:] = np.sqrt(np.maximum(field_var, 0.0) / n_samples)
    metadata.update({'eps': eps_used, 'seed': seed_value(runner.seed_sequence)})
    logger.info(f"solve_psido on {t_grid.size} times x {n} modes with N={n_samples}, eps={eps_used}")
    return PsidoSolution(t_grid, symbols.nodes, field_mean, field_err, mode_mean, mode_err, metadata)


def parseval_check(field_values: np.ndarray) -> float:
    """Relative gap between Σ|f|² and Σ|f̂|²/n for each row, maximum over rows."""
    values = np.atleast_2d(np.asarray(field_values))
    physical = np.sum(np.abs(values) ** 2, axis=-1)
    spectral = np.sum(np.abs(np.fft.fft(values, axis=-1)) ** 2, axis=-1) / values.shape[-1]
    scale = np.maximum(physical, np.finfo(float).tiny)
    return float(np.max(np.abs(physical - spectral) / scale))
