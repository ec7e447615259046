"""
    --- AUTO-GENERATED DOCSTRING ---
    Table of content is automatically generated by Agent Docstrings v1.3.5

    Classes/Functions:
        - MLValue (line 56):
            - to_dict() -> Dict[str, Any] (line 65)
        - classical_ml(beta: float, s) (line 165)
        - classical_ml_derivative(beta: float, s) (line 187)
        - series_order(lower_bound: Tuple[float, float], z: float, scale: float) -> int (line 197)
        - gen_ml_scalar(nu: LevyMeasure, z: float, lam: float, method: str = 'first_passage', n_samples: int = 100000, eps: Optional[float] = None, seed: SeedLike = None, workers: Optional[int] = None, lower_bound: Optional[Tuple[float, float]] = None, nodes: int = 24) -> MLValue (line 238)
        - gen_ml_operator(nu: LevyMeasure, z: float, generator, method: str = 'first_passage', n_samples: int = 100000, eps: Optional[float] = None, seed: SeedLike = None, workers: Optional[int] = None, lower_bound: Optional[Tuple[float, float]] = None) -> MLValue (line 324)
        - ml_operator_bound(nu: LevyMeasure, z: float, generator, lower_bound: Optional[Tuple[float, float]] = None) -> float (line 392)
    --- END AUTO-GENERATED DOCSTRING ---

Classical and generalized Mittag-Leffler functions.

The generalized family is evaluated through the first-passage law of the
subordinator,

    E_(ν),z(-λ) = E[e^{-λτ_z}],    E_(ν),z(A) = E[e^{τ_z A}],

which follows from {S_t ≤ z} = {τ_z > t} for nondecreasing paths. For ν =
c·ν_β this is E_β(-λ z^β / c). The series form Σ (-λ)^k [(I^(ν)_0)^k 1](z)
needs a lower bound ν ≥ C·ν_β, whose majorant (|λ|/C)^k z^{kβ}/Γ(1+kβ)
controls the truncation.
"""
import logging
import math
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

import numpy as np
from scipy import special

from genfrac.config import GenFracConfig
from genfrac.errors import NumericalGuardError, ValidationError
from genfrac.measures.levy_measure import LevyMeasure, StableFractional, resolve_finite
from genfrac.numerics.matrix_exp import MatrixGenerator, exp_scaled
from genfrac.numerics.quadrature import gauss_laguerre, quad, quad_power_singular
from genfrac.numerics.sampling import BatchRunner, SeedLike, as_seed_sequence, seed_value
from genfrac.potential import iterated_potentials
from genfrac.subordinator_paths import empirical_transition, first_passage_time

logger = logging.getLogger(__name__)

SCALAR_METHODS = ('first_passage', 'series', 'quadrature')
OPERATOR_METHODS = ('first_passage', 'series')

_LOG_MAX = math.log(np.finfo(float).max)
# |s|^{1/β} below this keeps the alternating series free of cancellation
_SERIES_REACH = 5.0


@dataclass
class MLValue:
    """Generalized Mittag-Leffler value (scalar or matrix) with its method."""

    value: Any
    method: str
    std_error: Any = 0.0
    params: Dict[str, Any] = field(default_factory=dict)
    flags: List[str] = field(default_factory=list)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'value': np.real_if_close(np.asarray(self.value)).tolist(),
            'method': self.method,
            'std_error': np.asarray(self.std_error).tolist(),
            'params': self.params,
            'flags': list(self.flags),
        }


def _check_order(beta: float):
    if not 0.0 < beta <= 1.0:
        raise ValidationError(f"Mittag-Leffler index must lie in (0, 1], got {beta}")


def _positive_log_series(beta: float, log_s: float, shift: int = 0) -> float:
    """log Σ_k (k+1)^shift · s^k / Γ(1 + β(k + shift)) for s > 0."""
    reach = math.exp(log_s / beta)
    terms = int(2.0 * reach / beta + 60)
    if terms > 200000:
        raise NumericalGuardError("Mittag-Leffler argument too large for the series")
    k = np.arange(terms, dtype=float)
    logs = k * log_s - special.gammaln(1.0 + beta * (k + shift))
    if shift:
        logs = logs + np.log(k + 1.0)
    peak = logs.max()
    return float(peak + math.log(np.exp(logs - peak).sum()))


def _alternating_series(beta: float, s: complex, shift: int = 0) -> complex:
    k = np.arange(300, dtype=float)
    with np.errstate(divide='ignore'):
        logs = k * np.log(abs(s)) - special.gammaln(1.0 + beta * (k + shift))
    if shift:
        logs = logs + np.log(k + 1.0)
    phase = np.exp(1j * np.angle(s) * k) if np.iscomplexobj(s) else np.sign(s) ** k
    return np.sum(phase * np.exp(logs))


def _negative_integral(beta: float, x: float, derivative: bool = False) -> float:
    """
    Complete-monotone representation of E_β(-x), or of E_β'(-x), for x > 0.
    """
    rate = x ** (1.0 / beta)
    cos_term = math.cos(beta * math.pi)

    def denominator(r: float) -> float:
        rb = r ** beta
        return rb * rb + 2.0 * rb * cos_term + 1.0

    if derivative:
        def near(r: float) -> float:
            return math.exp(-r * rate) / denominator(r)

        def far(r: float) -> float:
            return r ** beta * math.exp(-r * rate) / denominator(r)

        value = quad_power_singular(near, beta, 1.0)[0] + quad(far, 1.0, np.inf)[0]
        scale = x ** (1.0 / beta - 1.0) / beta
    else:
        def near(r: float) -> float:
            return math.exp(-r * rate) / denominator(r)

        def far(r: float) -> float:
            return r ** (beta - 1.0) * math.exp(-r * rate) / denominator(r)

        value = quad_power_singular(near, beta - 1.0, 1.0)[0] + quad(far, 1.0, np.inf)[0]
        scale = 1.0
    return math.sin(beta * math.pi) / math.pi * scale * value


def _ml_scalar(beta: float, s, derivative: bool = False):
    if isinstance(s, complex) and s.imag != 0.0:
        if abs(s) ** (1.0 / beta) > 25.0:
            raise NumericalGuardError(
                f"complex Mittag-Leffler argument |s|={abs(s):.3g} is outside the series range")
        return complex(_alternating_series(beta, s, shift=int(derivative)))
    s = float(np.real(s))
    if s == 0.0:
        return 1.0 / special.gamma(1.0 + beta) if derivative else 1.0
    if beta == 1.0:
        if s > _LOG_MAX:
            raise NumericalGuardError(f"E_1({s}) overflows")
        return math.exp(s)
    if beta == 0.5:
        base = special.erfcx(-s)
        value = 2.0 * s * base + 2.0 / math.sqrt(math.pi) if derivative else base
        if not math.isfinite(value):
            raise NumericalGuardError(f"E_0.5({s}) overflows")
        return float(value)
    if s > 0.0:
        log_value = _positive_log_series(beta, math.log(s), shift=int(derivative))
        if log_value > _LOG_MAX:
            raise NumericalGuardError(f"E_{beta}({s}) overflows")
        return math.exp(log_value)
    if (-s) ** (1.0 / beta) <= _SERIES_REACH:
        return float(np.real(_alternating_series(beta, s, shift=int(derivative))))
    return _negative_integral(beta, -s, derivative)


def classical_ml(beta: float, s):
    """
    Classical Mittag-Leffler function E_β(s) = Σ s^k / Γ(1 + βk).

    Args:
        beta: Index β ∈ (0, 1]
        s: Real or complex scalar or array

    Returns:
        E_β(s) with the shape of ``s``

    Raises:
        NumericalGuardError: When the value overflows
    """
    _check_order(beta)
    arr = np.asarray(s)
    if arr.ndim == 0:
        return _ml_scalar(beta, arr.item())
    otype = complex if np.iscomplexobj(arr) else float
    return np.vectorize(lambda v: _ml_scalar(beta, v), otypes=[otype])(arr)


def classical_ml_derivative(beta: float, s):
    """d/ds E_β(s) = Σ_{k≥0} (k+1) s^k / Γ(1 + β(k+1))."""
    _check_order(beta)
    arr = np.asarray(s)
    if arr.ndim == 0:
        return _ml_scalar(beta, arr.item(), derivative=True)
    otype = complex if np.iscomplexobj(arr) else float
    return np.vectorize(lambda v: _ml_scalar(beta, v, derivative=True), otypes=[otype])(arr)


def series_order(lower_bound: Tuple[float, float], z: float, scale: float) -> int:
    """Smallest K whose majorant tail is below GENFRAC_SERIES_TOL."""
    beta, c = lower_bound
    if scale == 0.0:
        return 0
    log_ratio = math.log(scale / c) + beta * math.log(z)
    previous = math.inf
    for k in range(1, GenFracConfig.SERIES_CAP + 1):
        log_term = k * log_ratio - special.gammaln(1.0 + k * beta)
        if log_term < previous and log_term < math.log(GenFracConfig.SERIES_TOL):
            # geometric tail past the peak: next ratio bounds the rest
            nxt = (k + 1) * log_ratio - special.gammaln(1.0 + (k + 1) * beta)
            q = math.exp(nxt - log_term)
            if q < 0.5:
                return k
        previous = log_term
    raise NumericalGuardError(
        f"Mittag-Leffler series needs more than {GenFracConfig.SERIES_CAP} terms "
        f"for |argument|={scale:g}, z={z:g}")


def _resolve_lower_bound(nu: LevyMeasure,
                         lower_bound: Optional[Tuple[float, float]]) -> Tuple[float, float]:
    bound = lower_bound or nu.fractional_lower_bound()
    if bound is None:
        raise ValidationError(
            f"the series method needs a fractional lower bound nu >= C*nu_beta; "
            f"none is known for {nu.to_spec()}, pass lower_bound=(beta, C)")
    beta, c = bound
    if not (0.0 < beta < 1.0 and c > 0.0):
        raise ValidationError(f"invalid fractional lower bound {bound}")
    return float(beta), float(c)


def _passage_sampler(nu: LevyMeasure, eps: Optional[float]):
    """Return (measure to sample, eps used) following the exact-stable rule."""
    if isinstance(nu, StableFractional) and eps is None and GenFracConfig.USE_EXACT_STABLE:
        return nu, None
    return resolve_finite(nu, eps)


def gen_ml_scalar(nu: LevyMeasure, z: float, lam: float, method: str = 'first_passage',
                  n_samples: int = 100000, eps: Optional[float] = None,
                  seed: SeedLike = None, workers: Optional[int] = None,
                  lower_bound: Optional[Tuple[float, float]] = None,
                  nodes: int = 24) -> MLValue:
    """
    Generalized Mittag-Leffler value E_(ν),z(-λ).

    Args:
        nu: Jump measure
        z: Level z > 0
        lam: λ (real; negative values only for first_passage and series)
        method: 'first_passage', 'series' or 'quadrature'
        n_samples: Paths (per quadrature node for 'quadrature')
        eps: Truncation for infinite measures
        seed: Master seed
        workers: Thread count
        lower_bound: Declared (β, C) with ν ≥ C·ν_β for the series
        nodes: Gauss-Laguerre nodes for 'quadrature'

    Returns:
        MLValue with scalar value
    """
    if not z > 0:
        raise ValidationError(f"Mittag-Leffler level z must be positive, got {z}")
    if method not in SCALAR_METHODS:
        raise ValidationError(f"unknown method '{method}', expected one of {SCALAR_METHODS}")
    params: Dict[str, Any] = {'measure': nu.to_spec(), 'z': z, 'lambda': lam}
    if lam == 0.0:
        return MLValue(value=1.0, method=method, params=params)

    if method == 'series':
        bound = _resolve_lower_bound(nu, lower_bound)
        order = series_order(bound, z, abs(lam))
        iterates = iterated_potentials(nu, z, order)
        value = float(np.sum(np.power(-lam, np.arange(order + 1)) * iterates))
        params['terms'] = order + 1
        return MLValue(value=value, method='series', params=params)

    if method == 'quadrature':
        if lam < 0:
            raise ValidationError("the quadrature method needs lambda > 0")
        u, w = gauss_laguerre(nodes)
        children = as_seed_sequence(seed).spawn(nodes)
        probs = np.empty(nodes)
        errors = np.empty(nodes)
        for i, (node, child) in enumerate(zip(u, children)):
            estimate = empirical_transition(nu, node / lam, z, n_samples, seed=child,
                                            eps=eps, workers=workers)
            probs[i] = float(estimate.mean)
            errors[i] = float(estimate.std_error)
        value = 1.0 - float(np.dot(w, probs))
        std_error = float(np.sqrt(np.dot(w ** 2, errors ** 2)))
        params.update({'n_samples': n_samples, 'nodes': nodes, 'eps': eps})
        return MLValue(value=value, method='quadrature', std_error=std_error, params=params)

    flags: List[str] = []
    if lam < 0:
        logger.warning(f"first-passage estimate of E(-lambda) with lambda={lam} < 0 "
                       "has unbounded variance in general")
        flags.append('variance_caveat')
    sampler, eps_used = _passage_sampler(nu, eps)

    def kernel(rng: np.random.Generator, n: int):
        taus = first_passage_time(sampler, z, rng, eps=eps_used, size=n, closed=False)
        values = np.exp(-lam * taus)
        return values.sum(), np.square(values).sum()

    runner = BatchRunner(n_samples, seed, workers=workers, description='mittag-leffler')
    estimate = runner.run(kernel)
    if not np.isfinite(estimate.mean):
        raise NumericalGuardError("first-passage Mittag-Leffler estimate overflowed")
    params.update({'n_samples': n_samples, 'eps': eps_used,
                   'seed': seed_value(runner.seed_sequence)})
    if eps_used is not None:
        flags.append('truncated')
    return MLValue(value=float(estimate.mean), method='first_passage',
                   std_error=float(estimate.std_error), params=params, flags=flags)


def _as_generator(generator) -> MatrixGenerator:
    if isinstance(generator, MatrixGenerator):
        return generator
    return MatrixGenerator.from_matrix(generator)


def gen_ml_operator(nu: LevyMeasure, z: float, generator, method: str = 'first_passage',
                    n_samples: int = 100000, eps: Optional[float] = None,
                    seed: SeedLike = None, workers: Optional[int] = None,
                    lower_bound: Optional[Tuple[float, float]] = None) -> MLValue:
    """
    Operator-valued E_(ν),z(A) = E[exp(τ_z A)].

    Args:
        nu: Jump measure
        z: Level z ≥ 0 (z = 0 gives the identity)
        generator: MatrixGenerator or square array
        method: 'first_passage' or 'series'
        n_samples: Paths
        eps: Truncation for infinite measures
        seed: Master seed
        workers: Thread count
        lower_bound: Declared (β, C) for the series

    Returns:
        MLValue with a d×d matrix value and entrywise standard errors
    """
    gen = _as_generator(generator)
    d = gen.dimension
    if z < 0:
        raise ValidationError(f"Mittag-Leffler level z must be nonnegative, got {z}")
    if method not in OPERATOR_METHODS:
        raise ValidationError(f"unknown method '{method}', expected one of {OPERATOR_METHODS}")
    params: Dict[str, Any] = {'measure': nu.to_spec(), 'z': z, 'generator': gen.to_dict()}
    identity = np.eye(d, dtype=gen.matrix.dtype)
    if z == 0 or not np.any(gen.matrix):
        return MLValue(value=identity, method=method, std_error=np.zeros((d, d)), params=params)

    if method == 'series':
        bound = _resolve_lower_bound(nu, lower_bound)
        order = series_order(bound, z, float(np.linalg.norm(gen.matrix, 2)))
        iterates = iterated_potentials(nu, z, order)
        value = np.zeros((d, d), dtype=gen.matrix.dtype)
        power = identity.copy()
        for k in range(order + 1):
            value = value + iterates[k] * power
            power = power @ gen.matrix
        params['terms'] = order + 1
        return MLValue(value=value, method='series', std_error=np.zeros((d, d)), params=params)

    flags: List[str] = []
    if not gen.contraction:
        logger.warning(f"generator is not a contraction (m={gen.growth_bound:.3g}); "
                       "first-passage variance grows like e^(m tau)")
        flags.append('out_of_theorem')
    sampler, eps_used = _passage_sampler(nu, eps)

    def kernel(rng: np.random.Generator, n: int):
        taus = first_passage_time(sampler, z, rng, eps=eps_used, size=n, closed=False)
        mats = exp_scaled(gen.matrix, taus)
        return mats.sum(axis=0), (np.abs(mats) ** 2).sum(axis=0)

    runner = BatchRunner(n_samples, seed, workers=workers, description='mittag-leffler')
    estimate = runner.run(kernel)
    if not np.all(np.isfinite(estimate.mean)):
        raise NumericalGuardError("first-passage operator estimate overflowed")
    params.update({'n_samples': n_samples, 'eps': eps_used,
                   'seed': seed_value(runner.seed_sequence)})
    if eps_used is not None:
        flags.append('truncated')
    return MLValue(value=np.asarray(estimate.mean), method='first_passage',
                   std_error=np.asarray(estimate.std_error), params=params, flags=flags)


def ml_operator_bound(nu: LevyMeasure, z: float, generator,
                      lower_bound: Optional[Tuple[float, float]] = None) -> float:
    """
    Norm bound ‖E_(ν),z(A)‖ ≤ M·E_β(m z^β / C) for growth type (M, m).

    For a general ν ≥ C·ν_β the comparison only applies to m ≥ 0, so negative
    m is clipped to zero unless ν is itself stable.
    """
    gen = _as_generator(generator)
    if isinstance(nu, StableFractional) and lower_bound is None:
        return gen.growth_constant * float(
            classical_ml(nu.beta, gen.growth_bound * z ** nu.beta / nu.c))
    beta, c = _resolve_lower_bound(nu, lower_bound)
    m = max(gen.growth_bound, 0.0)
    return gen.growth_constant * float(classical_ml(beta, m * z ** beta / c))
