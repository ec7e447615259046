"""
    --- AUTO-GENERATED DOCSTRING ---
    Table of content is automatically generated by Agent Docstrings v1.3.5

    Classes/Functions:
        - LevyMeasure (line 91):
            - is_finite() -> bool (line 94)
            - total_mass() -> float (line 98)
            - tail_mass(y: float) -> float (line 103)
            - interval_mass(lower: float, upper: float) -> float (line 106)
            - interval_moment(lower: float, upper: float) -> float (line 113)
            - small_jump_mean(eps: float) -> float (line 116)
            - levy_condition_integral() -> float (line 120)
            - laplace_exponent(lam: ArrayLike) -> ArrayLike (line 125)
            - integrate(func: Callable[[float], float], lower: float = 0.0, upper: float = np.inf) -> float (line 129)
            - sample_tail(eps: float, rng: np.random.Generator, size: SizeLike = None) (line 134)
            - truncate(eps: float) -> 'LevyMeasure' (line 138)
            - fractional_lower_bound() -> Optional[Tuple[float, float]] (line 141)
            - to_spec() -> str (line 146)
        - StableFractional (line 201):
        - TemperedStable (line 247):
        - FiniteDiscrete (line 317):
        - StableMixture (line 377):
        - Truncated (line 435):
        - Sum (line 483):
        - levy_condition_integral(nu: LevyMeasure) -> float (line 534)
        - laplace_exponent(nu: LevyMeasure, lam: ArrayLike) -> ArrayLike (line 557)
        - total_mass(nu: LevyMeasure) -> float (line 570)
        - tail_mass(nu: LevyMeasure, y: float) -> float (line 575)
        - small_jump_mean(nu: LevyMeasure, eps: float) -> float (line 580)
        - truncate(nu: LevyMeasure, eps: float) -> LevyMeasure (line 585)
        - sample_jump(nu: LevyMeasure, rng: np.random.Generator, size: SizeLike = None) (line 592)
        - default_truncation(nu: LevyMeasure, tol: Optional[float] = None) -> float (line 613)
        - resolve_finite(nu: LevyMeasure, eps: Optional[float] = None) -> Tuple[LevyMeasure, Optional[float]] (line 641)
        - sample_stable_increment(beta: float, c: float, t: ArrayLike, rng: np.random.Generator, size: SizeLike = None) (line 663)
    --- END AUTO-GENERATED DOCSTRING ---

Jump measures ν on (0, ∞) for generalized fractional derivatives.

Every variant exposes the analytic functionals the solvers need: Laplace
exponent, tails ν([y, ∞)), first moments over intervals and the one-sided Lévy
integral ∫ min(1, y) ν(dy). The stable normalization is fixed so that
``StableFractional(beta, c)`` has density ``c * (-1/Γ(-β)) * y**(-1-β)`` and
Laplace exponent ``c * λ**β``.

Intervals are half-open, [lower, upper), so an atom sitting exactly at a
cutoff belongs to the upper piece.
"""
import logging
import math
from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Callable, Optional, Tuple, Union

import numpy as np
from scipy import optimize, special

from genfrac.config import GenFracConfig
from genfrac.errors import InvalidMeasureError, ValidationError
from genfrac.numerics.quadrature import quad, quad_power_singular

logger = logging.getLogger(__name__)

ArrayLike = Union[float, np.ndarray]
SizeLike = Union[None, int, Tuple[int, ...]]


def _draw_count(size: SizeLike) -> int:
    if size is None:
        return 1
    return int(np.prod(size))


def _shape_output(samples: np.ndarray, size: SizeLike):
    if size is None:
        return float(samples[0])
    return samples.reshape(size)


def _ratio_at_origin(func: Callable[[float], float]) -> Callable[[float], float]:
    """Return y -> func(y)/y, continued to the origin by its limit."""
    tiny = 1e-12
    slope0 = func(tiny) / tiny

    def ratio(y: float) -> float:
        return func(y) / y if y > 0 else slope0

    return ratio


class LevyMeasure(ABC):
    """Positive measure on (0, ∞) satisfying ∫ min(1, y) ν(dy) < ∞."""

    def is_finite(self) -> bool:
        """Whether ν((0, ∞)) is finite."""
        return math.isfinite(self.total_mass())

    def total_mass(self) -> float:
        """ν((0, ∞)); ``inf`` for infinite-activity measures."""
        return self.tail_mass(0.0)

    @abstractmethod
    def tail_mass(self, y: float) -> float:
        """ν([y, ∞))."""

    def interval_mass(self, lower: float, upper: float) -> float:
        """ν([lower, upper))."""
        if upper <= lower:
            return 0.0
        return self.tail_mass(lower) - self.tail_mass(upper)

    @abstractmethod
    def interval_moment(self, lower: float, upper: float) -> float:
        """∫_[lower, upper) y ν(dy)."""

    def small_jump_mean(self, eps: float) -> float:
        """∫_(0, eps) y ν(dy), the drift dropped by truncation at eps."""
        return self.interval_moment(0.0, eps)

    def levy_condition_integral(self) -> float:
        """∫ min(1, y) ν(dy)."""
        return self.interval_moment(0.0, 1.0) + self.tail_mass(1.0)

    @abstractmethod
    def laplace_exponent(self, lam: ArrayLike) -> ArrayLike:
        """φ(λ) = ∫ (1 - e^{-λy}) ν(dy)."""

    @abstractmethod
    def integrate(self, func: Callable[[float], float],
                  lower: float = 0.0, upper: float = np.inf) -> float:
        """∫_[lower, upper) func dν; func must vanish linearly at 0 if lower == 0."""

    @abstractmethod
    def sample_tail(self, eps: float, rng: np.random.Generator, size: SizeLike = None):
        """Sample from ν restricted to [eps, ∞), normalized."""

    @abstractmethod
    def truncate(self, eps: float) -> 'LevyMeasure':
        """ν restricted to [eps, ∞)."""

    def fractional_lower_bound(self) -> Optional[Tuple[float, float]]:
        """(β, C) with ν ≥ C·ν_β, if such a bound is known."""
        return None

    @abstractmethod
    def to_spec(self) -> str:
        """Textual specification understood by :func:`parse_measure`."""

    def _sample(self, rng: np.random.Generator, size: SizeLike = None):
        return self.sample_tail(0.0, rng, size)

    def __str__(self) -> str:
        return self.to_spec()


class _PowerLawDensity(LevyMeasure):
    """Shared quadrature for densities k * y**(-1-β) * h(y) with smooth h."""

    beta: float

    @property
    def _k(self) -> float:
        raise NotImplementedError

    def _smooth(self, y: float) -> float:
        return 1.0

    def density(self, y: ArrayLike) -> ArrayLike:
        """Density of ν with respect to Lebesgue measure."""
        y = np.asarray(y, dtype=float)
        with np.errstate(divide='ignore'):
            return self._k * np.power(y, -1.0 - self.beta) * np.vectorize(self._smooth)(y)

    def integrate(self, func: Callable[[float], float],
                  lower: float = 0.0, upper: float = np.inf) -> float:
        if upper <= lower:
            return 0.0
        total = 0.0
        if lower == 0.0:
            ratio = _ratio_at_origin(func)
            split = min(1.0, upper)
            value, _ = quad_power_singular(
                lambda y: self._k * ratio(y) * self._smooth(y), -self.beta, split)
            total += value
            lower = split
        if upper > lower:
            def integrand(y: float) -> float:
                return func(y) * self._k * y ** (-1.0 - self.beta) * self._smooth(y)

            if lower < 1.0 < upper:
                total += quad(integrand, lower, 1.0)[0] + quad(integrand, 1.0, upper)[0]
            else:
                total += quad(integrand, lower, upper)[0]
        return total

    def truncate(self, eps: float) -> LevyMeasure:
        return Truncated(self, eps)


@dataclass(frozen=True)
class StableFractional(_PowerLawDensity):
    """Density c·(-1/Γ(-β))·y^(-1-β); the Laplace exponent is c·λ^β."""

    beta: float
    c: float = 1.0

    def __post_init__(self):
        if not 0.0 < self.beta < 1.0:
            raise InvalidMeasureError(f"stable order beta must lie in (0, 1), got {self.beta}")
        if not self.c > 0.0:
            raise InvalidMeasureError(f"stable scale c must be positive, got {self.c}")

    @property
    def _k(self) -> float:
        return self.c * self.beta / special.gamma(1.0 - self.beta)

    def tail_mass(self, y: float) -> float:
        if y <= 0.0:
            return math.inf
        return self.c * y ** (-self.beta) / special.gamma(1.0 - self.beta)

    def interval_moment(self, lower: float, upper: float) -> float:
        if upper <= lower:
            return 0.0
        if math.isinf(upper):
            return math.inf
        lower = max(lower, 0.0)
        return self._k * (upper ** (1.0 - self.beta) - lower ** (1.0 - self.beta)) / (1.0 - self.beta)

    def laplace_exponent(self, lam: ArrayLike) -> ArrayLike:
        return self.c * np.power(lam, self.beta)

    def sample_tail(self, eps: float, rng: np.random.Generator, size: SizeLike = None):
        if eps <= 0.0:
            raise ValidationError("cannot sample an infinite measure without truncation")
        u = 1.0 - rng.random(_draw_count(size))
        return _shape_output(eps * u ** (-1.0 / self.beta), size)

    def fractional_lower_bound(self) -> Optional[Tuple[float, float]]:
        return self.beta, self.c

    def to_spec(self) -> str:
        return f"stable(beta={self.beta!r},c={self.c!r})"


@dataclass(frozen=True)
class TemperedStable(_PowerLawDensity):
    """Stable density damped by e^(-θy); Laplace exponent c((λ+θ)^β - θ^β)."""

    beta: float
    theta: float = 0.0
    c: float = 1.0

    def __post_init__(self):
        if not 0.0 < self.beta < 1.0:
            raise InvalidMeasureError(f"tempered order beta must lie in (0, 1), got {self.beta}")
        if self.theta < 0.0:
            raise InvalidMeasureError(f"tempering theta must be nonnegative, got {self.theta}")
        if not self.c > 0.0:
            raise InvalidMeasureError(f"tempered scale c must be positive, got {self.c}")

    @property
    def _k(self) -> float:
        return self.c * self.beta / special.gamma(1.0 - self.beta)

    def _smooth(self, y: float) -> float:
        return math.exp(-self.theta * y)

    def tail_mass(self, y: float) -> float:
        if y <= 0.0:
            return math.inf
        if math.isinf(y):
            return 0.0
        g = special.gamma(1.0 - self.beta)
        value = y ** (-self.beta) * math.exp(-self.theta * y) / g
        if self.theta > 0.0:
            value -= self.theta ** self.beta * special.gammaincc(1.0 - self.beta, self.theta * y)
        return self.c * value

    def interval_moment(self, lower: float, upper: float) -> float:
        if upper <= lower:
            return 0.0
        lower = max(lower, 0.0)
        if self.theta == 0.0:
            if math.isinf(upper):
                return math.inf
            return self._k * (upper ** (1.0 - self.beta) - lower ** (1.0 - self.beta)) / (1.0 - self.beta)
        a = 1.0 - self.beta
        p_upper = 1.0 if math.isinf(upper) else special.gammainc(a, self.theta * upper)
        p_lower = special.gammainc(a, self.theta * lower)
        return self.c * self.beta * self.theta ** (self.beta - 1.0) * (p_upper - p_lower)

    def laplace_exponent(self, lam: ArrayLike) -> ArrayLike:
        return self.c * (np.power(np.asarray(lam) + self.theta, self.beta) - self.theta ** self.beta)

    def sample_tail(self, eps: float, rng: np.random.Generator, size: SizeLike = None):
        if eps <= 0.0:
            raise ValidationError("cannot sample an infinite measure without truncation")
        n = _draw_count(size)
        out = np.empty(n)
        filled = 0
        # Pareto proposal thinned by the tempering factor
        while filled < n:
            batch = max(2 * (n - filled), 64)
            proposal = eps * (1.0 - rng.random(batch)) ** (-1.0 / self.beta)
            accept = rng.random(batch) < np.exp(-self.theta * (proposal - eps))
            taken = proposal[accept][: n - filled]
            out[filled:filled + taken.size] = taken
            filled += taken.size
        return _shape_output(out, size)

    def to_spec(self) -> str:
        return f"tempered(beta={self.beta!r},theta={self.theta!r},c={self.c!r})"


@dataclass(frozen=True)
class FiniteDiscrete(LevyMeasure):
    """Finite sum of point masses b_i at positions y_i > 0."""

    atoms: Tuple[Tuple[float, float], ...] = ()

    def __post_init__(self):
        cleaned = tuple((float(y), float(b)) for y, b in self.atoms)
        for y, b in cleaned:
            if not y > 0.0:
                raise InvalidMeasureError(f"atom positions must be positive, got {y}")
            if not b > 0.0:
                raise InvalidMeasureError(f"atom masses must be positive, got {b}")
        object.__setattr__(self, 'atoms', cleaned)

    @property
    def positions(self) -> np.ndarray:
        return np.array([y for y, _ in self.atoms], dtype=float)

    @property
    def masses(self) -> np.ndarray:
        return np.array([b for _, b in self.atoms], dtype=float)

    def tail_mass(self, y: float) -> float:
        return float(sum(b for pos, b in self.atoms if pos >= y))

    def interval_moment(self, lower: float, upper: float) -> float:
        return float(sum(pos * b for pos, b in self.atoms if lower <= pos < upper))

    def laplace_exponent(self, lam: ArrayLike) -> ArrayLike:
        lam = np.asarray(lam, dtype=float)
        total = np.zeros_like(lam)
        for y, b in self.atoms:
            total = total + b * -np.expm1(-lam * y)
        return total if total.ndim else float(total)

    def integrate(self, func: Callable[[float], float],
                  lower: float = 0.0, upper: float = np.inf) -> float:
        return float(sum(func(y) * b for y, b in self.atoms if lower <= y < upper))

    def sample_tail(self, eps: float, rng: np.random.Generator, size: SizeLike = None):
        kept = [(y, b) for y, b in self.atoms if y >= eps]
        if not kept:
            raise ValidationError("cannot sample from a measure with zero mass")
        positions = np.array([y for y, _ in kept])
        weights = np.array([b for _, b in kept])
        idx = rng.choice(len(kept), size=_draw_count(size), p=weights / weights.sum())
        return _shape_output(positions[idx], size)

    def truncate(self, eps: float) -> LevyMeasure:
        kept = tuple((y, b) for y, b in self.atoms if y >= eps)
        if len(kept) == len(self.atoms):
            return self
        return FiniteDiscrete(kept)

    def to_spec(self) -> str:
        inner = ",".join(f"({y!r},{b!r})" for y, b in self.atoms)
        return f"atoms[{inner}]"


@dataclass(frozen=True)
class StableMixture(LevyMeasure):
    """Σ_j a_j ν_{β_j}: a discrete mixture of stable measures."""

    components: Tuple[Tuple[float, float], ...]

    def __post_init__(self):
        if not self.components:
            raise InvalidMeasureError("a stable mixture needs at least one component")
        members = tuple(StableFractional(float(beta), float(weight))
                        for beta, weight in self.components)
        object.__setattr__(self, 'components',
                           tuple((m.beta, m.c) for m in members))

    @property
    def members(self) -> Tuple[StableFractional, ...]:
        return tuple(StableFractional(beta, weight) for beta, weight in self.components)

    def tail_mass(self, y: float) -> float:
        return sum(m.tail_mass(y) for m in self.members)

    def interval_moment(self, lower: float, upper: float) -> float:
        return sum(m.interval_moment(lower, upper) for m in self.members)

    def laplace_exponent(self, lam: ArrayLike) -> ArrayLike:
        return sum(m.laplace_exponent(lam) for m in self.members)

    def integrate(self, func: Callable[[float], float],
                  lower: float = 0.0, upper: float = np.inf) -> float:
        return sum(m.integrate(func, lower, upper) for m in self.members)

    def sample_tail(self, eps: float, rng: np.random.Generator, size: SizeLike = None):
        if eps <= 0.0:
            raise ValidationError("cannot sample an infinite measure without truncation")
        members = self.members
        n = _draw_count(size)
        tails = np.array([m.tail_mass(eps) for m in members])
        choice = rng.choice(len(members), size=n, p=tails / tails.sum())
        out = np.empty(n)
        for j, member in enumerate(members):
            mask = choice == j
            count = int(mask.sum())
            if count:
                out[mask] = member.sample_tail(eps, rng, count)
        return _shape_output(out, size)

    def truncate(self, eps: float) -> LevyMeasure:
        return Truncated(self, eps)

    def fractional_lower_bound(self) -> Optional[Tuple[float, float]]:
        beta, weight = max(self.components, key=lambda comp: (comp[1], -comp[0]))
        return beta, weight

    def to_spec(self) -> str:
        inner = ",".join(f"{a!r}*stable(beta={b!r})" for b, a in self.components)
        return f"mix({inner})"


@dataclass(frozen=True)
class Truncated(LevyMeasure):
    """ν_ε(dy) = 1_{y ≥ ε} ν(dy), a finite measure."""

    base: LevyMeasure
    eps: float

    def __post_init__(self):
        if not self.eps > 0.0:
            raise ValidationError(f"truncation cutoff must be positive, got {self.eps}")
        if isinstance(self.base, Truncated):
            object.__setattr__(self, 'eps', max(self.eps, self.base.eps))
            object.__setattr__(self, 'base', self.base.base)

    def tail_mass(self, y: float) -> float:
        return self.base.tail_mass(max(y, self.eps))

    def interval_moment(self, lower: float, upper: float) -> float:
        lower, upper = max(lower, self.eps), max(upper, self.eps)
        return self.base.interval_moment(lower, upper)

    def laplace_exponent(self, lam: ArrayLike) -> ArrayLike:
        # φ_base minus the removed piece on (0, eps); avoids quadrature to infinity
        lam_arr = np.atleast_1d(np.asarray(lam, dtype=float))
        full = np.atleast_1d(np.asarray(self.base.laplace_exponent(lam_arr), dtype=float))
        removed = np.array([
            0.0 if l == 0.0 else self.base.integrate(lambda y, l=l: -math.expm1(-l * y), 0.0, self.eps)
            for l in lam_arr
        ])
        values = np.maximum(full - removed, 0.0)
        return values if np.ndim(lam) else float(values[0])

    def integrate(self, func: Callable[[float], float],
                  lower: float = 0.0, upper: float = np.inf) -> float:
        return self.base.integrate(func, max(lower, self.eps), upper)

    def sample_tail(self, eps: float, rng: np.random.Generator, size: SizeLike = None):
        return self.base.sample_tail(max(eps, self.eps), rng, size)

    def truncate(self, eps: float) -> LevyMeasure:
        if eps <= self.eps:
            return self
        return Truncated(self.base, eps)

    def to_spec(self) -> str:
        return f"trunc({self.base.to_spec()},eps={self.eps!r})"


@dataclass(frozen=True)
class Sum(LevyMeasure):
    """Sum of measures, evaluated term by term."""

    members: Tuple[LevyMeasure, ...]

    def __post_init__(self):
        object.__setattr__(self, 'members', tuple(self.members))
        if not self.members:
            raise InvalidMeasureError("a sum of measures needs at least one member")

    def tail_mass(self, y: float) -> float:
        return sum(m.tail_mass(y) for m in self.members)

    def interval_moment(self, lower: float, upper: float) -> float:
        return sum(m.interval_moment(lower, upper) for m in self.members)

    def laplace_exponent(self, lam: ArrayLike) -> ArrayLike:
        return sum(m.laplace_exponent(lam) for m in self.members)

    def integrate(self, func: Callable[[float], float],
                  lower: float = 0.0, upper: float = np.inf) -> float:
        return sum(m.integrate(func, lower, upper) for m in self.members)

    def sample_tail(self, eps: float, rng: np.random.Generator, size: SizeLike = None):
        n = _draw_count(size)
        tails = np.array([m.tail_mass(eps) for m in self.members])
        if not np.all(np.isfinite(tails)) or tails.sum() <= 0:
            raise ValidationError("cannot sample: tail mass is infinite or zero")
        choice = rng.choice(len(self.members), size=n, p=tails / tails.sum())
        out = np.empty(n)
        for j, member in enumerate(self.members):
            mask = choice == j
            count = int(mask.sum())
            if count:
                out[mask] = member.sample_tail(eps, rng, count)
        return _shape_output(out, size)

    def truncate(self, eps: float) -> LevyMeasure:
        return Sum(tuple(m.truncate(eps) for m in self.members))

    def fractional_lower_bound(self) -> Optional[Tuple[float, float]]:
        for member in self.members:
            bound = member.fractional_lower_bound()
            if bound is not None:
                return bound
        return None

    def to_spec(self) -> str:
        return "sum(" + ",".join(m.to_spec() for m in self.members) + ")"


def levy_condition_integral(nu: LevyMeasure) -> float:
    """
    Compute ∫₀^∞ min(1, y) ν(dy) and reject measures where it diverges.

    Args:
        nu: Jump measure

    Returns:
        The one-sided Lévy integral
    """
    try:
        value = nu.levy_condition_integral()
    except (OverflowError, ZeroDivisionError) as e:
        raise InvalidMeasureError(f"Levy integral of {nu.to_spec()} diverges: {e}") from e
    if not math.isfinite(value) or value > GenFracConfig.LEVY_INTEGRAL_BOUND:
        raise InvalidMeasureError(
            f"Levy integral of {nu.to_spec()} exceeds the configured bound "
            f"{GenFracConfig.LEVY_INTEGRAL_BOUND:g}")
    if value < 0:
        raise InvalidMeasureError(f"Levy integral of {nu.to_spec()} is negative")
    return float(value)


def laplace_exponent(nu: LevyMeasure, lam: ArrayLike) -> ArrayLike:
    """
    Laplace exponent φ_ν(λ) = ∫ (1 - e^{-λy}) ν(dy) for λ ≥ 0.

    Args:
        nu: Jump measure
        lam: Scalar or array of nonnegative arguments
    """
    if np.any(np.asarray(lam) < 0):
        raise ValidationError("Laplace exponent requires lambda >= 0")
    return nu.laplace_exponent(lam)


def total_mass(nu: LevyMeasure) -> float:
    """‖ν‖ = ν((0, ∞)), possibly infinite."""
    return nu.total_mass()


def tail_mass(nu: LevyMeasure, y: float) -> float:
    """ν([y, ∞))."""
    return nu.tail_mass(y)


def small_jump_mean(nu: LevyMeasure, eps: float) -> float:
    """∫_(0, eps) y ν(dy)."""
    return nu.small_jump_mean(eps)


def truncate(nu: LevyMeasure, eps: float) -> LevyMeasure:
    """Restrict ν to [eps, ∞)."""
    if not eps > 0:
        raise ValidationError(f"truncation cutoff must be positive, got {eps}")
    return nu.truncate(eps)


def sample_jump(nu: LevyMeasure, rng: np.random.Generator, size: SizeLike = None):
    """
    Draw jump sizes from ν/‖ν‖.

    Args:
        nu: Finite measure with positive mass
        rng: Seeded generator
        size: None for a single float, else output shape

    Returns:
        Sample or array of samples
    """
    mass = nu.total_mass()
    if not math.isfinite(mass):
        raise ValidationError(
            f"sample_jump needs a finite measure; truncate {nu.to_spec()} first")
    if mass <= 0:
        raise ValidationError("sample_jump needs a measure with positive mass")
    return nu._sample(rng, size)


def default_truncation(nu: LevyMeasure, tol: Optional[float] = None) -> float:
    """
    Cutoff ε such that the omitted drift ∫₀^ε y ν(dy) is at most ``tol``.

    Args:
        nu: Infinite-activity measure
        tol: Drift tolerance, defaults to ``GENFRAC_DRIFT_TOLERANCE``

    Returns:
        The cutoff ε
    """
    tol = GenFracConfig.DRIFT_TOLERANCE if tol is None else tol
    if isinstance(nu, StableFractional):
        k = nu.c * nu.beta / special.gamma(1.0 - nu.beta)
        return ((1.0 - nu.beta) * tol / k) ** (1.0 / (1.0 - nu.beta))

    def excess(log_eps: float) -> float:
        drift = max(nu.small_jump_mean(math.exp(log_eps)), 1e-300)
        return math.log(drift) - math.log(tol)

    lo, hi = math.log(1e-300), 0.0
    while excess(hi) < 0 and hi < 50:
        hi += 5.0
    if excess(lo) > 0 or excess(hi) < 0:
        raise InvalidMeasureError(f"no cutoff meets drift tolerance {tol:g} for {nu.to_spec()}")
    return math.exp(optimize.brentq(excess, lo, hi, xtol=1e-10))


def resolve_finite(nu: LevyMeasure,
                   eps: Optional[float] = None) -> Tuple[LevyMeasure, Optional[float]]:
    """
    Return a finite measure to simulate with, truncating when needed.

    Args:
        nu: Jump measure
        eps: Explicit cutoff; when None and ν is infinite the drift rule is used

    Returns:
        Tuple of (finite measure, cutoff used or None)
    """
    if eps is not None:
        return truncate(nu, eps), eps
    if nu.is_finite():
        return nu, None
    eps = default_truncation(nu)
    logger.info(f"Truncating {nu.to_spec()} at eps={eps:.3g} "
                f"(dropped drift <= {GenFracConfig.DRIFT_TOLERANCE:g})")
    return truncate(nu, eps), eps


def sample_stable_increment(beta: float, c: float, t: ArrayLike,
                            rng: np.random.Generator, size: SizeLike = None):
    """
    Exact one-sided stable increments with E[e^{-λS_t}] = e^{-t c λ^β}.

    Uses Kanter's representation of the positive stable law with index β.
    """
    t_arr = np.asarray(t, dtype=float)
    n = t_arr.size if t_arr.ndim else _draw_count(size)
    u = np.pi * (1.0 - rng.random(n))
    e = rng.exponential(1.0, n)
    s1 = (np.sin(beta * u) / np.sin(u) ** (1.0 / beta)) \
        * (np.sin((1.0 - beta) * u) / e) ** ((1.0 - beta) / beta)
    if t_arr.ndim:
        return np.power(c * t_arr, 1.0 / beta) * s1.reshape(t_arr.shape)
    return _shape_output((c * float(t_arr)) ** (1.0 / beta) * s1, size)
