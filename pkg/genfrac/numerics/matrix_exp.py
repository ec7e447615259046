"""
    --- AUTO-GENERATED DOCSTRING ---
    Table of content is automatically generated by Agent Docstrings v1.3.5

    Classes/Functions:
        - log_norm(matrix: np.ndarray) -> float (line 40)
        - MatrixGenerator (line 48):
            - from_matrix(matrix, growth_constant: Optional[float] = None, growth_bound: Optional[float] = None) -> 'MatrixGenerator' (line 61)
            - dimension() -> int (line 93)
            - contraction() -> bool (line 97)
            - semigroup_bound(t: float) -> float (line 100)
            - to_dict() -> Dict[str, Any] (line 104)
        - expm(matrices: np.ndarray) -> np.ndarray (line 114)
        - exp_scaled(matrix: np.ndarray, times: np.ndarray) -> np.ndarray (line 122)
        - exp_and_integral(matrices: np.ndarray, durations: np.ndarray) -> Tuple[np.ndarray, np.ndarray] (line 148)
        - ordered_simplex_integral(matrices: Sequence[np.ndarray], t: float) -> np.ndarray (line 187)
        - QuantizedExpmCache (line 209):
            - get(matrix: np.ndarray, duration: float) -> np.ndarray (line 224)
    --- END AUTO-GENERATED DOCSTRING ---

Matrix exponentials for the solvers.

``scipy.linalg.expm`` (scaling and squaring with Padé approximants) handles
stacks of matrices. Block-matrix exponentials give the integrals
∫₀^Δ e^{sA} ds h and the ordered simplex integrals of the perturbation
series without any time quadrature.
"""
import logging
from dataclasses import dataclass
from typing import Any, Dict, Optional, Sequence, Tuple

import numpy as np
from scipy import linalg

from genfrac.errors import ValidationError

logger = logging.getLogger(__name__)


def log_norm(matrix: np.ndarray) -> float:
    """Spectral log-norm μ₂(A): ‖e^{tA}‖₂ ≤ e^{tμ₂(A)} for t ≥ 0."""
    matrix = np.asarray(matrix)
    hermitian = 0.5 * (matrix + matrix.conj().T)
    return float(np.max(np.linalg.eigvalsh(hermitian)))


@dataclass(frozen=True, eq=False)
class MatrixGenerator:
    """
    Square generator A with growth type (M, m): ‖e^{tA}‖ ≤ M e^{tm}.

    The default growth type uses the spectral log-norm with M = 1, which
    is valid in the Euclidean operator norm.
    """

    matrix: np.ndarray
    growth_constant: float = 1.0
    growth_bound: float = 0.0

    @staticmethod
    def from_matrix(matrix, growth_constant: Optional[float] = None,
                    growth_bound: Optional[float] = None) -> 'MatrixGenerator':
        """
        Build a generator, computing the growth type when not declared.

        Args:
            matrix: Square array-like
            growth_constant: Declared M (>= 1)
            growth_bound: Declared m

        Returns:
            MatrixGenerator
        """
        matrix = np.atleast_2d(np.asarray(matrix))
        if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
            raise ValidationError(f"generator must be a square matrix, got shape {matrix.shape}")
        if not np.all(np.isfinite(matrix)):
            raise ValidationError("generator has non-finite entries")
        if not np.iscomplexobj(matrix):
            matrix = matrix.astype(float)
        if growth_constant is None and growth_bound is None:
            growth_constant, growth_bound = 1.0, log_norm(matrix)
        elif growth_bound is None:
            growth_bound = log_norm(matrix)
        elif growth_constant is None:
            growth_constant = 1.0
        if growth_constant < 1.0:
            raise ValidationError(f"growth constant M must be >= 1, got {growth_constant}")
        matrix.setflags(write=False)
        return MatrixGenerator(matrix, float(growth_constant), float(growth_bound))

    @property
    def dimension(self) -> int:
        return self.matrix.shape[0]

    @property
    def contraction(self) -> bool:
        return self.growth_constant == 1.0 and self.growth_bound <= 0.0

    def semigroup_bound(self, t: float) -> float:
        """M e^{tm}."""
        return self.growth_constant * float(np.exp(t * self.growth_bound))

    def to_dict(self) -> Dict[str, Any]:
        return {
            'matrix': np.real_if_close(self.matrix).tolist(),
            'dimension': self.dimension,
            'growth_constant': self.growth_constant,
            'growth_bound': self.growth_bound,
            'contraction': self.contraction,
        }


def expm(matrices: np.ndarray) -> np.ndarray:
    """Matrix exponential of a single matrix or a stack (..., d, d)."""
    matrices = np.asarray(matrices)
    if matrices.shape[-1] == 1:
        return np.exp(matrices)
    return linalg.expm(matrices)


def exp_scaled(matrix: np.ndarray, times: np.ndarray) -> np.ndarray:
    """
    exp(t_i A) for many scalars t_i and one matrix A.

    Uses the eigendecomposition when A is well-conditioned diagonalizable,
    otherwise the stacked Padé path.

    Returns:
        Array of shape times.shape + (d, d)
    """
    matrix = np.asarray(matrix)
    times = np.asarray(times, dtype=float)
    d = matrix.shape[0]
    eigvals, vecs = np.linalg.eig(matrix)
    if np.linalg.cond(vecs) < 1e8:
        inv = np.linalg.inv(vecs)
        scaled = np.exp(times[..., None] * eigvals)
        result = np.einsum('ij,...j,jk->...ik', vecs, scaled, inv)
        if not np.iscomplexobj(matrix):
            result = result.real
        return result
    flat = times.reshape(-1)
    stack = flat[:, None, None] * matrix[None, :, :]
    return expm(stack).reshape(times.shape + (d, d))


def exp_and_integral(matrices: np.ndarray,
                     durations: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """
    Segment propagators (e^{Δ_i A_i}, ∫₀^{Δ_i} e^{sA_i} ds) for stacks.

    Segments sharing the same matrix are grouped and go through
    :func:`exp_scaled`, which is the common case for constant generators and
    lattice-valued paths.
    """
    matrices = np.asarray(matrices)
    durations = np.asarray(durations, dtype=float)
    n, d, _ = matrices.shape
    dtype = np.result_type(matrices, float)
    expo = np.empty((n, d, d), dtype=dtype)
    integral = np.empty((n, d, d), dtype=dtype)
    if n == 0:
        return expo, integral

    unique, inverse = np.unique(matrices.reshape(n, -1), axis=0, return_inverse=True)
    inverse = np.asarray(inverse).reshape(-1)
    if 4 * unique.shape[0] <= n:
        for group, row in enumerate(unique):
            members = inverse == group
            block = np.zeros((2 * d, 2 * d), dtype=dtype)
            block[:d, :d] = row.reshape(d, d)
            block[:d, d:] = np.eye(d)
            big = exp_scaled(block, durations[members])
            expo[members] = big[:, :d, :d]
            integral[members] = big[:, :d, d:]
        return expo, integral

    augmented = np.zeros((n, 2 * d, 2 * d), dtype=dtype)
    augmented[:, :d, :d] = matrices
    augmented[:, :d, d:] = np.eye(d)
    augmented *= durations[:, None, None]
    big = linalg.expm(augmented)
    return big[:, :d, :d], big[:, :d, d:]


def ordered_simplex_integral(matrices: Sequence[np.ndarray], t: float) -> np.ndarray:
    """
    ∫ e^{Δ₀A₀} e^{Δ₁A₁} ⋯ e^{Δ_mA_m} over Δ_j ≥ 0 with Σ Δ_j = t.

    The earliest factor is leftmost. Computed as the top-right block of the
    exponential of the block upper-bidiagonal matrix with A_j on the diagonal
    and identities above it.
    """
    mats = [np.asarray(a) for a in matrices]
    m = len(mats) - 1
    d = mats[0].shape[0]
    if m == 0:
        return expm(t * mats[0])
    size = d * (m + 1)
    block = np.zeros((size, size), dtype=np.result_type(*mats, float))
    for j, a in enumerate(mats):
        block[j * d:(j + 1) * d, j * d:(j + 1) * d] = a
        if j < m:
            block[j * d:(j + 1) * d, (j + 1) * d:(j + 2) * d] = np.eye(d)
    return linalg.expm(t * block)[:d, m * d:]


class QuantizedExpmCache:
    """
    Cache of e^{ΔA} with Δ rounded to a multiple of ``quantum``.

    Opt-in only: the rounding changes the result by O(quantum·‖A‖).
    """

    def __init__(self, quantum: float):
        if quantum <= 0:
            raise ValidationError("cache quantum must be positive")
        self.quantum = float(quantum)
        self.hits = 0
        self.misses = 0
        self._store: Dict[Tuple[bytes, int], np.ndarray] = {}

    def get(self, matrix: np.ndarray, duration: float) -> np.ndarray:
        """e^{q·round(Δ/q)·A}."""
        steps = int(round(duration / self.quantum))
        key = (np.ascontiguousarray(matrix).tobytes(), steps)
        cached = self._store.get(key)
        if cached is None:
            self.misses += 1
            cached = expm(steps * self.quantum * np.asarray(matrix))
            self._store[key] = cached
        else:
            self.hits += 1
        return cached
