"""
    --- AUTO-GENERATED DOCSTRING ---
    Table of content is automatically generated by Agent Docstrings v1.3.5

    Classes/Functions:
        - as_seed_sequence(seed: SeedLike = None) -> np.random.SeedSequence (line 42)
        - seed_value(seed: SeedLike = None) -> Optional[int] (line 65)
        - MonteCarloEstimate (line 74):
            - from_moments(total: np.ndarray, total_sq: np.ndarray, count: int) -> 'MonteCarloEstimate' (line 83)
            - from_samples(samples: np.ndarray) -> 'MonteCarloEstimate' (line 96)
            - to_dict() -> Dict[str, Any] (line 102)
        - BatchRunner (line 111):
            - batch_sizes() -> List[int] (line 138)
            - run(kernel: BatchKernel) -> MonteCarloEstimate (line 146)
            - map(kernel: Callable[[np.random.Generator, int], Any]) -> List[Any] (line 160)
    --- END AUTO-GENERATED DOCSTRING ---

Reproducible parallel Monte Carlo.

Samples are split into fixed-size batches. Each batch gets its own child
``SeedSequence`` spawned from the master seed, so the random stream of a
batch depends only on (seed, batch index) and never on how many worker
threads run. Batch moments are reduced in batch order.
"""
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional, Tuple, Union

import numpy as np
from tqdm import tqdm

from genfrac.config import GenFracConfig
from genfrac.errors import ValidationError

logger = logging.getLogger(__name__)

SeedLike = Union[None, int, np.random.SeedSequence, np.random.Generator]
BatchKernel = Callable[[np.random.Generator, int], Tuple[np.ndarray, np.ndarray]]


def as_seed_sequence(seed: SeedLike = None) -> np.random.SeedSequence:
    """
    Normalize a seed argument to a SeedSequence.

    ``None`` falls back to ``GENFRAC_SEED`` and then to fresh OS entropy.
    A Generator contributes one draw, so passing the same generator twice
    yields different streams.
    """
    if isinstance(seed, np.random.SeedSequence):
        return seed
    if isinstance(seed, np.random.Generator):
        return np.random.SeedSequence(int(seed.integers(0, 2**63 - 1)))
    if seed is None:
        seed = GenFracConfig.SEED
    if seed is None:
        sequence = np.random.SeedSequence()
        logger.info(f"No seed given; using entropy {sequence.entropy}")
        return sequence
    if int(seed) < 0:
        raise ValidationError(f"seed must be nonnegative, got {seed}")
    return np.random.SeedSequence(int(seed))


def seed_value(seed: SeedLike = None) -> Optional[int]:
    """Integer entropy recorded in manifests for a seed argument."""
    if isinstance(seed, np.random.Generator):
        return None
    entropy = as_seed_sequence(seed).entropy
    return int(entropy) if isinstance(entropy, int) else None


@dataclass
class MonteCarloEstimate:
    """Sample mean with its standard error; arrays are reduced elementwise."""

    mean: np.ndarray
    std_error: np.ndarray
    n_samples: int
    metadata: Dict[str, Any] = field(default_factory=dict)

    @staticmethod
    def from_moments(total: np.ndarray, total_sq: np.ndarray, count: int) -> 'MonteCarloEstimate':
        """Build an estimate from sums of values and squared values."""
        if count <= 0:
            raise ValidationError("Monte Carlo estimate needs at least one sample")
        mean = np.asarray(total) / count
        if count > 1:
            var = (np.asarray(total_sq) - count * np.abs(mean) ** 2) / (count - 1)
            std_error = np.sqrt(np.maximum(np.real(var), 0.0) / count)
        else:
            std_error = np.zeros(np.shape(mean))
        return MonteCarloEstimate(mean=mean, std_error=std_error, n_samples=count)

    @staticmethod
    def from_samples(samples: np.ndarray) -> 'MonteCarloEstimate':
        """Estimate from samples stacked along axis 0."""
        samples = np.asarray(samples)
        return MonteCarloEstimate.from_moments(
            samples.sum(axis=0), (np.abs(samples) ** 2).sum(axis=0), samples.shape[0])

    def to_dict(self) -> Dict[str, Any]:
        return {
            'mean': np.asarray(self.mean).tolist(),
            'std_error': np.asarray(self.std_error).tolist(),
            'n_samples': self.n_samples,
            'metadata': self.metadata,
        }


class BatchRunner:
    """Run a batch kernel over deterministic sub-seeds on a thread pool."""

    def __init__(self, n_samples: int, seed: SeedLike = None,
                 batch_size: Optional[int] = None, workers: Optional[int] = None,
                 progress: Optional[bool] = None, description: str = 'paths'):
        """
        Initialize the runner.

        Args:
            n_samples: Total number of samples N
            seed: Master seed
            batch_size: Samples per batch, defaults to ``GENFRAC_BATCH_SIZE``
            workers: Thread count, 0/None means hardware parallelism
            progress: Show a tqdm bar, defaults to ``GENFRAC_PROGRESS``
            description: Label for progress and logs
        """
        if n_samples < 1:
            raise ValidationError(f"number of samples must be >= 1, got {n_samples}")
        self.n_samples = int(n_samples)
        self.seed_sequence = as_seed_sequence(seed)
        self.batch_size = int(batch_size or GenFracConfig.BATCH_SIZE)
        self.workers = GenFracConfig.resolve_workers(workers)
        self.progress = GenFracConfig.PROGRESS if progress is None else progress
        self.description = description
        self.logger = logging.getLogger(__name__)

    def batch_sizes(self) -> List[int]:
        """Sizes of the batches, independent of the worker count."""
        full, rest = divmod(self.n_samples, self.batch_size)
        sizes = [self.batch_size] * full
        if rest:
            sizes.append(rest)
        return sizes

    def run(self, kernel: BatchKernel) -> MonteCarloEstimate:
        """
        Run ``kernel(rng, n)`` per batch; each returns (sum, sum of squares).

        Returns:
            Combined estimate over all batches
        """
        results = self.map(kernel)
        total = sum(r[0] for r in results)
        total_sq = sum(r[1] for r in results)
        estimate = MonteCarloEstimate.from_moments(total, total_sq, self.n_samples)
        estimate.metadata['seed_entropy'] = self.seed_sequence.entropy
        return estimate

    def map(self, kernel: Callable[[np.random.Generator, int], Any]) -> List[Any]:
        """Run ``kernel`` per batch and return the results in batch order."""
        sizes = self.batch_sizes()
        children = self.seed_sequence.spawn(len(sizes))
        self.logger.debug(f"Running {len(sizes)} batches of {self.description} "
                          f"on {self.workers} workers")

        def task(args):
            child, size = args
            return kernel(np.random.default_rng(child), size)

        jobs = list(zip(children, sizes))
        if self.workers == 1 or len(jobs) == 1:
            iterator = map(task, jobs)
            if self.progress:
                iterator = tqdm(iterator, total=len(jobs), desc=self.description)
            return list(iterator)

        with ThreadPoolExecutor(max_workers=self.workers) as executor:
            iterator = executor.map(task, jobs)
            if self.progress:
                iterator = tqdm(iterator, total=len(jobs), desc=self.description)
            return list(iterator)
