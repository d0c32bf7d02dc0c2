"""Seeded Monte Carlo sampling of dominating-set sizes on the path.

Samples are drawn in fixed-size chunks, each chunk from its own
pseudo-random substream derived from (seed, chunk index), and chunk
histograms are merged by plain addition.  The chunk layout depends only
on (samples), never on the worker count, so a run is a pure function of
(n, samples, seed) however the chunks are scheduled.

Each sampled permutation is uniform over all n! orders: every row is an
independent backward pairwise-swap shuffle driven by the chunk stream.
"""

from __future__ import annotations

from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import expectation
from .domination import gamma_batch_path
from .errors import ConsistencyError, ResourceLimitError
from .extremal import max_dominating_size, min_dominating_size

CHUNK_SIZE = 4096
DEFAULT_BUDGET = 500_000_000  # n * samples guard
NORMALIZATION_MODES = ("none", "per_vertex", "centered")


@dataclass(frozen=True)
class SampleConfig:
    n: int
    samples: int
    seed: int
    workers: int = 1
    normalization: str = "none"
    budget: int = DEFAULT_BUDGET

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be positive")
        if self.samples < 1:
            raise ValueError("samples must be positive")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must fit in an unsigned 64-bit integer")
        if self.workers < 1:
            raise ValueError("workers must be positive")
        if self.normalization not in NORMALIZATION_MODES:
            raise ValueError(f"normalization must be one of {NORMALIZATION_MODES}")


@dataclass(frozen=True)
class Histogram:
    """Empirical distribution of the dominating-set size."""

    n: int
    seed: int
    bins: dict[int, int]  # size -> occurrences, keys sorted ascending
    total: int
    mean: float
    variance: float

    @property
    def min_gamma(self) -> int:
        return min(self.bins)

    @property
    def max_gamma(self) -> int:
        return max(self.bins)

    @property
    def std_dev(self) -> float:
        return self.variance**0.5

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "samples": self.total,
            "seed": self.seed,
            "mean": self.mean,
            "variance": self.variance,
            "min": self.min_gamma,
            "max": self.max_gamma,
        }


def _chunk_histogram(args: tuple[int, int, int, int]) -> Counter:
    n, seed, chunk_index, count = args
    rng = np.random.default_rng(
        np.random.SeedSequence(entropy=seed, spawn_key=(chunk_index,))
    )
    rows = np.tile(np.arange(1, n + 1, dtype=np.int64), (count, 1))
    perms = rng.permuted(rows, axis=1)
    sizes = gamma_batch_path(n, perms)
    values, counts = np.unique(sizes, return_counts=True)
    return Counter({int(v): int(c) for v, c in zip(values, counts)})


def sample_gamma(config: SampleConfig) -> Histogram:
    """Histogram of the size over uniform random revelation orders."""
    cost = config.n * config.samples
    if cost > config.budget:
        raise ResourceLimitError(
            f"n * samples = {cost} exceeds the sampling budget of {config.budget}; "
            f"raise SampleConfig.budget (CLI: --budget) to run this"
        )
    jobs = []
    produced = 0
    while produced < config.samples:
        count = min(CHUNK_SIZE, config.samples - produced)
        jobs.append((config.n, config.seed, len(jobs), count))
        produced += count
    if config.workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=config.workers) as pool:
            parts = list(pool.map(_chunk_histogram, jobs))
    else:
        parts = [_chunk_histogram(job) for job in jobs]

    merged: Counter = Counter()
    for part in parts:
        merged.update(part)
    bins = {size: merged[size] for size in sorted(merged)}
    total = sum(bins.values())
    mean = sum(size * c for size, c in bins.items()) / total
    variance = sum(c * (size - mean) ** 2 for size, c in bins.items()) / total
    if min(bins) < min_dominating_size(config.n) or max(bins) > max_dominating_size(
        config.n
    ):
        raise ConsistencyError(
            "sampled a size outside the provable range; the batch evaluator is broken"
        )
    return Histogram(
        n=config.n, seed=config.seed, bins=bins, total=total, mean=mean,
        variance=variance,
    )


def normalize(hist: Histogram, mode: str) -> list[tuple[float, float]]:
    """Empirical distribution points (x, relative frequency) under a rescaling.

    per_vertex divides each size by n, landing in [1/3, 1/2]; centered
    subtracts the exact expectation first, so the points straddle 0.
    """
    items = sorted(hist.bins.items())
    if mode == "per_vertex":
        return [(size / hist.n, count / hist.total) for size, count in items]
    if mode == "centered":
        mu = _exact_mean_float(hist.n)
        return [((size - mu) / hist.n, count / hist.total) for size, count in items]
    raise ValueError("normalization mode must be 'per_vertex' or 'centered'")


def _exact_mean_float(n: int) -> float:
    # Exact rational mean where affordable, float recurrence beyond.
    if n <= 4000:
        return float(expectation.expected_gamma_path_closed_form(n))
    return expectation.expected_gamma_path_float(n)
