"""Counting positive values of a polynomial over the Boolean cube.

Exact enumeration costs 2**nvars evaluations, so production verification
estimates the positive proportion by uniform sampling.  The exact walker
stays available as the ground-truth oracle at desk scale.

Sampling is split into fixed-size chunks whose seeds derive from the caller's
generator, so a run is reproducible for a given seed no matter how many
worker threads evaluate the chunks.
"""

from __future__ import annotations

import math
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import CapacityError
from .poly import Poly

EXACT_NVARS_LIMIT = 25
CHUNK_TRIALS = 512
# Coefficient budget under which int64 accumulation cannot overflow.
INT64_SAFE_BOUND = 1 << 62


@dataclass(frozen=True)
class ValueCounts:
    positive: int
    zero: int
    negative: int

    @property
    def total(self) -> int:
        return self.positive + self.zero + self.negative


@dataclass(frozen=True)
class McEstimate:
    positive: int
    trials: int

    @property
    def proportion(self) -> float:
        return self.positive / self.trials


@dataclass(frozen=True)
class McConfig:
    """Monte-Carlo accuracy budget: trials, gap bound, failure odds, constant."""

    trials: int
    epsilon: float
    delta: float
    c_const: float = 0.02

    def __post_init__(self) -> None:
        if self.trials < 1:
            raise ValueError(f"trials must be positive, got {self.trials}")
        if not 0.0 < self.epsilon < 1.0:
            raise ValueError(f"epsilon must be in (0, 1), got {self.epsilon}")
        if not 0.0 < self.delta < 1.0:
            raise ValueError(f"delta must be in (0, 1), got {self.delta}")
        if self.c_const <= 0.0:
            raise ValueError(f"c_const must be positive, got {self.c_const}")

    @classmethod
    def from_accuracy(cls, epsilon: float, delta: float, c_const: float = 0.02) -> McConfig:
        return cls(required_trials(epsilon, delta, c_const), epsilon, delta, c_const)


def required_trials(epsilon: float, delta: float, c_const: float = 0.02) -> int:
    """Trial count for gap epsilon with failure probability at most delta."""
    if not 0.0 < epsilon < 1.0:
        raise ValueError(f"epsilon must be in (0, 1), got {epsilon}")
    if not 0.0 < delta < 1.0:
        raise ValueError(f"delta must be in (0, 1), got {delta}")
    if c_const <= 0.0:
        raise ValueError(f"c_const must be positive, got {c_const}")
    return math.ceil(c_const * 4.0 * math.log2(2.0 / delta) / (epsilon * epsilon))


def exact_value_counts(p: Poly) -> ValueCounts:
    """Sign tallies of p over every cube point.  Exponential; nvars <= 25 only."""
    if p.nvars > EXACT_NVARS_LIMIT:
        raise CapacityError(
            f"exact enumeration supports at most {EXACT_NVARS_LIMIT} variables, got {p.nvars}"
        )
    pos = zero = neg = 0
    for mask in range(1 << p.nvars):
        v = p.evaluate(mask)
        if v > 0:
            pos += 1
        elif v < 0:
            neg += 1
        else:
            zero += 1
    return ValueCounts(pos, zero, neg)


def exact_positive_count(p: Poly) -> int:
    return exact_value_counts(p).positive


def evaluate_batch(p: Poly, masks: np.ndarray) -> np.ndarray:
    """Values of p at an array of cube-point masks.

    Uses an int64 fast path when the coefficient budget rules out overflow,
    otherwise falls back to exact Python integers.
    """
    n = len(masks)
    bound = sum(abs(c) for c in p.terms.values())
    if bound < INT64_SAFE_BOUND:
        acc = np.zeros(n, dtype=np.int64)
        for m, c in p.terms.items():
            mm = np.uint64(m)
            acc[(masks & mm) == mm] += c
        return acc
    return np.array([p.evaluate(int(v)) for v in masks], dtype=object)


def sample_tuple_chunks(nvars: int, n_trials: int, rng: random.Random) -> list[np.ndarray]:
    """Uniform cube points in fixed-size chunks, each from a derived child seed."""
    if n_trials < 1:
        raise ValueError(f"n_trials must be positive, got {n_trials}")
    sizes = [CHUNK_TRIALS] * (n_trials // CHUNK_TRIALS)
    if n_trials % CHUNK_TRIALS:
        sizes.append(n_trials % CHUNK_TRIALS)
    chunks = []
    for size in sizes:
        child = random.Random(rng.getrandbits(64))
        if nvars:
            it = (child.getrandbits(nvars) for _ in range(size))
            chunks.append(np.fromiter(it, dtype=np.uint64, count=size))
        else:
            chunks.append(np.zeros(size, dtype=np.uint64))
    return chunks


def map_chunks(count_fn: Callable[[np.ndarray], int], chunks: list[np.ndarray], threads: int = 1) -> int:
    """Sum a per-chunk count; chunk order never affects the total."""
    if threads > 1 and len(chunks) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            return sum(pool.map(count_fn, chunks))
    return sum(map(count_fn, chunks))


def estimate_positive_proportion(
    p: Poly,
    n_trials: int,
    rng: random.Random | None = None,
    threads: int = 1,
) -> McEstimate:
    """Monte-Carlo estimate of the proportion of cube points where p > 0."""
    if rng is None:
        rng = random.SystemRandom()
    chunks = sample_tuple_chunks(p.nvars, n_trials, rng)

    def count(chunk: np.ndarray) -> int:
        return int((evaluate_batch(p, chunk) > 0).sum())

    return McEstimate(map_chunks(count, chunks, threads), n_trials)
