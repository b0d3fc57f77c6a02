"""Seeded random streams, one independent stream per trial.

Each trial derives its generator from ``(seed, trial)`` alone, so the
numbers a trial sees do not depend on which thread runs it or in which
order trials finish.
"""

from __future__ import annotations

import numpy as np


def trial_generator(seed: int, trial: int) -> np.random.Generator:
    """Counter-based Philox generator for one trial of a seeded run."""
    sequence = np.random.SeedSequence(seed, spawn_key=(trial,))
    return np.random.Generator(np.random.Philox(sequence))


def random_colouring(n: int, k: int, rng: np.random.Generator) -> tuple[int, ...]:
    """Uniform colouring of ``n`` vertices with colours ``0..k-1``."""
    return tuple(int(c) for c in rng.integers(0, k, size=n))


def random_subset(n: int, k: int, rng: np.random.Generator) -> tuple[int, ...]:
    """Uniform ``k``-subset of ``range(n)``, sorted."""
    return tuple(sorted(int(v) for v in rng.choice(n, size=k, replace=False)))
