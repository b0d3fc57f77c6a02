"""Randomised approximate counting of subgraphs, induced subgraphs and graph properties.

Subgraph and induced subgraph counts are estimated from uniform random
``k``-colourings of the host: each colouring contributes its exact colourful
count scaled by ``k^k / k!``, which is unbiased, and the samples are combined
by a median of group means. Property counts are estimated by sampling
uniform ``k``-subsets once the host is large enough that a property true on
large independent sets is hit often.
"""

from __future__ import annotations

import logging
import math
import statistics
from collections.abc import Callable, Sequence
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Literal, TypeVar

from ..basis.lattice import supergraph_multiplicities
from ..basis.properties import GraphProperty, Predicate
from ..config import EngineConfig
from ..core.degeneracy import degeneracy
from ..core.errors import ParameterError
from ..core.generators import independent_set
from ..core.graph import Graph
from ..counting.brute import count_property_brute
from ..counting.homs import HostOrientation
from .colourful import colourful_copy_count, colourful_induced_count
from .rng import random_colouring, random_subset, trial_generator

logger = logging.getLogger(__name__)

T = TypeVar("T")

SAMPLE_BATCH = 1024
CONFIDENCE = Fraction(2, 3)


@dataclass(frozen=True)
class ApproxResult:
    """An approximate count and how it was obtained.

    Attributes:
        estimate: The returned count
        epsilon: Requested relative error
        seed: Seed of the random streams
        trials: Number of random samples drawn (0 when answered exactly)
        mode: ``sampled`` for a random estimate, ``exact`` when a branch counted exactly
        confidence: Success probability the estimate is guaranteed for
        group_means: Per-group sample means for median-of-means estimates
        samples_per_group: Samples in each group, or the total sample count for properties
    """

    estimate: Fraction
    epsilon: Fraction
    seed: int
    trials: int
    mode: Literal["sampled", "exact"]
    confidence: Fraction = CONFIDENCE
    group_means: tuple[Fraction, ...] = field(default=())
    samples_per_group: int = 0

    @property
    def is_exact(self) -> bool:
        return self.mode == "exact"

    def as_rows(self) -> list[tuple[str, object]]:
        rows: list[tuple[str, object]] = [
            ("estimate", self.estimate),
            ("epsilon", self.epsilon),
            ("confidence", self.confidence),
            ("mode", self.mode),
            ("seed", self.seed),
            ("trials", self.trials),
        ]
        if self.samples_per_group:
            rows.append(("samples_per_group", self.samples_per_group))
        rows.extend((f"group_{i}", mean) for i, mean in enumerate(self.group_means))
        return rows


@dataclass(frozen=True)
class Threshold:
    """How a property behaves on independent sets ``IS_0`` to ``IS_cap``.

    Attributes:
        c: Smallest size from which the property holds on every scanned independent set,
            or None if it fails on ``IS_cap``
        first_false: Smallest size on which the property fails, or None
        cap: Largest size scanned
    """

    c: int | None
    first_false: int | None
    cap: int


def find_threshold(predicate: Predicate, cap: int) -> Threshold:
    """Scan the independent sets up to ``cap`` vertices for the property's threshold."""
    holds = [bool(predicate(independent_set(size))) for size in range(cap + 1)]
    first_false = next((size for size, ok in enumerate(holds) if not ok), None)
    c: int | None = None
    for size in range(cap, -1, -1):
        if not holds[size]:
            break
        c = size
    return Threshold(c, first_false, cap)


def _as_epsilon(epsilon: float | Fraction) -> Fraction:
    value = Fraction(str(epsilon)) if isinstance(epsilon, float) else Fraction(epsilon)
    if not 0 < value < 1:
        raise ParameterError(f"epsilon must lie strictly between 0 and 1, got {epsilon}")
    return value


def group_size(k: int, epsilon: Fraction, constant: float) -> int:
    """Samples per group, ``ceil(constant * e^k / epsilon^2)``."""
    return max(1, math.ceil(constant * math.exp(k) / float(epsilon) ** 2))


def property_sample_count(k: int, d: int, epsilon: Fraction, constant: float) -> int:
    """Uniform subset samples, ``ceil(constant * epsilon^-2 * (dk + k)^k)``."""
    return max(1, math.ceil(constant * (d * k + k) ** k / float(epsilon) ** 2))


def median_of_means(
    values: Sequence[Fraction], groups: int
) -> tuple[Fraction, tuple[Fraction, ...]]:
    """Median of the means of ``groups`` consecutive equal-size slices of ``values``."""
    size = len(values) // groups
    means = tuple(
        Fraction(sum(values[g * size : (g + 1) * size]), size) for g in range(groups)
    )
    return Fraction(statistics.median(means)), means


def _run_trials(trial: Callable[[int], T], count: int, threads: int) -> list[T]:
    """Results of ``trial(0..count-1)`` in trial order."""
    if threads > 1 and count > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            return list(pool.map(trial, range(count)))
    return [trial(t) for t in range(count)]


def _exact(value: int, epsilon: Fraction, seed: int) -> ApproxResult:
    return ApproxResult(Fraction(value), epsilon, seed, 0, "exact")


def _colouring_estimate(
    per_colouring: Callable[[tuple[int, ...]], int],
    k: int,
    n: int,
    epsilon: Fraction,
    seed: int,
    config: EngineConfig,
    samples_per_group: int | None,
) -> ApproxResult:
    size = samples_per_group or group_size(k, epsilon, config.approx_group_constant)
    groups = config.approx_groups
    scale = Fraction(k**k, math.factorial(k))

    def trial(t: int) -> Fraction:
        colouring = random_colouring(n, k, trial_generator(seed, t))
        return per_colouring(colouring) * scale

    values = _run_trials(trial, groups * size, config.threads)
    estimate, means = median_of_means(values, groups)
    logger.info(
        f"colour-sampled estimate {estimate} from {groups} groups of {size} (seed {seed})"
    )
    return ApproxResult(estimate, epsilon, seed, len(values), "sampled", CONFIDENCE, means, size)


def approx_count_subs(
    pattern: Graph,
    host: Graph,
    epsilon: float | Fraction,
    seed: int,
    config: EngineConfig | None = None,
    samples_per_group: int | None = None,
) -> ApproxResult:
    """Estimate the number of subgraph copies of ``pattern`` in ``host``.

    Raises:
        ParameterError: If epsilon is not strictly between 0 and 1
    """
    eps = _as_epsilon(epsilon)
    config = config or EngineConfig()
    k = pattern.n
    if k > host.n:
        return _exact(0, eps, seed)
    if k == 0:
        return _exact(1, eps, seed)
    inner = config.with_overrides(threads=1)
    oriented = HostOrientation.from_graph(host)
    return _colouring_estimate(
        lambda colouring: colourful_copy_count(pattern, oriented, colouring, inner),
        k,
        host.n,
        eps,
        seed,
        config,
        samples_per_group,
    )


def approx_count_indsubs(
    pattern: Graph,
    host: Graph,
    epsilon: float | Fraction,
    seed: int,
    config: EngineConfig | None = None,
    samples_per_group: int | None = None,
) -> ApproxResult:
    """Estimate the number of induced copies of ``pattern`` in ``host``.

    Raises:
        ParameterError: If epsilon is not strictly between 0 and 1
    """
    eps = _as_epsilon(epsilon)
    config = config or EngineConfig()
    k = pattern.n
    if k > host.n:
        return _exact(0, eps, seed)
    if k == 0:
        return _exact(1, eps, seed)
    inner = config.with_overrides(threads=1)
    oriented = HostOrientation.from_graph(host)
    supergraphs = supergraph_multiplicities(pattern, config)
    return _colouring_estimate(
        lambda colouring: colourful_induced_count(
            pattern, oriented, colouring, inner, supergraphs
        ),
        k,
        host.n,
        eps,
        seed,
        config,
        samples_per_group,
    )


def approx_count_property(
    prop: Predicate | GraphProperty,
    k: int,
    host: Graph,
    epsilon: float | Fraction,
    seed: int,
    threshold: int | None = None,
    config: EngineConfig | None = None,
    samples: int | None = None,
) -> ApproxResult:
    """Estimate how many ``k``-vertex subsets of ``host`` induce a graph with the property.

    The threshold ``c`` must make the property true on every independent
    set with at least ``c`` vertices; when it is not given it is found by
    :func:`find_threshold`. Below the threshold, or on hosts with fewer
    than ``k(d+1)`` vertices, the count is exact. A minor-closed property
    that fails on some independent set of at most ``k`` vertices has no
    ``k``-vertex models at all.

    Raises:
        ParameterError: If epsilon is not strictly between 0 and 1
    """
    eps = _as_epsilon(epsilon)
    config = config or EngineConfig()
    predicate: Predicate = prop
    minor_closed = isinstance(prop, GraphProperty) and prop.minor_closed
    if k > host.n:
        return _exact(0, eps, seed)
    scanned = find_threshold(predicate, max(config.threshold_cap, k))
    if minor_closed and scanned.first_false is not None and k >= scanned.first_false:
        logger.info(f"minor-closed property fails on IS_{scanned.first_false}; no models")
        return _exact(0, eps, seed)
    c = scanned.c if threshold is None else threshold
    if c is None or k < c:
        return _exact(count_property_brute(predicate, k, host, config), eps, seed)
    d = degeneracy(host)
    if host.n < k * (d + 1):
        return _exact(count_property_brute(predicate, k, host, config), eps, seed)
    total = samples or property_sample_count(k, d, eps, config.property_sample_constant)
    batches = math.ceil(total / SAMPLE_BATCH)

    def batch(b: int) -> int:
        rng = trial_generator(seed, b)
        draws = min(SAMPLE_BATCH, total - b * SAMPLE_BATCH)
        return sum(
            1
            for _ in range(draws)
            if predicate(host.induced_subgraph(random_subset(host.n, k, rng))[0])
        )

    hits = sum(_run_trials(batch, batches, config.threads))
    estimate = Fraction(math.comb(host.n, k) * hits, total)
    logger.info(f"subset-sampled estimate {estimate}: {hits}/{total} hits (seed {seed})")
    return ApproxResult(estimate, eps, seed, total, "sampled", CONFIDENCE, (), total)
