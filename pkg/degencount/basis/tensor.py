"""Recovering individual hom counts from a subgraph-count oracle.

Hom counts are multiplicative under the tensor product, so for each test
graph ``T`` the oracle value ``Sub(H, G x T)`` is a linear form in the
unknowns ``a(H') Hom(H', G)`` with known weights ``Hom(H', T)``. Enough test
graphs make the system square and invertible.
"""

from __future__ import annotations

import logging
from collections.abc import Callable
from fractions import Fraction

import numpy as np
import sympy

from ..config import EngineConfig
from ..core.errors import BasisIntegrityError, SingularSystemError
from ..core.generators import clique, random_graph
from ..core.graph import Graph
from ..core.transforms import tensor_product
from ..counting.homs import count_homs_dtd
from .lattice import sub_basis

logger = logging.getLogger(__name__)

SubOracle = Callable[[Graph], int]


def _independent_rows(rows: list[list[int]]) -> list[int] | None:
    """Indices of rows forming a basis of their span, if the span is full."""
    width = len(rows[0])
    _, pivots = sympy.Matrix(rows).T.rref()
    if len(pivots) < width:
        return None
    return list(pivots)


def choose_test_graphs(
    terms: list[Graph], config: EngineConfig | None = None, seed: int = 0
) -> tuple[list[Graph], sympy.Matrix]:
    """Pick test graphs whose hom-count rows make an invertible square matrix.

    Cliques come first, from ``K_2`` unless some term is edgeless; random
    graphs are appended while the rows stay rank-deficient.

    Raises:
        SingularSystemError: If ``tensor_retries`` random graphs do not help
    """
    config = config or EngineConfig()
    m = len(terms)
    rng = np.random.default_rng(seed)
    start = 1 if any(term.edge_count == 0 for term in terms) else 2
    tests = [clique(t) for t in range(start, start + m)]
    rows = [[count_homs_dtd(term, t, config) for term in terms] for t in tests]
    chosen = _independent_rows(rows)
    attempt = 0
    while chosen is None:
        if attempt >= config.tensor_retries:
            raise SingularSystemError(
                f"no invertible system for {m} terms after {attempt} extra test graphs"
            )
        extra = random_graph(m + 2 + attempt, 0.5, rng)
        tests.append(extra)
        rows.append([count_homs_dtd(term, extra, config) for term in terms])
        attempt += 1
        logger.debug(f"tensor system rank-deficient, added random test graph {attempt}")
        chosen = _independent_rows(rows)
    return [tests[i] for i in chosen], sympy.Matrix([rows[i] for i in chosen])


def recover_hom_counts_via_tensor(
    pattern: Graph,
    host: Graph,
    sub_oracle: SubOracle,
    config: EngineConfig | None = None,
    seed: int = 0,
) -> dict[str, int]:
    """``Hom(H', host)`` for every term ``H'`` of the subgraph basis of ``pattern``.

    Args:
        pattern: The pattern whose basis terms are recovered
        host: The host graph
        sub_oracle: Returns ``|Sub(pattern, X)|`` for any graph ``X``
        config: Engine settings
        seed: Seed for random test graphs

    Raises:
        SingularSystemError: If no invertible system is found
        BasisIntegrityError: If a recovered count is not an integer
    """
    config = config or EngineConfig()
    basis = sub_basis(pattern, config)
    labels = basis.ordered_labels()
    terms = [basis.graphs[label] for label in labels]
    tests, matrix = choose_test_graphs(terms, config, seed)
    rhs = sympy.Matrix([sub_oracle(tensor_product(host, t)) for t in tests])
    solution = matrix.LUsolve(rhs)
    result: dict[str, int] = {}
    for label, value in zip(labels, solution, strict=True):
        exact = sympy.Rational(value)
        hom = Fraction(int(exact.p), int(exact.q)) / basis.terms[label]
        if hom.denominator != 1:
            raise BasisIntegrityError(f"recovered non-integer hom count {hom} for {label}")
        result[label] = hom.numerator
    logger.debug(f"recovered {len(result)} hom counts from {len(tests)} oracle queries")
    return result
