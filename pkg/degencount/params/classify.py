"""Parameter reports and complexity verdicts for patterns and declared pattern families.

A single pattern only fixes the exponents of the counting algorithms. Whether
a problem is fixed-parameter tractable is a statement about a class, so
class verdicts are produced only from a :class:`FamilyDeclaration`.
"""

from __future__ import annotations

import logging
from collections.abc import Callable
from dataclasses import dataclass, field

from ..config import EngineConfig
from ..core.errors import BoundExceededError, ParameterError
from ..core.graph import Graph
from ..core.validation import ValidationResult
from ..dtd.treewidth import tau1, tau2, tau3
from .structure import independence_number, induced_matching_number, vertex_cover_number

logger = logging.getLogger(__name__)

FAMILY_PARAMETERS = frozenset({"imn", "alpha", "tau1"})
HOM_HARDNESS = "unknown (open problem)"


@dataclass(frozen=True)
class FamilyDeclaration:
    """Which parameters the caller asserts are bounded over a pattern family.

    Attributes:
        name: Label for reports
        bounded: Subset of ``imn``, ``alpha`` and ``tau1``
    """

    name: str
    bounded: frozenset[str] = frozenset()

    def __post_init__(self) -> None:
        unknown = self.bounded - FAMILY_PARAMETERS
        if unknown:
            raise ParameterError(f"unknown family parameters {sorted(unknown)}")

    def verdicts(self) -> dict[str, str]:
        imn = "imn" in self.bounded
        # an induced matching of size m contains an independent set of size m
        imn = imn or "alpha" in self.bounded
        tau = "tau1" in self.bounded or imn
        return {
            "sub": "FPT" if imn else "#W[1]-hard",
            "indsub": "FPT" if "alpha" in self.bounded else "#W[1]-hard",
            "approx_sub": "FPTRAS" if tau else "no FPTRAS known",
            "approx_indsub": "FPTRAS" if imn else "no FPTRAS known",
            "hom": "FPT" if tau else HOM_HARDNESS,
        }


@dataclass
class ParamReport:
    """Structural parameters of one pattern and the exponents they govern.

    Tau values are None when skipped or when the pattern is beyond the exhaustive bounds.
    """

    n: int
    edges: int
    imn: int
    alpha: int
    vc: int
    tau1: int | None = None
    tau2: int | None = None
    tau3: int | None = None
    verdicts: dict[str, str] = field(default_factory=dict)

    def check(self) -> ValidationResult:
        """Consistency of the parameters with each other."""
        if self.imn > self.n // 2:
            return ValidationResult.failed("imn", f"imn {self.imn} exceeds n/2")
        if self.alpha > self.n:
            return ValidationResult.failed("alpha", f"alpha {self.alpha} exceeds n")
        if self.vc + self.alpha != self.n:
            return ValidationResult.failed("gallai", f"vc + alpha = {self.vc + self.alpha} != n")
        taus = [t for t in (self.tau1, self.tau2, self.tau3) if t is not None]
        if taus != sorted(taus):
            return ValidationResult.failed("tau", f"tau values {taus} are not monotone")
        if self.tau2 is not None and self.tau2 > max(1, self.imn):
            return ValidationResult.failed(
                "tau2", f"tau2 {self.tau2} exceeds max(1, imn) = {max(1, self.imn)}"
            )
        return ValidationResult.passed()

    def as_rows(self) -> list[tuple[str, object]]:
        def show(value: int | None) -> object:
            return "not computed" if value is None else value

        rows: list[tuple[str, object]] = [
            ("vertices", self.n),
            ("edges", self.edges),
            ("imn", self.imn),
            ("alpha", self.alpha),
            ("vc", self.vc),
            ("tau1", show(self.tau1)),
            ("tau2", show(self.tau2)),
            ("tau3", show(self.tau3)),
        ]
        rows.extend(self.verdicts.items())
        return rows


def _tau_or_none(
    fn: Callable[[Graph, EngineConfig], int], graph: Graph, config: EngineConfig
) -> int | None:
    try:
        return fn(graph, config)
    except BoundExceededError as exc:
        logger.info(f"skipping {fn.__name__}: {exc}")
        return None


def classify(
    pattern: Graph,
    config: EngineConfig | None = None,
    family: FamilyDeclaration | None = None,
    with_taus: bool = True,
) -> ParamReport:
    """Parameters of ``pattern`` and the exponents governing each counting problem.

    Exact subgraph counting runs in ``n^max(1, imn)`` and exact induced
    counting in ``n^alpha``; approximate subgraph counting follows tau1 and
    approximate induced counting follows imn. Homomorphism counting is
    bounded by tau1; its hardness side is open.
    """
    config = config or EngineConfig()
    imn = induced_matching_number(pattern, config)
    alpha = independence_number(pattern, config)
    report = ParamReport(
        n=pattern.n,
        edges=pattern.edge_count,
        imn=imn,
        alpha=alpha,
        vc=vertex_cover_number(pattern, config),
    )
    if with_taus:
        report.tau1 = _tau_or_none(tau1, pattern, config)
        report.tau2 = _tau_or_none(tau2, pattern, config)
        report.tau3 = _tau_or_none(tau3, pattern, config)
    approx_sub = "unknown" if report.tau1 is None else f"n^{report.tau1}"
    hom = "unknown" if report.tau1 is None else f"n^{report.tau1}"
    report.verdicts = {
        "sub_exponent": f"n^{max(1, imn)}",
        "indsub_exponent": f"n^{alpha}",
        "approx_sub_exponent": approx_sub,
        "approx_indsub_exponent": f"n^{imn + 1}",
        "hom_exponent": hom,
        "hom_hardness": HOM_HARDNESS,
    }
    if family is not None:
        report.verdicts.update(
            (f"family_{key}", value) for key, value in family.verdicts().items()
        )
        report.verdicts["family"] = family.name
    return report
