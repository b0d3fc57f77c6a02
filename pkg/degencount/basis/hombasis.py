"""Finite linear combinations of homomorphism counts with rational coefficients."""

from __future__ import annotations

from collections.abc import Callable, Iterable, Iterator, Mapping
from dataclasses import dataclass, field
from fractions import Fraction

import networkx as nx

from ..core.canonical import canonical_form, graph_from_label
from ..core.errors import BasisIntegrityError, FormatError
from ..core.graph import Graph


@dataclass(frozen=True)
class HomBasis:
    """Coefficients ``a(H')`` keyed by canonical label, with a representative per label.

    Zero coefficients are never stored.
    """

    terms: Mapping[str, Fraction]
    graphs: Mapping[str, Graph] = field(repr=False, compare=False)

    @classmethod
    def collect(cls, pieces: Iterable[tuple[str, Graph, Fraction]]) -> HomBasis:
        """Sum coefficients of equal labels and drop the ones that cancel."""
        terms: dict[str, Fraction] = {}
        graphs: dict[str, Graph] = {}
        for label, graph, coefficient in pieces:
            terms[label] = terms.get(label, Fraction(0)) + coefficient
            graphs.setdefault(label, graph)
        kept = {label: c for label, c in terms.items() if c != 0}
        return cls(kept, {label: graphs[label] for label in kept})

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self) -> Iterator[str]:
        return iter(self.ordered_labels())

    def __contains__(self, label: object) -> bool:
        return label in self.terms

    def coefficient(self, label: str) -> Fraction:
        return self.terms.get(label, Fraction(0))

    def ordered_labels(self) -> list[str]:
        """Labels by vertex count, then edge count, then label text."""
        return sorted(
            self.terms,
            key=lambda label: (self.graphs[label].n, self.graphs[label].edge_count, label),
        )

    def scaled(self, factor: Fraction) -> HomBasis:
        return HomBasis.collect(
            (label, self.graphs[label], c * factor) for label, c in self.terms.items()
        )

    def evaluate(self, counter: Callable[[Graph], int]) -> Fraction:
        """``sum(a(H') * counter(H'))`` over the terms."""
        return sum(
            (self.terms[label] * counter(self.graphs[label]) for label in self.ordered_labels()),
            Fraction(0),
        )

    def evaluate_integer(self, counter: Callable[[Graph], int]) -> int:
        """Evaluate and insist on an integer total.

        Raises:
            BasisIntegrityError: If the rational total does not cancel to an integer
        """
        total = self.evaluate(counter)
        if total.denominator != 1:
            raise BasisIntegrityError(f"basis evaluated to non-integer {total}")
        return total.numerator

    def dump(self) -> str:
        """One ``coefficient<TAB>label`` line per term."""
        return "".join(f"{self.terms[label]}\t{label}\n" for label in self.ordered_labels())


def parse_basis_dump(text: str) -> HomBasis:
    """Read the output of :meth:`HomBasis.dump`.

    Raises:
        FormatError: On a malformed line or label
    """
    pieces: list[tuple[str, Graph, Fraction]] = []
    for number, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        parts = line.split("\t")
        if len(parts) != 2:
            raise FormatError("expected coefficient<TAB>label", number)
        try:
            coefficient = Fraction(parts[0])
        except ValueError as exc:
            raise FormatError(f"bad coefficient {parts[0]!r}", number) from exc
        label = parts[1].strip()
        try:
            graph = graph_from_label(label)
        except (nx.NetworkXError, ValueError) as exc:
            raise FormatError(f"bad graph label {label!r}", number) from exc
        pieces.append((canonical_form(graph), graph, coefficient))
    return HomBasis.collect(pieces)
