"""Exact separation over the known inequality families.

Given any rational point in element space, scan the basic constraints and
every balanced or lifted biclique inequality up to a side-size cap, and
report all violated members sorted by decreasing violation.  The biclique
scan is exhaustive (the exact separation problem is hard in general), so the
cap is what keeps it affordable.
"""

from dataclasses import dataclass
from fractions import Fraction

from .graph import Graph, enumerate_induced_bicliques
from .ineq import (
    LinearInequality,
    balanced_biclique_inequalities,
    basic_inequalities,
    lifted_biclique_inequalities,
)


@dataclass(frozen=True)
class SeparationResult:
    """violated: (inequality, positive violation) pairs, most violated first,
    ties in canonical inequality order.  searched_families records what was
    scanned, with counts."""

    violated: tuple
    searched_families: tuple

    @property
    def is_empty(self):
        return not self.violated


def separate(g: Graph, z, max_side: int = 4) -> SeparationResult:
    """Find all family inequalities violated at z, up to biclique side max_side."""
    point = tuple(Fraction(c) for c in z)
    if len(point) != g.num_elements:
        raise ValueError(
            f"point has {len(point)} coordinates, graph has {g.num_elements} elements"
        )
    if max_side < 1:
        raise ValueError("max_side must be >= 1")

    candidates = []
    seen = set()

    def push(ineq):
        if ineq not in seen:
            seen.add(ineq)
            candidates.append(ineq)

    basics = basic_inequalities(g)
    for q in basics:
        push(q)
    balanced_count = 0
    for r in range(1, max_side + 1):
        for q in balanced_biclique_inequalities(g, r):
            balanced_count += 1
            push(q)
    lifted_count = 0
    for b in enumerate_induced_bicliques(g, max_side):
        if 1 < b.r < b.s:
            for q in lifted_biclique_inequalities(g, b):
                lifted_count += 1
                push(q)

    violated = []
    for q in candidates:
        amount = q.violation(point)
        if amount > 0:
            violated.append((q, amount))
    violated.sort(key=lambda pair: (-pair[1], pair[0].sort_key()))

    searched = (
        f"basic ({len(basics)})",
        f"balanced-biclique up to K_{{{max_side},{max_side}}} ({balanced_count})",
        f"lifted-biclique up to side {max_side} ({lifted_count})",
    )
    return SeparationResult(tuple(violated), searched)
