"""Single-coefficient mutation testing of the axiom checkers."""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .algebroid import VertexAlgebroid, full_check
from .errors import DimensionMismatch
from .report import CheckReport, FAIL

DELTAS = tuple(Fraction(p, q) for p in (-2, -1, 1, 2, 3) for q in (1, 2))


@dataclass(frozen=True)
class Mutation:
    tensor: str
    index: tuple
    old: Fraction
    new: Fraction

    def apply(self, g: VertexAlgebroid) -> VertexAlgebroid:
        return g.with_entry(self.tensor, self.index, self.new)

    def to_json(self) -> dict:
        return {"tensor": self.tensor, "index": list(self.index), "old": str(self.old), "new": str(self.new)}


def failure_counts(report: CheckReport) -> dict[str, int]:
    return {e.check_id: e.values.get("failures_total", 1) for e in report.entries if e.status == FAIL}


def random_mutations(g: VertexAlgebroid, seed: int, count: int) -> list[Mutation]:
    rng = random.Random(seed)
    entries = list(g.tensor_entries())
    if not entries:
        raise DimensionMismatch("algebroid has no structure constants to mutate")
    out = []
    for _ in range(count):
        tensor, idx = rng.choice(entries)
        old = g.entry(tensor, idx)
        out.append(Mutation(tensor, idx, old, old + rng.choice(DELTAS)))
    return out


@dataclass(frozen=True)
class MutationOutcome:
    mutation: Mutation
    caught: bool
    new_failures: tuple
    consistent: bool  # the mutated structure passes every check

    @property
    def label(self) -> str:
        if self.caught:
            return "caught"
        return "uncaught-consistent" if self.consistent else "uncaught"

    def to_json(self) -> dict:
        return {**self.mutation.to_json(), "outcome": self.label, "new_failures": list(self.new_failures)}


def run_mutations(g: VertexAlgebroid, seed: int, count: int) -> tuple[dict, list[MutationOutcome]]:
    """A mutation is caught when some check fails on more basis tuples than on the original."""
    baseline = failure_counts(full_check(g))
    outcomes = []
    for mut in random_mutations(g, seed, count):
        counts = failure_counts(full_check(mut.apply(g)))
        worse = tuple(sorted(k for k, v in counts.items() if v > baseline.get(k, 0)))
        outcomes.append(MutationOutcome(mut, bool(worse), worse, not counts))
    return baseline, outcomes
