"""Check reports: ordered entries with stable ids, witnesses and computed values."""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .exactnum import Matrix, Subspace, AffineSpace, is_zero

PASS = "pass"
FAIL = "fail"
SKIPPED = "skipped"
INDETERMINATE = "indeterminate"

# failing tuples recorded per entry; the total count is always kept
MAX_WITNESSES = 8


def jsonable(value):
    """Convert computed values (fractions, subspaces, matrices, ...) to JSON-ready data."""
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, (Subspace, Matrix, AffineSpace)):
        return value.to_json()
    if hasattr(value, "to_json"):
        return value.to_json()
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]
    return value


@dataclass
class Entry:
    check_id: str
    status: str
    anchor: str = ""
    witnesses: list = field(default_factory=list)
    values: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def to_json(self) -> dict:
        return {
            "check_id": self.check_id,
            "status": self.status,
            "anchor": self.anchor,
            "witnesses": jsonable(self.witnesses),
            "values": jsonable(self.values),
        }


@dataclass
class CheckReport:
    entries: list = field(default_factory=list)

    def add(self, check_id: str, status, anchor: str = "", witnesses=None, **values) -> Entry:
        if isinstance(status, bool):
            status = PASS if status else FAIL
        e = Entry(check_id, status, anchor, list(witnesses or []), values)
        self.entries.append(e)
        return e

    def extend(self, other: "CheckReport") -> "CheckReport":
        self.entries.extend(other.entries)
        return self

    @property
    def ok(self) -> bool:
        return all(e.status in (PASS, SKIPPED) for e in self.entries)

    def failed(self) -> list[str]:
        return [e.check_id for e in self.entries if e.status == FAIL]

    def ids(self) -> list[str]:
        return [e.check_id for e in self.entries]

    def __getitem__(self, check_id: str) -> Entry:
        for e in self.entries:
            if e.check_id == check_id:
                return e
        raise KeyError(check_id)

    def __contains__(self, check_id: str) -> bool:
        return any(e.check_id == check_id for e in self.entries)

    def sorted(self) -> "CheckReport":
        """Entries ordered by check id; witnesses are already in basis-tuple order."""
        return CheckReport(sorted(self.entries, key=lambda e: e.check_id))

    def to_json(self) -> list:
        return [e.to_json() for e in self.entries]


def check_identity(
    report: CheckReport,
    check_id: str,
    anchor: str,
    dims: Sequence[int],
    residual: Callable[..., tuple],
    names: Sequence[Sequence[str]] | None = None,
) -> Entry:
    """Evaluate a multilinear identity on every tuple of basis indices.

    ``residual(*indices)`` returns LHS - RHS; by multilinearity, vanishing on
    all basis tuples is equivalent to the identity holding everywhere.
    """
    failures = []
    count = 0
    for idx in itertools.product(*(range(d) for d in dims)):
        res = residual(*idx)
        if not is_zero(res):
            count += 1
            if len(failures) < MAX_WITNESSES:
                args = [names[k][i] for k, i in enumerate(idx)] if names else list(idx)
                failures.append({"args": args, "residual": [str(a) for a in res]})
    return report.add(check_id, count == 0, anchor, failures, failures_total=count)


def all_pass(reports: Iterable[CheckReport]) -> bool:
    return all(r.ok for r in reports)
