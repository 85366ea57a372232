"""Finite-dimensional left Leibniz algebras: Leib, derived series, solvable radical."""
from __future__ import annotations

import enum
from dataclasses import dataclass

from .commalg import _table, bilinear
from .errors import DimensionMismatch
from .exactnum import (
    ZERO,
    Matrix,
    Subspace,
    Vector,
    basis_vector,
    kernel,
    vadd,
    vsub,
)
from .report import CheckReport, check_identity


@dataclass(frozen=True)
class LeibnizAlgebra:
    """``bracket[i][j]`` holds the coordinates of [e_i, e_j]."""

    bracket: tuple
    names: tuple = ()

    def __post_init__(self):
        n = len(self.bracket)
        object.__setattr__(self, "bracket", _table(self.bracket, n, n, n, "bracket") if n else ())
        names = tuple(self.names) or tuple(f"x{i}" for i in range(n))
        if len(names) != n:
            raise DimensionMismatch(f"{len(names)} names for a {n}-dimensional Leibniz algebra")
        object.__setattr__(self, "names", names)

    @property
    def dim(self) -> int:
        return len(self.bracket)

    def basis(self, i: int) -> Vector:
        return basis_vector(self.dim, i)

    def br(self, x: Vector, y: Vector) -> Vector:
        return bilinear(self.bracket, x, y, self.dim)

    def ad(self, x: Vector) -> Matrix:
        cols = [self.br(x, self.basis(j)) for j in range(self.dim)]
        return Matrix(tuple(tuple(c[i] for c in cols) for i in range(self.dim)), self.dim)

    def bracket_space(self, s1: Subspace, s2: Subspace) -> Subspace:
        return Subspace.span([self.br(x, y) for x in s1.basis for y in s2.basis], self.dim)


def check_leibniz(l: LeibnizAlgebra) -> CheckReport:
    n = l.dim
    report = CheckReport()
    e = l.basis
    check_identity(
        report, "lb.leibniz", "[a,[b,c]] = [[a,b],c] + [b,[a,c]]", (n, n, n),
        lambda i, j, k: vsub(
            l.br(e(i), l.bracket[j][k]),
            vadd(l.br(l.bracket[i][j], e(k)), l.br(e(j), l.bracket[i][k])),
        ),
        [l.names] * 3,
    )
    return report


def leib_subspace(l: LeibnizAlgebra) -> Subspace:
    """span{[x,x]}, by polarization span{[e_i,e_j] + [e_j,e_i] : i <= j}."""
    n = l.dim
    return Subspace.span(
        [vadd(l.bracket[i][j], l.bracket[j][i]) for i in range(n) for j in range(i, n)], n
    )


def derived_series(l: LeibnizAlgebra) -> list[Subspace]:
    """L^(1) = [L,L], L^(i+1) = [L^(i), L^(i)], up to and including the first repeated term."""
    current = Subspace.full(l.dim)
    series = []
    while True:
        nxt = l.bracket_space(current, current)
        if series and nxt == series[-1]:
            return series
        series.append(nxt)
        if nxt == current:
            return series
        current = nxt


def is_solvable(l: LeibnizAlgebra) -> bool:
    return derived_series(l)[-1].is_zero() if l.dim else True


def is_subspace_solvable(l: LeibnizAlgebra, s: Subspace) -> bool:
    current = s
    for _ in range(l.dim + 1):
        if current.is_zero():
            return True
        nxt = l.bracket_space(current, current)
        if nxt == current:
            return False
        current = nxt
    return current.is_zero()


class IdealKind(enum.Enum):
    TWO_SIDED = "two_sided"
    LEFT_ONLY = "left_only"
    RIGHT_ONLY = "right_only"
    NOT_IDEAL = "not_ideal"


def ideal_check(l: LeibnizAlgebra, s: Subspace) -> IdealKind:
    """Left ideal: [L, s] in s.  Right ideal: [s, L] in s."""
    if s.ambient_dim != l.dim:
        raise DimensionMismatch("subspace lives in a different space")
    left = all(s.contains(l.br(l.basis(i), v)) for v in s.basis for i in range(l.dim))
    right = all(s.contains(l.br(v, l.basis(i))) for v in s.basis for i in range(l.dim))
    if left and right:
        return IdealKind.TWO_SIDED
    if left:
        return IdealKind.LEFT_ONLY
    if right:
        return IdealKind.RIGHT_ONLY
    return IdealKind.NOT_IDEAL


def _quotient_lie(l: LeibnizAlgebra, leib: Subspace) -> tuple[LeibnizAlgebra, tuple[int, ...]]:
    """Structure constants of L / leib on the non-pivot coordinates."""
    keep = leib.complement_indices()
    q = len(keep)

    def coords(v):
        r = leib.reduce(v)
        return tuple(r[c] for c in keep)

    bracket = [[coords(l.bracket[i][j]) for j in keep] for i in keep]
    return LeibnizAlgebra(bracket, [l.names[i] for i in keep]), keep


def killing_form(l: LeibnizAlgebra) -> Matrix:
    ads = [l.ad(l.basis(i)) for i in range(l.dim)]
    prods = [[ads[i] @ ads[j] for j in range(l.dim)] for i in range(l.dim)]
    return Matrix(
        tuple(
            tuple(sum((prods[i][j].rows[k][k] for k in range(l.dim)), ZERO) for j in range(l.dim))
            for i in range(l.dim)
        ),
        l.dim,
    )


def lie_radical(l: LeibnizAlgebra) -> Subspace:
    """Solvable radical of a Lie algebra: the Killing-orthogonal of [L, L]."""
    if l.dim == 0:
        return Subspace.zero(0)
    derived = l.bracket_space(Subspace.full(l.dim), Subspace.full(l.dim))
    if derived.is_zero():
        return Subspace.full(l.dim)
    kappa = killing_form(l)
    rows = tuple(kappa.apply(d) for d in derived.basis)
    return kernel(Matrix(rows, l.dim))


def solvable_radical(l: LeibnizAlgebra) -> Subspace:
    """rad(L): preimage of the Lie radical of L / Leib(L)."""
    leib = leib_subspace(l)
    quotient, keep = _quotient_lie(l, leib)
    rad_q = lie_radical(quotient)
    lifted = []
    for v in rad_q.basis:
        w = [ZERO] * l.dim
        for c, idx in zip(v, keep):
            w[idx] = c
        lifted.append(tuple(w))
    return Subspace.span(lifted, l.dim) + leib


def is_semisimple_leibniz(l: LeibnizAlgebra) -> bool:
    return solvable_radical(l) == leib_subspace(l)


def radical_report(l: LeibnizAlgebra) -> CheckReport:
    """Post-conditions of :func:`solvable_radical`."""
    rad = solvable_radical(l)
    leib = leib_subspace(l)
    report = CheckReport()
    report.add("rad.is_ideal", ideal_check(l, rad) is IdealKind.TWO_SIDED, "rad(L) is an ideal")
    report.add("rad.is_solvable", is_subspace_solvable(l, rad), "rad(L) is solvable")
    report.add("rad.contains_leib", leib <= rad, "Leib(L) in rad(L)")
    return report

