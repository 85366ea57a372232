"""Finite-dimensional unital commutative associative algebras over Q.

An algebra is given by structure constants ``mul[i][j]`` (the coordinates of
``e_i * e_j``) together with the coordinates of its unit.
"""
from __future__ import annotations

import enum
import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import DimensionMismatch, GradingViolation, NoSolution, NotGorenstein, NotLocal
from .exactnum import (
    ONE,
    ZERO,
    Matrix,
    Subspace,
    Vector,
    basis_vector,
    is_zero,
    kernel,
    lincomb,
    matrix_from_columns,
    rank,
    solve_affine,
    stack,
    vec,
    vscale,
    vsub,
    zeros,
)
from .report import CheckReport, check_identity


def bilinear(table, x: Vector, y: Vector, out_dim: int) -> Vector:
    """sum_ij x_i y_j table[i][j] for a table of output vectors."""
    out = [ZERO] * out_dim
    for i, xi in enumerate(x):
        if not xi:
            continue
        row = table[i]
        for j, yj in enumerate(y):
            if not yj:
                continue
            c = xi * yj
            for k, t in enumerate(row[j]):
                if t:
                    out[k] += c * t
    return tuple(out)


def _table(raw, d1: int, d2: int, d3: int, what: str) -> tuple:
    try:
        if len(raw) != d1 or any(len(r) != d2 for r in raw):
            raise DimensionMismatch(f"{what}: expected a {d1}x{d2}x{d3} array")
        out = tuple(tuple(vec(c) for c in r) for r in raw)
    except TypeError as exc:
        raise DimensionMismatch(f"{what}: not a nested array") from exc
    if any(len(c) != d3 for r in out for c in r):
        raise DimensionMismatch(f"{what}: expected a {d1}x{d2}x{d3} array")
    return out


@dataclass(frozen=True)
class CommAlgebra:
    mul: tuple
    unit: Vector
    names: tuple = ()

    def __post_init__(self):
        n = len(self.unit)
        object.__setattr__(self, "mul", _table(self.mul, n, n, n, "mul"))
        object.__setattr__(self, "unit", vec(self.unit))
        if not self.names:
            object.__setattr__(self, "names", tuple(f"e{i}" for i in range(n)))
        elif len(self.names) != n:
            raise DimensionMismatch(f"{len(self.names)} names for a {n}-dimensional algebra")
        else:
            object.__setattr__(self, "names", tuple(self.names))

    @property
    def dim(self) -> int:
        return len(self.unit)

    def basis(self, i: int) -> Vector:
        return basis_vector(self.dim, i)

    def product(self, x: Vector, y: Vector) -> Vector:
        return bilinear(self.mul, x, y, self.dim)

    def power(self, x: Vector, k: int) -> Vector:
        out = self.unit
        for _ in range(k):
            out = self.product(out, x)
        return out

    def mult_matrix(self, x: Vector) -> Matrix:
        """Matrix of y -> x*y in the standard basis."""
        return matrix_from_columns([self.product(x, self.basis(j)) for j in range(self.dim)], self.dim)

    def ideal_generated(self, vectors) -> Subspace:
        vectors = list(vectors)
        return Subspace.span(
            [self.product(self.basis(i), v) for v in vectors for i in range(self.dim)] + vectors,
            self.dim,
        )

    def is_ideal(self, s: Subspace) -> bool:
        return all(s.contains(self.product(self.basis(i), v)) for v in s.basis for i in range(self.dim))

    def product_space(self, s1: Subspace, s2: Subspace) -> Subspace:
        return Subspace.span([self.product(x, y) for x in s1.basis for y in s2.basis], self.dim)

    def fmt(self, v: Vector) -> str:
        return fmt_combination(v, self.names)


def fmt_combination(v: Vector, names: Sequence[str]) -> str:
    terms = []
    for c, name in zip(v, names):
        if not c:
            continue
        if c == 1:
            terms.append(name)
        elif c == -1:
            terms.append(f"-{name}")
        else:
            terms.append(f"{c}*{name}")
    if not terms:
        return "0"
    return " + ".join(terms).replace("+ -", "- ")


@dataclass(frozen=True)
class Grading:
    """Degree of each (homogeneous) basis vector."""

    degrees: tuple

    def __post_init__(self):
        object.__setattr__(self, "degrees", tuple(int(d) for d in self.degrees))
        if any(d < 0 for d in self.degrees):
            raise GradingViolation("degrees must be nonnegative")

    @property
    def top_degree(self) -> int:
        return max(self.degrees)

    def component(self, d: int) -> list[int]:
        return [i for i, di in enumerate(self.degrees) if di == d]


def grading_violations(a: CommAlgebra, g: Grading) -> list[str]:
    if len(g.degrees) != a.dim:
        raise DimensionMismatch(f"{len(g.degrees)} degrees for a {a.dim}-dimensional algebra")
    problems = []
    for i, j in itertools.product(range(a.dim), repeat=2):
        for k, c in enumerate(a.mul[i][j]):
            if c and g.degrees[k] != g.degrees[i] + g.degrees[j]:
                problems.append(f"{a.names[i]}*{a.names[j]} has a component in {a.names[k]}")
    deg0 = g.component(0)
    if Subspace.span([a.basis(i) for i in deg0], a.dim) != Subspace.span([a.unit], a.dim):
        problems.append("degree-0 component is not span{1}")
    return problems


# ---------------------------------------------------------------- axioms


def check_algebra(a: CommAlgebra) -> CheckReport:
    n, names = a.dim, [a.names] * 3
    report = CheckReport()
    check_identity(
        report, "alg.commutative", "x*y = y*x", (n, n),
        lambda i, j: vsub(a.mul[i][j], a.mul[j][i]), names,
    )
    check_identity(
        report, "alg.unit", "1*x = x", (n,),
        lambda i: vsub(a.product(a.unit, a.basis(i)), a.basis(i)), names,
    )
    check_identity(
        report, "alg.associative", "(x*y)*z = x*(y*z)", (n, n, n),
        lambda i, j, k: vsub(a.product(a.mul[i][j], a.basis(k)), a.product(a.basis(i), a.mul[j][k])),
        names,
    )
    return report


# --------------------------------------------------------------- radicals


def nilpotent_oracle(a: CommAlgebra, x: Vector) -> bool:
    """Brute force: x^(dim+1) == 0."""
    return is_zero(a.power(tuple(x), a.dim + 1))


def trace_form(a: CommAlgebra) -> Matrix:
    """tau(x, y) = trace of multiplication by x*y."""
    n = a.dim
    tr = [sum((a.mul[k][l][l] for l in range(n)), ZERO) for k in range(n)]
    return Matrix(
        tuple(tuple(sum((c * t for c, t in zip(a.mul[i][j], tr)), ZERO) for j in range(n)) for i in range(n)),
        n,
    )


def jacobson_radical(a: CommAlgebra) -> Subspace:
    """J(A) = N(A), the radical of the trace form (valid in characteristic 0)."""
    return kernel(trace_form(a))


def socle(a: CommAlgebra) -> Subspace:
    """Annihilator of the Jacobson radical."""
    j = jacobson_radical(a)
    if j.is_zero():
        return Subspace.full(a.dim)
    return kernel(stack((a.mult_matrix(u) for u in j.basis), a.dim))


# --------------------------------------------------------------- locality


class Locality(enum.Enum):
    LOCAL = "local"
    NOT_LOCAL = "not_local"
    INDETERMINATE_NON_SPLIT = "indeterminate_non_split"


class IdempotentKind(enum.Enum):
    ONLY_TRIVIAL = "only_trivial"
    NONTRIVIAL_FOUND = "nontrivial_found"
    INDETERMINATE = "indeterminate"


@dataclass(frozen=True)
class IdempotentStatus:
    kind: IdempotentKind
    witness: Vector | None = None

    def to_json(self) -> dict:
        return {"kind": self.kind.value, "witness": None if self.witness is None else [str(c) for c in self.witness]}


def minimal_polynomial(a: CommAlgebra, x: Vector) -> list[Fraction]:
    """Monic minimal polynomial of x, coefficients in increasing degree."""
    powers = [a.unit]
    while True:
        nxt = a.product(powers[-1], x)
        system = matrix_from_columns(powers, a.dim)
        try:
            sol = solve_affine(system, nxt)
        except NoSolution:
            powers.append(nxt)
            continue
        return [-c for c in sol.particular] + [ONE]


def _eval_poly(a: CommAlgebra, coeffs: Sequence, x: Vector) -> Vector:
    out = zeros(a.dim)
    for c in reversed(coeffs):
        out = a.product(out, x)
        out = tuple(o + Fraction(c) * u for o, u in zip(out, a.unit))
    return out


def _split_idempotent(a: CommAlgebra, x: Vector) -> Vector | None:
    """A nontrivial idempotent polynomial in x, if x's minimal polynomial has two coprime factors."""
    import sympy

    X = sympy.Symbol("X")
    coeffs = minimal_polynomial(a, x)
    m = sympy.Poly([sympy.Rational(c.numerator, c.denominator) for c in reversed(coeffs)], X, domain="QQ")
    _, factors = sympy.factor_list(m)
    if len(factors) < 2:
        return None
    f, e = factors[0]
    p = sympy.Poly(f, X, domain="QQ") ** e
    q = sympy.Poly(m.as_expr(), X, domain="QQ").exquo(p)
    # idem = 1 mod p, 0 mod q
    s, _, _ = q.gcdex(p)
    idem = (s * q).rem(m)
    cs = [Fraction(int(c.p), int(c.q)) for c in reversed(idem.all_coeffs())]
    return _eval_poly(a, cs, x)


def _probe_elements(a: CommAlgebra, tries: int = 24):
    n = a.dim
    for i in range(n):
        yield a.basis(i)
    rng = random.Random(0)
    for _ in range(tries):
        yield tuple(Fraction(rng.randint(-4, 4)) for _ in range(n))


def find_idempotent(a: CommAlgebra) -> Vector | None:
    """Search for an idempotent other than 0 and 1; None when none is detected."""
    for x in _probe_elements(a):
        e = _split_idempotent(a, x)
        if e is not None:
            other = vsub(a.unit, e)
            return max(e, other)
    return None


def is_local(a: CommAlgebra) -> Locality:
    if a.dim - jacobson_radical(a).dim == 1:
        return Locality.LOCAL
    if find_idempotent(a) is not None:
        return Locality.NOT_LOCAL
    return Locality.INDETERMINATE_NON_SPLIT


def idempotent_status(a: CommAlgebra) -> IdempotentStatus:
    if is_local(a) is Locality.LOCAL:
        return IdempotentStatus(IdempotentKind.ONLY_TRIVIAL)
    e = find_idempotent(a)
    if e is not None:
        return IdempotentStatus(IdempotentKind.NONTRIVIAL_FOUND, e)
    return IdempotentStatus(IdempotentKind.INDETERMINATE)


# -------------------------------------------------------------- Gorenstein


def is_gorenstein(a: CommAlgebra) -> bool:
    loc = is_local(a)
    if loc is not Locality.LOCAL:
        raise NotLocal(f"Gorenstein test needs a local algebra, got {loc.value}")
    return socle(a).dim == 1


def poincare_check(a: CommAlgebra, g: Grading) -> CheckReport:
    """Poincare duality: dim A_s = 1 and A_d x A_{s-d} -> A_s nondegenerate."""
    problems = grading_violations(a, g)
    if problems:
        raise GradingViolation("; ".join(problems))
    report = CheckReport()
    s = g.top_degree
    top = g.component(s)
    report.add("poincare.top_dim", len(top) == 1, "dim A_s = 1", top_dim=len(top))
    if len(top) == 1:
        k = top[0]
        for d in range(s // 2 + 1):
            lo, hi = g.component(d), g.component(s - d)
            gram = Matrix(tuple(tuple(a.mul[i][j][k] for j in hi) for i in lo), len(hi))
            r = rank(gram) if lo and hi else 0
            ok = len(lo) == len(hi) == r
            report.add(
                f"poincare.pairing_{d}", ok, "A_d x A_(s-d) -> A_s nondegenerate",
                degree=d, dims=[len(lo), len(hi)], gram_rank=r,
            )
    gor = is_gorenstein(a)
    report.add(
        "poincare.agrees_gorenstein", report.ok == gor, "Poincare duality <=> Gorenstein",
        gorenstein=gor,
    )
    return report


def choose_t(a: CommAlgebra) -> Vector:
    """Socle generator, scaled so its last nonzero coordinate is 1."""
    soc = socle(a)
    if soc.dim != 1:
        raise NotGorenstein(f"socle has dimension {soc.dim}")
    t = soc.basis[0]
    last = next(c for c in reversed(t) if c)
    return vscale(1 / last, t)


# ----------------------------------------------------------------- builders


def truncated_polynomial(n: int, var: str = "x") -> CommAlgebra:
    """Q[x]/(x^n) with basis 1, x, ..., x^(n-1)."""
    names = ["1"] + [var if i == 1 else f"{var}^{i}" for i in range(1, n)]
    mul = [[basis_vector(n, i + j) if i + j < n else zeros(n) for j in range(n)] for i in range(n)]
    return CommAlgebra(mul, basis_vector(n, 0), names)


def monomial_algebra(exponents: Sequence[tuple], variables: Sequence[str] = ("x", "y", "z")) -> CommAlgebra:
    """Q[vars]/I for a monomial ideal I, given the order ideal of surviving monomials."""
    exps = [tuple(e) for e in exponents]
    index = {e: i for i, e in enumerate(exps)}
    n = len(exps)
    if exps[0] != (0,) * len(exps[0]):
        raise DimensionMismatch("the first monomial must be 1")

    def name(e):
        parts = [v if k == 1 else f"{v}^{k}" for v, k in zip(variables, e) if k]
        return "".join(parts) or "1"

    mul = []
    for e in exps:
        row = []
        for f in exps:
            s = tuple(p + q for p, q in zip(e, f))
            row.append(basis_vector(n, index[s]) if s in index else zeros(n))
        mul.append(row)
    return CommAlgebra(mul, basis_vector(n, 0), [name(e) for e in exps])


def direct_product(a: CommAlgebra, b: CommAlgebra) -> CommAlgebra:
    n, m = a.dim, b.dim
    mul = []
    for i in range(n + m):
        row = []
        for j in range(n + m):
            if i < n and j < n:
                row.append(a.mul[i][j] + zeros(m))
            elif i >= n and j >= n:
                row.append(zeros(n) + b.mul[i - n][j - n])
            else:
                row.append(zeros(n + m))
        mul.append(row)
    names = [f"({x},0)" for x in a.names] + [f"(0,{y})" for y in b.names]
    return CommAlgebra(mul, a.unit + b.unit, names)


def quadratic_algebra(c0, c1, var: str = "a") -> CommAlgebra:
    """Q[a]/(a^2 - c1 a - c0) with basis 1, a."""
    c0, c1 = Fraction(c0), Fraction(c1)
    mul = [[(ONE, ZERO), (ZERO, ONE)], [(ZERO, ONE), (c0, c1)]]
    return CommAlgebra(mul, (ONE, ZERO), ["1", var])


def split_algebra(n: int = 2) -> CommAlgebra:
    """Q^n with orthogonal idempotent basis."""
    mul = [[basis_vector(n, i) if i == j else zeros(n) for j in range(n)] for i in range(n)]
    return CommAlgebra(mul, tuple(ONE for _ in range(n)), [f"e{i + 1}" for i in range(n)])


def span_of(a: CommAlgebra, *names: str) -> Subspace:
    return Subspace.span([a.basis(a.names.index(nm)) for nm in names], a.dim)


def combination(a: CommAlgebra, **coeffs) -> Vector:
    """Vector from name=coefficient pairs; use ``one`` for the basis element named "1"."""
    v = [ZERO] * a.dim
    for nm, c in coeffs.items():
        v[a.names.index("1" if nm == "one" else nm)] += Fraction(c)
    return tuple(v)


__all__ = [
    "CommAlgebra", "Grading", "Locality", "IdempotentKind", "IdempotentStatus",
    "check_algebra", "nilpotent_oracle", "jacobson_radical", "socle", "is_local",
    "idempotent_status", "is_gorenstein", "poincare_check", "choose_t", "trace_form",
    "minimal_polynomial", "find_idempotent", "grading_violations", "bilinear",
    "truncated_polynomial", "monomial_algebra", "direct_product", "quadratic_algebra",
    "split_algebra",
]
