"""The L(1) action on an algebroid, the Heisenberg element search, and the
loop-module action of {L(m) : m >= -1} on U (x) Q[t, 1/t].

An L(1) map B -> A is stored as an n x m matrix whose column p is L(1) of the
p-th basis vector of B.  Unknown entries are indexed ``p * n + i``.
"""
from __future__ import annotations

import enum
import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .algebroid import VertexAlgebroid
from .commalg import IdempotentStatus, Locality, idempotent_status, is_local
from .errors import (
    BetaZero,
    DimensionMismatch,
    Inconsistent,
    NoGenerator,
    NoSolution,
    NotInSpan,
    PreconditionViolated,
    WindowOverflow,
)
from .exactnum import (
    ZERO,
    AffineSpace,
    Matrix,
    Subspace,
    Vector,
    basis_vector,
    is_zero,
    kernel,
    lincomb,
    matrix_from_columns,
    solve_affine,
    vadd,
    vscale,
    vsub,
    zeros,
)
from .forms import GorensteinContext, _require_valid
from .report import CheckReport, check_identity

# ----------------------------------------------------------------- L(1) maps


@dataclass(frozen=True)
class LOneMap:
    matrix: Matrix  # n x m

    @classmethod
    def from_unknowns(cls, x: Vector, n: int, m: int) -> "LOneMap":
        return cls(Matrix(tuple(tuple(x[p * n + i] for p in range(m)) for i in range(n)), m))

    @classmethod
    def zero(cls, n: int, m: int) -> "LOneMap":
        return cls(Matrix.zero(n, m))

    def apply(self, v: Vector) -> Vector:
        return self.matrix.apply(v)

    def column(self, p: int) -> Vector:
        return tuple(r[p] for r in self.matrix.rows)

    def unknowns(self) -> Vector:
        n, m = self.matrix.nrows, self.matrix.ncols
        return tuple(self.matrix.rows[i][p] for p in range(m) for i in range(n))

    def to_json(self):
        return self.matrix.to_json()


def _constraints(g: VertexAlgebroid, cols: list[Vector]):
    """Residual families (name, residual fn over basis tuples, dims) for L(1) given by its columns."""
    n, m = g.a_dim, g.b_dim
    L = lambda v: lincomb(v, cols, n)  # noqa: E731
    A, Bv = g.a, g.b
    return [
        ("l1.partial", "L(1) d(a) = 0", (n,), lambda i: L(g.partial[i])),
        (
            "l1.bracket", "L(1)(u_0 v) = (L(1)u)_0 v + u_0 L(1)v", (m, m),
            # (x)_0 v = -v_0 x for x in A
            lambda p, q: vsub(L(g.bracket[p][q]), vsub(g.anc(Bv(p), cols[q]), g.anc(Bv(q), cols[p]))),
        ),
        (
            "l1.action", "L(1)(a.v) = a*L(1)v - a_0 v", (n, m),
            # a_0 v = -v_0 a
            lambda i, p: vsub(L(g.action[i][p]), vadd(g.mul(A(i), cols[p]), g.anc(Bv(p), A(i)))),
        ),
    ]


def check_l1(g: VertexAlgebroid, l1: LOneMap) -> CheckReport:
    if l1.matrix.shape != (g.a_dim, g.b_dim):
        raise DimensionMismatch(f"L(1) must be {g.a_dim}x{g.b_dim}")
    cols = [l1.column(p) for p in range(g.b_dim)]
    r = CheckReport()
    for cid, anchor, dims, fn in _constraints(g, cols):
        check_identity(r, cid, anchor, dims, fn)
    return r


def _linear_system(g: VertexAlgebroid) -> tuple[Matrix, Vector]:
    """All constraint families as M x = rhs in the n*m unknowns."""
    n, m = g.a_dim, g.b_dim
    N = n * m

    def residuals(x: Vector) -> list:
        cols = [tuple(x[p * n:(p + 1) * n]) for p in range(m)]
        out = []
        for _, _, dims, fn in _constraints(g, cols):
            for idx in itertools.product(*(range(d) for d in dims)):
                out.extend(fn(*idx))
        return out

    base = residuals(zeros(N))
    columns = [tuple(r - b for r, b in zip(residuals(basis_vector(N, k)), base)) for k in range(N)]
    mat = matrix_from_columns(columns, len(base)) if N else Matrix(tuple(() for _ in base), 0)
    return mat, tuple(-b for b in base)


def solve_L1(g: VertexAlgebroid) -> AffineSpace:
    """Every L(1) : B -> A satisfying the three constraint families, as an affine space of unknowns."""
    mat, rhs = _linear_system(g)
    return solve_affine(mat, rhs)


class PinStatus(enum.Enum):
    UNIQUE = "unique"
    NON_UNIQUE = "non_unique"


@dataclass(frozen=True)
class PinResult:
    space: AffineSpace
    status: PinStatus
    l1: LOneMap  # the representative with free coordinates zeroed

    def to_json(self) -> dict:
        return {"status": self.status.value, "space": self.space.to_json(), "l1": self.l1.to_json()}


def pin_L1(g: VertexAlgebroid, solutions: AffineSpace, ctx: GorensteinContext) -> PinResult:
    """Intersect the solution family with B(1, L(1)u) = 0 for every basis u."""
    _require_valid(ctx)
    n, m = g.a_dim, g.b_dim
    N = n * m
    eps = ctx.B.apply(ctx.algebra.unit)  # B(1, x) = eps . x
    E = Matrix(
        tuple(tuple(eps[k - p * n] if p * n <= k < (p + 1) * n else ZERO for k in range(N)) for p in range(m)), N
    )
    H = solutions.homogeneous.basis
    if H:
        EH = E @ matrix_from_columns(H, N)
        try:
            c = solve_affine(EH, vscale(-1, E.apply(solutions.particular)))
        except NoSolution as exc:
            raise Inconsistent("B(1, L(1)u) = 0 contradicts the solution family") from exc
        particular = vadd(solutions.particular, lincomb(c.particular, H, N))
        homog = Subspace.span([lincomb(z, H, N) for z in c.homogeneous.basis], N)
    else:
        if any(E.apply(solutions.particular)):
            raise Inconsistent("B(1, L(1)u) = 0 fails on the unique solution")
        particular, homog = solutions.particular, solutions.homogeneous
    space = AffineSpace(particular, homog)
    status = PinStatus.UNIQUE if homog.is_zero() else PinStatus.NON_UNIQUE
    return PinResult(space, status, LOneMap.from_unknowns(particular, n, m))


# ---------------------------------------------------------------- Heisenberg


def rational_sqrt(x: Fraction) -> Fraction | None:
    if x < 0:
        return None
    p, q = math.isqrt(x.numerator), math.isqrt(x.denominator)
    if p * p == x.numerator and q * q == x.denominator:
        return Fraction(p, q)
    return None


@dataclass(frozen=True)
class HeisenbergWitness:
    g: Vector
    rho: Fraction
    beta: Fraction
    h_prime: Vector
    normalized: bool
    h: Vector | None = None
    checks: CheckReport = field(default_factory=CheckReport, compare=False)

    def to_json(self) -> dict:
        return {
            "g": [str(c) for c in self.g],
            "rho": str(self.rho),
            "beta": str(self.beta),
            "h_prime": [str(c) for c in self.h_prime],
            "normalized": self.normalized,
            "h": None if self.h is None else [str(c) for c in self.h],
        }


def heisenberg_search(ctx: GorensteinContext) -> HeisenbergWitness:
    """Find g with g_0 t = t, split g_1 g = rho t + beta 1, and form h' = g - rho/2 d(t)."""
    _require_valid(ctx)
    G = ctx.base
    a = ctx.algebra
    t = ctx.t
    try:
        g = solve_affine(G.anchor_on(t), t).particular
    except NoSolution as exc:
        raise NoGenerator("u_0 t = t has no solution (M is all of B)") from exc
    gg = G.pair(g, g)
    try:
        coeffs = solve_affine(matrix_from_columns([a.unit, t], a.dim), gg).particular
    except NoSolution as exc:
        raise NotInSpan(f"g_1 g = {G.fmt_a(gg)} is not in span{{1, t}}") from exc
    beta, rho = coeffs
    if beta == 0:
        raise BetaZero("g_1 g has no component along 1")
    dt = G.d(t)
    h = vsub(g, vscale(Fraction(rho, 2), dt))
    if not is_zero(G.br(h, h)):
        # (g + s d(t))_0 (g + s d(t)) = g_0 g + s d(t), linear in s
        try:
            s = solve_affine(matrix_from_columns([dt], G.b_dim), vscale(-1, G.br(g, g))).particular[0]
        except NoSolution as exc:
            raise PreconditionViolated("no element of g + Q d(t) has vanishing self-bracket") from exc
        h = vadd(g, vscale(s, dt))
    hh = G.pair(h, h)
    r = CheckReport()
    r.add("heis.g0t", G.anc(g, t) == t, "g_0 t = t")
    r.add("heis.h0t", G.anc(h, t) == t, "h'_0 t = t")
    r.add("heis.h0h", is_zero(G.br(h, h)), "h'_0 h' = 0")
    r.add("heis.h1h", hh == vscale(beta, a.unit), "h'_1 h' = beta 1", h1h=hh)
    if not r.ok:
        raise PreconditionViolated(f"Heisenberg relations fail: {', '.join(r.failed())}")
    root = rational_sqrt(beta)
    hn = None
    if root is not None:
        hn = vscale(1 / root, h)
        r.add("heis.normalized_h0h", is_zero(G.br(hn, hn)), "h_0 h = 0")
        r.add("heis.normalized_h1h", G.pair(hn, hn) == a.unit, "h_1 h = 1")
    return HeisenbergWitness(g, rho, beta, h, root is not None, hn, r)


# ------------------------------------------------------------- loop module


@dataclass(frozen=True)
class BModuleLoop:
    """U = U_0 + U_1 (L(0) = 0, 1), L(1): U_1 -> U_0, tensored with t^n for lo <= n <= hi.

    Basis index k < u0_dim lies in U_0, the rest in U_1.
    """

    u0_dim: int
    u1_dim: int
    l1_action: Matrix  # u0_dim x u1_dim
    window: tuple[int, int]

    def __post_init__(self):
        if self.l1_action.shape != (self.u0_dim, self.u1_dim):
            raise DimensionMismatch(f"L(1) must be {self.u0_dim}x{self.u1_dim}")

    @property
    def dim(self) -> int:
        return self.u0_dim + self.u1_dim

    def l0(self, k: int) -> int:
        return 0 if k < self.u0_dim else 1

    def l1(self, k: int) -> dict[int, Fraction]:
        if k < self.u0_dim:
            return {}
        col = k - self.u0_dim
        return {i: self.l1_action.rows[i][col] for i in range(self.u0_dim) if self.l1_action.rows[i][col]}

    def inside(self, n: int) -> bool:
        return self.window[0] <= n <= self.window[1]


LoopVector = dict  # {(basis index, power of t): coefficient}


def loop_virasoro(loop: BModuleLoop, m: int, elem: tuple[int, int]) -> LoopVector:
    """L(m)(u (x) t^n) for a basis vector u of U."""
    k, n = elem
    if m < -1:
        raise ValueError("only L(m) with m >= -1 act")
    if not (loop.inside(m + n) and loop.inside(m + n - 1)):
        raise WindowOverflow(f"L({m}) on t^{n} leaves the window {loop.window}")
    out: LoopVector = {}
    c = Fraction(-(m + n + 1) + (m + 1) * loop.l0(k))
    if c:
        out[(k, m + n)] = c
    half = Fraction(m * (m + 1), 2)
    if half:
        for i, v in loop.l1(k).items():
            out[(i, m + n - 1)] = out.get((i, m + n - 1), ZERO) + half * v
    return {key: v for key, v in out.items() if v}


Action = Callable[[BModuleLoop, int, tuple[int, int]], LoopVector]


def apply_loop(loop: BModuleLoop, m: int, vec_: LoopVector, action: Action = loop_virasoro) -> LoopVector:
    out: LoopVector = {}
    for key, c in vec_.items():
        for k2, v in action(loop, m, key).items():
            out[k2] = out.get(k2, ZERO) + c * v
    return {k: v for k, v in out.items() if v}


def safe_range(loop: BModuleLoop, max_mode: int) -> range:
    """Powers n for which L(p) L(q) (u (x) t^n) stays inside the window for -1 <= p, q <= max_mode."""
    lo, hi = loop.window
    return range(lo + 4, hi - 2 * max(max_mode, 0) + 1)


def virasoro_commutator_check(loop: BModuleLoop, max_mode: int, action: Action = loop_virasoro) -> CheckReport:
    """[L(p), L(q)] = (p - q) L(p + q) on every u (x) t^n of the safe sub-window."""
    ns = safe_range(loop, max_mode)
    if not ns:
        raise WindowOverflow(f"window {loop.window} too small for modes up to {max_mode}")
    failures, total = [], 0
    modes = range(-1, max_mode + 1)
    for p, q in itertools.product(modes, modes):
        for k in range(loop.dim):
            for n in ns:
                start = {(k, n): Fraction(1)}
                lhs = apply_loop(loop, p, apply_loop(loop, q, start, action), action)
                for key, v in apply_loop(loop, q, apply_loop(loop, p, start, action), action).items():
                    lhs[key] = lhs.get(key, ZERO) - v
                if p + q >= -1:
                    for key, v in apply_loop(loop, p + q, start, action).items():
                        lhs[key] = lhs.get(key, ZERO) - (p - q) * v
                res = {key: v for key, v in lhs.items() if v}
                if res:
                    total += 1
                    if len(failures) < 8:
                        failures.append({
                            "args": [p, q, k, n],
                            "residual": {f"u{kk}t^{nn}": str(v) for (kk, nn), v in sorted(res.items())},
                        })
    r = CheckReport()
    r.add(
        "vir.commutator", total == 0, "[L(p),L(q)] = (p-q) L(p+q)", failures,
        failures_total=total, modes=[-1, max_mode], n_range=[ns.start, ns.stop - 1],
    )
    return r


def random_loop(rng, max_dim: int = 3, window: tuple[int, int] = (-12, 12), bound: int = 5) -> BModuleLoop:
    u0 = rng.randint(0, max_dim)
    u1 = rng.randint(0, max_dim)
    l1 = Matrix(
        tuple(
            tuple(Fraction(rng.randint(-bound, bound), rng.randint(1, bound)) for _ in range(u1)) for _ in range(u0)
        ),
        u1,
    )
    return BModuleLoop(u0, u1, l1, window)


# ------------------------------------------------------- indecomposability


@dataclass(frozen=True)
class Verdict:
    locality: Locality
    idempotents: IdempotentStatus
    verdict: str
    note: str

    def to_json(self) -> dict:
        return {
            "locality": self.locality.value,
            "idempotents": self.idempotents.to_json(),
            "verdict": self.verdict,
            "note": self.note,
        }


NOTE = "for a semiconformal vertex algebra, V_0 local <=> V indecomposable"


def indecomposability_report(g) -> Verdict:
    """Accepts a VertexAlgebroid or a bare CommAlgebra."""
    a = g.algebra if isinstance(g, VertexAlgebroid) else g
    loc = is_local(a)
    verdict = {
        Locality.LOCAL: "indecomposable",
        Locality.NOT_LOCAL: "decomposable",
        Locality.INDETERMINATE_NON_SPLIT: "indeterminate",
    }[loc]
    return Verdict(loc, idempotent_status(a), verdict, NOTE)
