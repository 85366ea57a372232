"""Invariant forms over a Gorenstein weight-0 algebra and the subspaces of B they cut out.

Given a socle generator t of A and a nondegenerate symmetric invariant form
B on A with B(1, t) = 1, this module builds

* the double form ((u, v)) = B(u_1 v, t) on B and its radical,
* M = {u : u_0 t = 0},  Ann(t_{-1}) = {u : t.u = 0},
* the ideal spanned by anchor images of the maximal ideal,
* the weight-one pairing <u|v> determined by an L(1) map,

together with checks of the relations between them.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import NamedTuple

from .algebroid import VertexAlgebroid, elem_a, elem_b, leibniz_of, mode
from .commalg import CommAlgebra, Grading, grading_violations, is_gorenstein, jacobson_radical, socle, choose_t
from .errors import (
    GradingViolation,
    InvalidLOne,
    MissingGorensteinData,
    NoSolution,
    NotGorenstein,
    NotSymmetric,
    PreconditionViolated,
)
from .exactnum import (
    ONE,
    ZERO,
    Matrix,
    Subspace,
    Vector,
    dot,
    form_radical,
    kernel,
    rank,
    solve_affine,
    vec,
    vscale,
    vsub,
)
from .leibniz import IdealKind, ideal_check
from .report import SKIPPED, CheckReport

# <u|v> = B(1, (-1)^wt(u) sum_i (1/i!) (L(1)^i u)_{...} v); on weight 1 only i <= 1 survives
# because L(1)^2 maps weight 1 to weight -1 = 0.
WEIGHT_ONE_TRUNCATION = 1


@dataclass(frozen=True)
class GorensteinContext:
    base: VertexAlgebroid
    t: Vector
    B: Matrix
    grading: Grading | None
    m_basis: Subspace

    @property
    def algebra(self) -> CommAlgebra:
        return self.base.algebra

    def form(self, x: Vector, y: Vector) -> object:
        return dot(x, self.B.apply(y))

    def epsilon(self, x: Vector):
        """epsilon(a) = B(1, a)."""
        return self.form(self.algebra.unit, x)

    def to_json(self) -> dict:
        return {"t": [str(c) for c in self.t], "B": self.B.to_json(), "m": self.m_basis.to_json()}


def synthesize_form(a: CommAlgebra, grading: Grading, t: Vector) -> Matrix:
    """The unique symmetric invariant form with B(1,t) = 1 pairing degrees d and s-d only."""
    n = a.dim
    if grading_violations(a, grading):
        raise GradingViolation("; ".join(grading_violations(a, grading)))
    s = grading.top_degree
    idx = lambda i, j: i * n + j  # noqa: E731
    rows, rhs = [], []

    def eq(coeffs: dict, value=ZERO):
        row = [ZERO] * (n * n)
        for k, c in coeffs.items():
            row[k] += c
        rows.append(tuple(row))
        rhs.append(value)

    for i, j in itertools.combinations(range(n), 2):
        eq({idx(i, j): ONE, idx(j, i): -ONE})
    for i, j, k in itertools.product(range(n), repeat=3):
        # B(e_i * e_j, e_k) - B(e_i, e_j * e_k)
        coeffs: dict = {}
        for l, c in enumerate(a.mul[i][j]):
            if c:
                coeffs[idx(l, k)] = coeffs.get(idx(l, k), ZERO) + c
        for l, c in enumerate(a.mul[j][k]):
            if c:
                coeffs[idx(i, l)] = coeffs.get(idx(i, l), ZERO) - c
        if any(coeffs.values()):
            eq(coeffs)
    for i, j in itertools.product(range(n), repeat=2):
        if grading.degrees[i] + grading.degrees[j] != s:
            eq({idx(i, j): ONE})
    eq({idx(k, l): a.unit[k] * t[l] for k in range(n) for l in range(n) if a.unit[k] and t[l]}, ONE)
    try:
        sol = solve_affine(Matrix(tuple(rows), n * n), rhs)
    except NoSolution as exc:
        raise NotGorenstein("no invariant form with B(1,t) = 1 respects the grading") from exc
    if sol.dim:
        raise MissingGorensteinData(f"invariant form not unique ({sol.dim} free parameters); supply B")
    x = sol.particular
    return Matrix(tuple(tuple(x[idx(i, j)] for j in range(n)) for i in range(n)), n)


def make_context(
    g: VertexAlgebroid, t=None, B=None, grading: Grading | None = None
) -> GorensteinContext:
    """Assemble a context; t defaults to the socle generator, B is synthesized from the grading.

    t is rescaled so that B(1, t) = 1.
    """
    a = g.algebra
    if not is_gorenstein(a):
        raise NotGorenstein(f"socle has dimension {socle(a).dim}")
    t = choose_t(a) if t is None else vec(t)
    if B is None:
        if grading is None:
            raise MissingGorensteinData("no form B and no grading to synthesize one from")
        B = synthesize_form(a, grading, t)
    elif not isinstance(B, Matrix):
        B = Matrix.of(B, a.dim)
    b1t = dot(a.unit, B.apply(t))
    if b1t == 0:
        raise NotGorenstein("B(1, t) = 0")
    if b1t != 1:
        t = vscale(1 / b1t, t)
    return GorensteinContext(g, t, B, grading, jacobson_radical(a))


def validate_context(ctx: GorensteinContext) -> CheckReport:
    a, B, n = ctx.algebra, ctx.B, ctx.algebra.dim
    r = CheckReport()
    try:
        symmetric = B.is_symmetric()
    except NotSymmetric:  # pragma: no cover
        symmetric = False
    r.add("ctx.B_symmetric", symmetric, "B(x,y) = B(y,x)")
    r.add("ctx.B_nondegenerate", rank(B) == n, "B nondegenerate", rank=rank(B))
    bad = []
    for i, j, k in itertools.product(range(n), repeat=3):
        lhs = ctx.form(a.mul[i][j], a.basis(k))
        rhs = ctx.form(a.basis(i), a.mul[j][k])
        if lhs != rhs:
            bad.append({"args": [a.names[i], a.names[j], a.names[k]], "residual": [str(lhs - rhs)]})
    r.add("ctx.B_invariant", not bad, "B(x*y,z) = B(x,y*z)", bad[:8], failures_total=len(bad))
    r.add("ctx.B_1t", ctx.epsilon(ctx.t) == 1, "B(1,t) = 1", B_1t=ctx.epsilon(ctx.t))
    r.add(
        "ctx.t_socle", Subspace.span([ctx.t], n) == socle(a), "span{t} = soc(A)",
        t=ctx.t, socle=socle(a),
    )
    r.add("ctx.m_jacobson", ctx.m_basis == jacobson_radical(a), "m = J(A)", m=ctx.m_basis)
    if ctx.grading is None:
        r.add("ctx.degree_pairing", SKIPPED, "B(A_d, A_d') = 0 unless d+d' = s", reason="no grading")
    else:
        degs, s = ctx.grading.degrees, ctx.grading.top_degree
        off = [
            [a.names[i], a.names[j]]
            for i, j in itertools.product(range(n), repeat=2)
            if degs[i] + degs[j] != s and B[i, j] != 0
        ]
        r.add("ctx.degree_pairing", not off, "B(A_d, A_d') = 0 unless d+d' = s", off[:8], failures_total=len(off))
    return r


def _require_valid(ctx: GorensteinContext) -> None:
    report = validate_context(ctx)
    if not report.ok:
        raise PreconditionViolated(f"invalid Gorenstein context: {', '.join(report.failed())}")


class IdealA(NamedTuple):
    space: Subspace
    is_ideal: bool
    proper: bool


def ideal_a(ctx: GorensteinContext) -> IdealA:
    """span{v_0 a : v in B, a in m}."""
    g = ctx.base
    space = Subspace.span(
        [g.anc(g.b(p), x) for p in range(g.b_dim) for x in ctx.m_basis.basis], g.a_dim
    )
    return IdealA(space, ctx.algebra.is_ideal(space), not space.is_full())


def v0t_check(ctx: GorensteinContext) -> CheckReport:
    """u_0 t = mu_u t for every basis u; records each mu_u."""
    if not ideal_a(ctx).proper:
        raise PreconditionViolated("anchor images of m span all of A")
    g = ctx.base
    tline = Subspace.span([ctx.t], g.a_dim)
    k = next(i for i, c in enumerate(ctx.t) if c)
    mus, bad = {}, []
    for p in range(g.b_dim):
        img = g.anc(g.b(p), ctx.t)
        if tline.contains(img):
            mus[g.names[p]] = img[k] / ctx.t[k]
        else:
            bad.append({"args": [g.names[p]], "residual": [str(c) for c in img]})
    r = CheckReport()
    r.add("v0t.in_line", not bad, "u_0 t in Qt", bad, mu=mus)
    return r


def double_form(ctx: GorensteinContext) -> Matrix:
    """Gram of ((u,v)) = B(u_1 v, t)."""
    g = ctx.base
    bt = ctx.B.apply(ctx.t)
    gram = Matrix(
        tuple(tuple(dot(g.pairing[p][q], bt) for q in range(g.b_dim)) for p in range(g.b_dim)), g.b_dim
    )
    if not gram.is_symmetric():
        raise NotSymmetric("double form is not symmetric (pairing not symmetric)")
    return gram


def rad_double_form(ctx: GorensteinContext) -> Subspace:
    return form_radical(double_form(ctx))


def partial_image(g: VertexAlgebroid) -> Subspace:
    return Subspace.span(g.partial, g.b_dim)


def m_subspace(ctx: GorensteinContext) -> Subspace:
    """M = {u : u_0 t = 0}."""
    return kernel(ctx.base.anchor_on(ctx.t))


def ann_t(ctx: GorensteinContext) -> Subspace:
    """Ann(t_{-1}) = {u : t.u = 0}."""
    return kernel(ctx.base.action_by(ctx.t))


def pairing_v1(ctx: GorensteinContext, l1) -> Matrix:
    """Gram of <u|v> = -B(1, u_1 v + (L(1)u)_0 v) on B, with (x)_0 v = -v_0 x for x in A."""
    from .semiconformal import check_l1

    g = ctx.base
    report = check_l1(g, l1)
    if not report.ok:
        raise InvalidLOne(f"L(1) violates {', '.join(report.failed())}")
    one = ctx.algebra.unit
    rows = []
    for p in range(g.b_dim):
        lu = l1.apply(g.b(p))
        row = []
        for q in range(g.b_dim):
            val = g.pairing[p][q]
            if WEIGHT_ONE_TRUNCATION >= 1:
                val = vsub(val, g.anc(g.b(q), lu))
            row.append(-ctx.form(one, val))
        rows.append(tuple(row))
    return Matrix(tuple(rows), g.b_dim)


def _left_perp(gram: Matrix, vectors) -> Subspace:
    """{u : <u|x> = 0 for x in vectors}."""
    vectors = list(vectors)
    n = gram.nrows
    if not vectors:
        return Subspace.full(n)
    return kernel(Matrix(tuple(gram.apply(x) for x in vectors), n))


def _in_right_radical(gram: Matrix, x: Vector) -> bool:
    """<x|v> = 0 for every v."""
    return not any(gram.transpose().apply(x))


def w_subspace(ctx: GorensteinContext, gram: Matrix) -> Subspace:
    """W = {w : <t.w|v> = 0 for all v}."""
    g = ctx.base
    ta = g.action_by(ctx.t)
    # <t.w|v> = (T w)^T P e_v, i.e. w in ker(P^T T)
    return kernel(gram.transpose() @ ta)


def perp_lemma_suite(ctx: GorensteinContext, l1=None) -> CheckReport:
    """Relations between rad((,)), M, Ann(t_{-1}) and the pairing <.|.>.

    Sub-checks that need <.|.> are skipped when no L(1) map is supplied.
    """
    g = ctx.base
    _require_valid(ctx)
    ia = ideal_a(ctx)
    if not ia.proper:
        raise PreconditionViolated("anchor images of m span all of A")
    rad = rad_double_form(ctx)
    M = m_subspace(ctx)
    ann = ann_t(ctx)
    dA = partial_image(g)
    lb = leibniz_of(g)
    dt = g.d(ctx.t)
    r = CheckReport()
    r.add("perp.partial_in_rad", dA <= rad, "d(A) in rad((,))", rad=rad)
    r.add("perp.rad_two_sided", ideal_check(lb, rad) is IdealKind.TWO_SIDED, "rad((,)) two-sided ideal")
    r.add("perp.m_codim", M.codim <= 1, "codim M <= 1", M=M, codim=M.codim)
    r.add("perp.partial_in_m", dA <= M, "d(A) in M")
    kind = ideal_check(lb, ann)
    r.add(
        "perp.ann_left_ideal", kind in (IdealKind.LEFT_ONLY, IdealKind.TWO_SIDED),
        "Ann(t_{-1}) left ideal", Ann=ann, kind=kind.value,
    )
    if l1 is None:
        for cid, anchor in (
            ("perp.t_minus2_m", "t_{-2} m in V_1-perp"),
            ("perp.m_is_dt_perp", "M = (d t)-perp"),
            ("perp.rad_via_u_minus1_t", "u in rad((,)) iff u_{-1} t in V_1-perp"),
            ("perp.rad_equals_W", "L(1)B in m => rad((,)) = W"),
        ):
            r.add(cid, SKIPPED, anchor, reason="no L(1) map")
        return r
    gram = pairing_v1(ctx, l1)
    bad = [
        ctx.algebra.names[i]
        for i, x in enumerate(ctx.m_basis.basis)
        if not _in_right_radical(gram, mode(g, elem_a(ctx.t), -2, elem_a(x)).coords)
    ]
    r.add("perp.t_minus2_m", not bad, "t_{-2} m in V_1-perp", [{"args": [str(i)]} for i in bad])
    dt_perp = _left_perp(gram, [dt])
    r.add("perp.m_is_dt_perp", M == dt_perp, "M = (d t)-perp", M=M, perp=dt_perp)
    # u_{-1} t = t.u + d(u_0 t)
    u_minus1_t = lambda u: mode(g, elem_b(u), -1, elem_a(ctx.t)).coords  # noqa: E731
    lin = Matrix(
        tuple(tuple(c) for c in zip(*[gram.transpose().apply(u_minus1_t(g.b(p))) for p in range(g.b_dim)])),
        g.b_dim,
    ) if g.b_dim else Matrix((), 0)
    via = kernel(lin)
    r.add("perp.rad_via_u_minus1_t", via == rad, "u in rad((,)) iff u_{-1} t in V_1-perp", via=via, rad=rad)
    l1_in_m = all(ctx.m_basis.contains(l1.apply(g.b(p))) for p in range(g.b_dim))
    if l1_in_m:
        W = w_subspace(ctx, gram)
        r.add("perp.rad_equals_W", W == rad, "L(1)B in m => rad((,)) = W", W=W, rad=rad)
    else:
        r.add("perp.rad_equals_W", SKIPPED, "L(1)B in m => rad((,)) = W", reason="L(1)B not inside m")
    return r


def self_duality_dim(g: VertexAlgebroid, l1, ctx: GorensteinContext | None = None) -> int:
    """dim A / L(1)B; with a context, also insists on B(1, L(1)u) = 0 for every u."""
    images = [l1.apply(g.b(p)) for p in range(g.b_dim)]
    if ctx is not None:
        bad = [g.names[p] for p, x in enumerate(images) if ctx.epsilon(x) != 0]
        if bad:
            raise InvalidLOne(f"B(1, L(1)u) != 0 for u in {bad}")
    return g.a_dim - Subspace.span(images, g.a_dim).dim
