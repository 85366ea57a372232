"""Vertex A-algebroids and the 1-truncated conformal algebras A + B they define.

Tensor conventions (A has basis a_0..a_{n-1}, B has basis b_0..b_{m-1}):

=========  ==================  ============================
field      index              meaning
=========  ==================  ============================
partial    [i] -> B            d(a_i)
action     [i][p] -> B         a_i . b_p         (mode -1)
bracket    [p][q] -> B         [b_p, b_q] = b_p _0 b_q
anchor     [p][i] -> A         pi(b_p)(a_i) = b_p _0 a_i
pairing    [p][q] -> A         <b_p, b_q> = b_p _1 b_q
=========  ==================  ============================

``a _0 u`` is never stored; it is ``-(u _0 a)``.
"""
from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Sequence

from .commalg import CommAlgebra, _table, bilinear, check_algebra, fmt_combination
from .errors import DimensionMismatch, NotSl2Triple, OutOfWeightRange
from .exactnum import (
    ZERO,
    Matrix,
    Subspace,
    Vector,
    basis_vector,
    is_zero,
    kernel,
    lincomb,
    vadd,
    vec,
    vscale,
    vsub,
    zeros,
)
from .leibniz import LeibnizAlgebra, check_leibniz, is_semisimple_leibniz, leib_subspace
from .report import CheckReport, check_identity

TENSORS = ("mul", "partial", "action", "bracket", "anchor", "pairing")


@dataclass(frozen=True)
class VertexAlgebroid:
    algebra: CommAlgebra
    partial: tuple
    action: tuple
    bracket: tuple
    anchor: tuple
    pairing: tuple
    names: tuple = ()

    def __post_init__(self):
        n, m = self.algebra.dim, self.b_dim
        if len(self.partial) != n or any(len(r) != m for r in self.partial):
            raise DimensionMismatch(f"partial: expected a {n}x{m} array")
        object.__setattr__(self, "partial", tuple(vec(r) for r in self.partial))
        object.__setattr__(self, "action", _table(self.action, n, m, m, "action"))
        object.__setattr__(self, "bracket", _table(self.bracket, m, m, m, "bracket"))
        object.__setattr__(self, "anchor", _table(self.anchor, m, n, n, "anchor"))
        object.__setattr__(self, "pairing", _table(self.pairing, m, m, n, "pairing"))
        names = tuple(self.names) or tuple(f"b{p}" for p in range(m))
        if len(names) != m:
            raise DimensionMismatch(f"{len(names)} names for a {m}-dimensional B")
        object.__setattr__(self, "names", names)

    @property
    def b_dim(self) -> int:
        if self.partial:
            return len(self.partial[0])
        return len(self.bracket)

    @property
    def a_dim(self) -> int:
        return self.algebra.dim

    # basic operations -------------------------------------------------

    def a(self, i: int) -> Vector:
        return basis_vector(self.a_dim, i)

    def b(self, p: int) -> Vector:
        return basis_vector(self.b_dim, p)

    def d(self, x: Vector) -> Vector:
        return lincomb(x, self.partial, self.b_dim)

    def act(self, x: Vector, v: Vector) -> Vector:
        return bilinear(self.action, x, v, self.b_dim)

    def br(self, u: Vector, v: Vector) -> Vector:
        return bilinear(self.bracket, u, v, self.b_dim)

    def anc(self, u: Vector, x: Vector) -> Vector:
        return bilinear(self.anchor, u, x, self.a_dim)

    def pair(self, u: Vector, v: Vector) -> Vector:
        return bilinear(self.pairing, u, v, self.a_dim)

    def mul(self, x: Vector, y: Vector) -> Vector:
        return self.algebra.product(x, y)

    def partial_matrix(self) -> Matrix:
        """Matrix of d : A -> B (columns indexed by A)."""
        return Matrix(tuple(tuple(self.partial[i][p] for i in range(self.a_dim)) for p in range(self.b_dim)), self.a_dim)

    def anchor_on(self, x: Vector) -> Matrix:
        """Matrix of u -> pi(u)(x), B -> A."""
        cols = [self.anc(self.b(p), x) for p in range(self.b_dim)]
        return Matrix(tuple(tuple(c[i] for c in cols) for i in range(self.a_dim)), self.b_dim)

    def action_by(self, x: Vector) -> Matrix:
        """Matrix of v -> x . v, B -> B."""
        cols = [self.act(x, self.b(p)) for p in range(self.b_dim)]
        return Matrix(tuple(tuple(c[q] for c in cols) for q in range(self.b_dim)), self.b_dim)

    def fmt_a(self, x: Vector) -> str:
        return fmt_combination(x, self.algebra.names)

    def fmt_b(self, v: Vector) -> str:
        return fmt_combination(v, self.names)

    def with_entry(self, tensor: str, index: Sequence[int], value) -> "VertexAlgebroid":
        """Copy with one structure constant replaced (used by mutation testing)."""
        if tensor == "mul":
            alg = self.algebra
            return replace(self, algebra=CommAlgebra(_set(alg.mul, index, value), alg.unit, alg.names))
        if tensor not in TENSORS:
            raise KeyError(tensor)
        return replace(self, **{tensor: _set(getattr(self, tensor), index, value)})

    def tensor_entries(self):
        """(tensor, index) for every structure constant, in a fixed order."""
        n, m = self.a_dim, self.b_dim
        shapes = {
            "mul": (n, n, n), "partial": (n, m), "action": (n, m, m),
            "bracket": (m, m, m), "anchor": (m, n, n), "pairing": (m, m, n),
        }
        import itertools

        for t in TENSORS:
            for idx in itertools.product(*(range(k) for k in shapes[t])):
                yield t, idx

    def entry(self, tensor: str, index: Sequence[int]) -> Fraction:
        data = self.algebra.mul if tensor == "mul" else getattr(self, tensor)
        for k in index:
            data = data[k]
        return data


def _set(data, index, value):
    if not index:
        return Fraction(value)
    i = index[0]
    return tuple(_set(x, index[1:], value) if k == i else x for k, x in enumerate(data))


def trivial_algebroid(algebra: CommAlgebra) -> VertexAlgebroid:
    n = algebra.dim
    return VertexAlgebroid(algebra, tuple(() for _ in range(n)), tuple(() for _ in range(n)), (), (), ())


def leibniz_of(g: VertexAlgebroid) -> LeibnizAlgebra:
    return LeibnizAlgebra(g.bracket, g.names)


def ker_partial(g: VertexAlgebroid) -> Subspace:
    return kernel(g.partial_matrix())


def ker_partial_is_scalars(g: VertexAlgebroid) -> bool:
    return ker_partial(g) == Subspace.span([g.algebra.unit], g.a_dim)


# ------------------------------------------------------------ axiom suites


def check_vertex_algebroid(g: VertexAlgebroid) -> CheckReport:
    """The vertex algebroid axioms, each under a stable ``va.*`` id."""
    n, m = g.a_dim, g.b_dim
    A, B = g.a, g.b
    one = g.algebra.unit
    an, bn = g.algebra.names, g.names
    r = CheckReport()
    check_identity(r, "va.unit_action", "1.v = v", (m,), lambda p: vsub(g.act(one, B(p)), B(p)), [bn])
    check_identity(
        r, "va.leibniz", "[u,[v,w]] = [[u,v],w] + [v,[u,w]]", (m, m, m),
        lambda p, q, s: vsub(
            g.br(B(p), g.bracket[q][s]), vadd(g.br(g.bracket[p][q], B(s)), g.br(B(q), g.bracket[p][s]))
        ),
        [bn] * 3,
    )
    check_identity(
        r, "va.anchor_derivation", "pi(u)(a*a') = a*pi(u)(a') + pi(u)(a)*a'", (m, n, n),
        lambda p, i, j: vsub(
            g.anc(B(p), g.mul(A(i), A(j))), vadd(g.mul(A(i), g.anchor[p][j]), g.mul(g.anchor[p][i], A(j)))
        ),
        [bn, an, an],
    )
    check_identity(
        r, "va.anchor_hom", "pi([u,v]) = [pi(u), pi(v)]", (m, m, n),
        lambda p, q, i: vsub(
            g.anc(g.bracket[p][q], A(i)),
            vsub(g.anc(B(p), g.anchor[q][i]), g.anc(B(q), g.anchor[p][i])),
        ),
        [bn, bn, an],
    )
    check_identity(
        r, "va.pairing_symmetric", "<u,v> = <v,u>", (m, m),
        lambda p, q: vsub(g.pairing[p][q], g.pairing[q][p]), [bn, bn],
    )
    check_identity(
        r, "va.anchor_partial", "pi(d a) = 0", (n, n),
        lambda i, j: g.anc(g.partial[i], A(j)), [an, an],
    )
    check_identity(
        r, "va.action_assoc", "a.(a'.v) - (a*a').v = pi(v)(a).d(a') + pi(v)(a').d(a)", (n, n, m),
        lambda i, j, p: vsub(
            vsub(g.act(A(i), g.action[j][p]), g.act(g.mul(A(i), A(j)), B(p))),
            vadd(g.act(g.anchor[p][i], g.partial[j]), g.act(g.anchor[p][j], g.partial[i])),
        ),
        [an, an, bn],
    )
    check_identity(
        r, "va.bracket_action", "[u,a.v] = pi(u)(a).v + a.[u,v]", (m, n, m),
        lambda p, i, q: vsub(
            g.br(B(p), g.action[i][q]), vadd(g.act(g.anchor[p][i], B(q)), g.act(A(i), g.bracket[p][q]))
        ),
        [bn, an, bn],
    )
    check_identity(
        r, "va.bracket_symmetric", "[u,v] + [v,u] = d<u,v>", (m, m),
        lambda p, q: vsub(vadd(g.bracket[p][q], g.bracket[q][p]), g.d(g.pairing[p][q])), [bn, bn],
    )
    check_identity(
        r, "va.anchor_linear", "pi(a.v) = a pi(v)", (n, m, n),
        lambda i, p, j: vsub(g.anc(g.action[i][p], A(j)), g.mul(A(i), g.anchor[p][j])),
        [an, bn, an],
    )
    check_identity(
        r, "va.pairing_action", "<a.u,v> = a*<u,v> - pi(u)(pi(v)(a))", (n, m, m),
        lambda i, p, q: vsub(
            g.pair(g.action[i][p], B(q)), vsub(g.mul(A(i), g.pairing[p][q]), g.anc(B(p), g.anchor[q][i]))
        ),
        [an, bn, bn],
    )
    check_identity(
        r, "va.pairing_invariant", "pi(v)(<v1,v2>) = <[v,v1],v2> + <v1,[v,v2]>", (m, m, m),
        lambda p, q, s: vsub(
            g.anc(B(p), g.pairing[q][s]), vadd(g.pair(g.bracket[p][q], B(s)), g.pair(B(q), g.bracket[p][s]))
        ),
        [bn] * 3,
    )
    check_identity(
        r, "va.partial_derivation", "d(a*a') = a.d(a') + a'.d(a)", (n, n),
        lambda i, j: vsub(g.d(g.mul(A(i), A(j))), vadd(g.act(A(i), g.partial[j]), g.act(A(j), g.partial[i]))),
        [an, an],
    )
    check_identity(
        r, "va.bracket_partial", "[v,d(a)] = d(pi(v)(a))", (m, n),
        lambda p, i: vsub(g.br(B(p), g.partial[i]), g.d(g.anchor[p][i])), [bn, an],
    )
    check_identity(
        r, "va.pairing_partial", "<v,d(a)> = pi(v)(a)", (m, n),
        lambda p, i: vsub(g.pair(B(p), g.partial[i]), g.anchor[p][i]), [bn, an],
    )
    return r.sorted()


# The 1-truncated conformal algebra C = A + B, elements stored as A-coords + B-coords.


def _split(g: VertexAlgebroid, x: Vector) -> tuple[Vector, Vector]:
    return x[: g.a_dim], x[g.a_dim:]


def c_mode0(g: VertexAlgebroid, x: Vector, y: Vector) -> Vector:
    """x _0 y on C: a_0 a' = 0, u_0 a = pi(u)(a), a_0 u = -pi(u)(a), u_0 v = [u,v]."""
    xa, xb = _split(g, x)
    ya, yb = _split(g, y)
    a_part = vsub(g.anc(xb, ya), g.anc(yb, xa))
    return a_part + g.br(xb, yb)


def c_mode1(g: VertexAlgebroid, x: Vector, y: Vector) -> Vector:
    """x _1 y on C: only u_1 v = <u,v> survives (other products have negative weight)."""
    _, xb = _split(g, x)
    _, yb = _split(g, y)
    return g.pair(xb, yb) + zeros(g.b_dim)


def c_partial(g: VertexAlgebroid, x: Vector) -> Vector:
    xa, _ = _split(g, x)
    return zeros(g.a_dim) + g.d(xa)


def c_a(g: VertexAlgebroid, x: Vector) -> Vector:
    return tuple(x) + zeros(g.b_dim)


def c_b(g: VertexAlgebroid, v: Vector) -> Vector:
    return zeros(g.a_dim) + tuple(v)


def check_truncated_conformal(g: VertexAlgebroid) -> CheckReport:
    n, m = g.a_dim, g.b_dim
    N = n + m
    A = lambda i: c_a(g, g.a(i))  # noqa: E731
    B = lambda p: c_b(g, g.b(p))  # noqa: E731
    C = lambda k: basis_vector(N, k)  # noqa: E731
    an, bn = g.algebra.names, g.names
    cn = tuple(an) + tuple(bn)
    modes = (c_mode0, c_mode1)
    r = CheckReport()
    check_identity(
        r, "tc.partial_mode0", "(d a)_0 = 0", (n, N),
        lambda i, k: c_mode0(g, c_partial(g, A(i)), C(k)), [an, cn],
    )
    check_identity(
        r, "tc.partial_mode1", "(d a)_1 = -a_0", (n, N),
        lambda i, k: vadd(c_mode1(g, c_partial(g, A(i)), C(k)), c_mode0(g, A(i), C(k))), [an, cn],
    )
    check_identity(
        r, "tc.partial_equivariant", "d(u_0 a) = u_0 d(a)", (m, n),
        lambda p, i: vsub(c_partial(g, c_mode0(g, B(p), A(i))), c_mode0(g, B(p), c_partial(g, A(i)))),
        [bn, an],
    )
    check_identity(
        r, "tc.skew_mixed", "u_0 a = -a_0 u", (m, n),
        lambda p, i: vadd(c_mode0(g, B(p), A(i)), c_mode0(g, A(i), B(p))), [bn, an],
    )
    check_identity(
        r, "tc.skew_bracket", "u_0 v = -v_0 u + d(u_1 v)", (m, m),
        lambda p, q: vsub(
            c_mode0(g, B(p), B(q)), vadd(vscale(-1, c_mode0(g, B(q), B(p))), c_partial(g, c_mode1(g, B(p), B(q))))
        ),
        [bn, bn],
    )
    check_identity(
        r, "tc.pairing_symmetric", "u_1 v = v_1 u", (m, m),
        lambda p, q: vsub(c_mode1(g, B(p), B(q)), c_mode1(g, B(q), B(p))), [bn, bn],
    )
    for i, mode in enumerate(modes):
        check_identity(
            r, f"tc.associativity_{i}", f"x_0 y_{i} z = y_{i} x_0 z + (x_0 y)_{i} z", (N, N, N),
            lambda x, y, z, mode=mode: vsub(
                c_mode0(g, C(x), mode(g, C(y), C(z))),
                vadd(mode(g, C(y), c_mode0(g, C(x), C(z))), mode(g, c_mode0(g, C(x), C(y)), C(z))),
            ),
            [cn] * 3,
        )
    return r.sorted()


def check_compatibility(g: VertexAlgebroid) -> CheckReport:
    """The six equations making a 1-truncated conformal algebra into a vertex algebroid."""
    n, m = g.a_dim, g.b_dim
    A, B = g.a, g.b
    an, bn = g.algebra.names, g.names
    r = CheckReport()
    check_identity(
        r, "cp.action_assoc", "a.(a'.u) - (a*a').u = (u_0 a).d(a') + (u_0 a').d(a)", (n, n, m),
        lambda i, j, p: vsub(
            vsub(g.act(A(i), g.action[j][p]), g.act(g.mul(A(i), A(j)), B(p))),
            vadd(g.act(g.anchor[p][i], g.partial[j]), g.act(g.anchor[p][j], g.partial[i])),
        ),
        [an, an, bn],
    )
    check_identity(
        r, "cp.bracket_action", "u_0(a.v) - a.(u_0 v) = (u_0 a).v", (m, n, m),
        lambda p, i, q: vsub(
            vsub(g.br(B(p), g.action[i][q]), g.act(A(i), g.bracket[p][q])), g.act(g.anchor[p][i], B(q))
        ),
        [bn, an, bn],
    )
    check_identity(
        r, "cp.anchor_derivation", "u_0(a*a') = a*(u_0 a') + (u_0 a)*a'", (m, n, n),
        lambda p, i, j: vsub(
            g.anc(B(p), g.mul(A(i), A(j))), vadd(g.mul(A(i), g.anchor[p][j]), g.mul(g.anchor[p][i], A(j)))
        ),
        [bn, an, an],
    )
    # a_0 w = -pi(w)(a)
    check_identity(
        r, "cp.anchor_action", "a_0(a'.v) = a'*(a_0 v)", (n, n, m),
        lambda i, j, p: vsub(
            vscale(-1, g.anc(g.action[j][p], A(i))), g.mul(A(j), vscale(-1, g.anchor[p][i]))
        ),
        [an, an, bn],
    )
    check_identity(
        r, "cp.pairing_action", "(a.u)_1 v = a*(u_1 v) - u_0 v_0 a", (n, m, m),
        lambda i, p, q: vsub(
            g.pair(g.action[i][p], B(q)), vsub(g.mul(A(i), g.pairing[p][q]), g.anc(B(p), g.anchor[q][i]))
        ),
        [an, bn, bn],
    )
    check_identity(
        r, "cp.partial_derivation", "d(a*a') = a.d(a') + a'.d(a)", (n, n),
        lambda i, j: vsub(g.d(g.mul(A(i), A(j))), vadd(g.act(A(i), g.partial[j]), g.act(A(j), g.partial[i]))),
        [an, an],
    )
    return r.sorted()


def full_check(g: VertexAlgebroid) -> CheckReport:
    """Every axiom suite: algebra, Leibniz, 1-truncated conformal, algebroid, compatibility."""
    report = CheckReport()
    report.extend(check_algebra(g.algebra))
    report.extend(check_leibniz(leibniz_of(g)))
    report.extend(check_truncated_conformal(g))
    report.extend(check_vertex_algebroid(g))
    report.extend(check_compatibility(g))
    return report


# ------------------------------------------------------------------ modes


@dataclass(frozen=True)
class Graded:
    """Homogeneous element of weight 0 (in A) or 1 (in B); other weights are zero."""

    weight: int
    coords: Vector

    @property
    def is_zero(self) -> bool:
        return is_zero(self.coords)


def elem_a(x) -> Graded:
    return Graded(0, vec(x))


def elem_b(v) -> Graded:
    return Graded(1, vec(v))


def mode(g: VertexAlgebroid, x: Graded, k: int, y: Graded) -> Graded:
    """The product x_k y for k in {-2, -1, 0, 1}, as far as it lives in weights 0 and 1.

    Derived modes use the skew-symmetry reductions a_{-2} a' = a'.d(a) and
    b_{-1} a = a.b + d(b_0 a).
    """
    if k not in (-2, -1, 0, 1):
        raise ValueError(f"mode index {k} not in {{-2,-1,0,1}}")
    w = x.weight + y.weight - k - 1
    if w >= 2:
        raise OutOfWeightRange(f"x_{k} y has weight {w}")
    if w < 0:
        return Graded(w, ())
    key = (x.weight, y.weight, k)
    X, Y = x.coords, y.coords
    if key == (0, 0, -1):
        return elem_a(g.mul(X, Y))
    if key == (0, 0, -2):
        return elem_b(g.act(Y, g.d(X)))
    if key == (0, 1, -1):
        return elem_b(g.act(X, Y))
    if key == (1, 0, -1):
        return elem_b(vadd(g.act(Y, X), g.d(g.anc(X, Y))))
    if key == (0, 1, 0):
        return elem_a(vscale(-1, g.anc(Y, X)))
    if key == (1, 0, 0):
        return elem_a(g.anc(X, Y))
    if key == (1, 1, 0):
        return elem_b(g.br(X, Y))
    if key == (1, 1, 1):
        return elem_a(g.pair(X, Y))
    raise AssertionError(key)  # pragma: no cover


# ---------------------------------------------------- sl2 semisimple fixture


def semisimple_fixture_check(
    g: VertexAlgebroid, triple: Sequence[int], decomposition: Sequence[Sequence[Vector]]
) -> CheckReport:
    """Verify the structure forced on an algebroid whose Levi factor is sl2 = <e,f,h>.

    ``decomposition`` lists, for each irreducible summand N^j of A/Q1, the
    pair (a_{j,0}, a_{j,1}) of A-vectors.
    """
    e, f, h = (g.b(i) for i in triple)
    if not (
        g.br(e, f) == h and g.br(h, e) == vscale(2, e) and g.br(h, f) == vscale(-2, f)
    ):
        raise NotSl2Triple("e_0 f = h, h_0 e = 2e, h_0 f = -2f do not hold")
    one = g.algebra.unit
    n = g.a_dim
    zero_a = zeros(n)
    r = CheckReport()

    r.add("ss.dim_A_ge_2", n >= 2, "dim A >= 2", dim_A=n)
    r.add("ss.k_equals_1", g.pair(e, f) == one, "e_1 f = 1", e1f=g.pair(e, f))
    vanish = {nm: g.pair(x, y) for nm, x, y in (("e1e", e, e), ("f1f", f, f), ("e1h", e, h), ("f1h", f, h))}
    r.add("ss.pairing_vanish", all(is_zero(v) for v in vanish.values()), "e_1e = f_1f = e_1h = f_1h = 0", **vanish)
    r.add("ss.h1h", g.pair(h, h) == vscale(2, one), "h_1 h = 2", h1h=g.pair(h, h))
    r.add("ss.ker_partial", ker_partial_is_scalars(g), "ker d = Q1", ker=ker_partial(g))

    pairs = [tuple(vec(x) for x in pair) for pair in decomposition]
    nj_ok = all(Subspace.span(p, n).dim == 2 for p in pairs)
    nj_ok = nj_ok and all(g.anc(f, a0) == a1 and is_zero(g.anc(e, a0)) for a0, a1 in pairs)
    spans_a = Subspace.span([one] + [x for p in pairs for x in p], n)
    r.add(
        "ss.dim_Nj", nj_ok and spans_a.dim == n == 1 + 2 * len(pairs),
        "dim N^j = 2, a_{j,1} = f_0 a_{j,0}, {1, a_{j,i}} basis of A", l=len(pairs),
    )
    leib = leib_subspace(leibniz_of(g))
    d_basis = Subspace.span([g.d(x) for p in pairs for x in p], g.b_dim)
    r.add(
        "ss.dim_leib", leib.dim == 2 * len(pairs) and d_basis == leib and d_basis.dim == leib.dim,
        "dim Leib(B) = 2l with basis d(a_{j,i})", dim_leib=leib.dim,
    )
    r.add(
        "ss.semisimple_leibniz", is_semisimple_leibniz(leibniz_of(g)), "rad(B) = Leib(B)",
    )

    def a_ji(j, i):
        if 0 <= i <= 1:
            return pairs[j][i]
        return zero_a

    flat = [(j, i) for j in range(len(pairs)) for i in (0, 1)]
    zb = zeros(g.b_dim)
    rels = {
        "ss.rel1": [g.mul(a_ji(*x), a_ji(*y)) for x in flat for y in flat],
        "ss.rel2": [vsub(g.act(a_ji(j, 0), e), zb) for j in range(len(pairs))]
        + [vsub(g.act(a_ji(j, 1), e), g.d(a_ji(j, 0))) for j in range(len(pairs))],
        "ss.rel3": [vsub(g.act(a_ji(j, 0), f), g.d(a_ji(j, 1))) for j in range(len(pairs))]
        + [g.act(a_ji(j, 1), f) for j in range(len(pairs))],
        "ss.rel4": [vsub(g.act(a_ji(j, 0), h), g.d(a_ji(j, 0))) for j in range(len(pairs))]
        + [vadd(g.act(a_ji(j, 1), h), g.d(a_ji(j, 1))) for j in range(len(pairs))],
        "ss.rel5": [g.act(a_ji(*x), g.d(a_ji(*y))) for x in flat for y in flat],
        "ss.rel6": [vsub(g.pair(g.d(a_ji(j, i)), e), vscale(2 - i, a_ji(j, i - 1))) for j, i in flat]
        + [vsub(g.anc(e, a_ji(j, i)), vscale(2 - i, a_ji(j, i - 1))) for j, i in flat],
        "ss.rel7": [vsub(g.pair(g.d(a_ji(j, i)), f), vscale(i + 1, a_ji(j, i + 1))) for j, i in flat]
        + [vsub(g.anc(f, a_ji(j, i)), vscale(i + 1, a_ji(j, i + 1))) for j, i in flat],
        "ss.rel8": [vsub(g.pair(g.d(a_ji(j, i)), h), vscale(1 - 2 * i, a_ji(j, i))) for j, i in flat]
        + [vsub(g.anc(h, a_ji(j, i)), vscale(1 - 2 * i, a_ji(j, i))) for j, i in flat],
    }
    anchors = {
        "ss.rel1": "a_{j,i} * a_{j',i'} = 0",
        "ss.rel2": "a_{j,0}.e = 0, a_{j,1}.e = d(a_{j,0})",
        "ss.rel3": "a_{j,0}.f = d(a_{j,1}), a_{j,1}.f = 0",
        "ss.rel4": "a_{j,0}.h = d(a_{j,0}), a_{j,1}.h = -d(a_{j,1})",
        "ss.rel5": "a_{j,i}.d(a_{j',i'}) = 0",
        "ss.rel6": "d(a_{j,i})_1 e = e_0 a_{j,i} = (2-i) a_{j,i-1}",
        "ss.rel7": "d(a_{j,i})_1 f = f_0 a_{j,i} = (i+1) a_{j,i+1}",
        "ss.rel8": "d(a_{j,i})_1 h = h_0 a_{j,i} = (1-2i) a_{j,i}",
    }
    for rid, residuals in rels.items():
        bad = sum(1 for res in residuals if not is_zero(res))
        r.add(rid, bad == 0, anchors[rid], failures_total=bad)
    from .commalg import jacobson_radical

    jac = jacobson_radical(g.algebra)
    r.add(
        "ss.m_squared_zero", g.algebra.product_space(jac, jac).is_zero(), "m^2 = 0",
    )
    return r
