"""Built-in fixtures: truncated polynomial rings, two families of rank-2 algebroids,
an sl2 semisimple-Leibniz algebroid, and a few adversarial variants.

Structure constants are written by basis name through :class:`Builder` so each
fixture reads like its multiplication table.
"""
from __future__ import annotations

import json
from fractions import Fraction
from importlib import resources
from pathlib import Path

from .algebroid import VertexAlgebroid
from .commalg import CommAlgebra, Grading, quadratic_algebra, truncated_polynomial, monomial_algebra
from .exactnum import Matrix, ZERO, vec
from .fileio import AlgebroidFile, GorensteinBlock, Sl2Block, dumps, to_json

F = Fraction
HALF = F(1, 2)


class Builder:
    """Sparse, name-addressed construction of a VertexAlgebroid."""

    def __init__(self, algebra: CommAlgebra, b_names):
        self.alg = algebra
        self.an = list(algebra.names)
        self.bn = list(b_names)
        n, m = len(self.an), len(self.bn)
        self.partial = [[ZERO] * m for _ in range(n)]
        self.action = [[[ZERO] * m for _ in range(m)] for _ in range(n)]
        self.bracket = [[[ZERO] * m for _ in range(m)] for _ in range(m)]
        self.anchor = [[[ZERO] * n for _ in range(n)] for _ in range(m)]
        self.pairing = [[[ZERO] * n for _ in range(m)] for _ in range(m)]
        # 1.v = v
        one = self.an.index("1")
        for p in range(m):
            self.action[one][p][p] = F(1)

    def _a(self, terms: dict):
        v = [ZERO] * len(self.an)
        for k, c in terms.items():
            v[self.an.index(k)] += F(c)
        return v

    def _b(self, terms: dict):
        v = [ZERO] * len(self.bn)
        for k, c in terms.items():
            v[self.bn.index(k)] += F(c)
        return v

    def d(self, a: str, b_terms: dict):
        self.partial[self.an.index(a)] = self._b(b_terms)

    def act(self, a: str, b: str, b_terms: dict):
        self.action[self.an.index(a)][self.bn.index(b)] = self._b(b_terms)

    def br(self, u: str, v: str, b_terms: dict):
        self.bracket[self.bn.index(u)][self.bn.index(v)] = self._b(b_terms)

    def anc(self, u: str, a: str, a_terms: dict):
        self.anchor[self.bn.index(u)][self.an.index(a)] = self._a(a_terms)

    def pair(self, u: str, v: str, a_terms: dict):
        """Symmetric: sets both <u,v> and <v,u>."""
        val = self._a(a_terms)
        self.pairing[self.bn.index(u)][self.bn.index(v)] = val
        self.pairing[self.bn.index(v)][self.bn.index(u)] = list(val)

    def build(self) -> VertexAlgebroid:
        return VertexAlgebroid(
            self.alg, self.partial, self.action, self.bracket, self.anchor, self.pairing, self.bn
        )


# ------------------------------------------------------------------ Q[x]/(x^(k+1))


def ex61(k: int) -> AlgebroidFile:
    alg = truncated_polynomial(k + 1)
    return AlgebroidFile(f"ex61_k{k}", alg, grading=Grading(range(k + 1)))


# --------------------------------------------- two-dimensional B over Q[a]/((a - alpha/2)^2)


def ex62_algebra(alpha) -> CommAlgebra:
    alpha = F(alpha)
    return quadratic_algebra(-alpha * alpha / 4, alpha)


def ex62_algebroid(alpha) -> VertexAlgebroid:
    alpha = F(alpha)
    g = Builder(ex62_algebra(alpha), ["b", "d(a)"])
    g.d("a", {"d(a)": 1})
    g.act("a", "b", {"b": alpha / 2, "d(a)": alpha / 2 - 1})
    g.act("a", "d(a)", {"d(a)": alpha / 2})
    g.br("b", "b", {"d(a)": HALF})
    g.br("b", "d(a)", {"d(a)": 1})
    g.anc("b", "a", {"a": 1, "1": -alpha / 2})
    g.pair("b", "b", {"a": 1})
    g.pair("b", "d(a)", {"a": 1, "1": -alpha / 2})
    return g.build()


def ex62_gorenstein(alpha) -> GorensteinBlock:
    alpha = F(alpha)
    # t = a - alpha/2; B(1,1) = 0, B(1,t) = 1, B(t,t) = 0, written in the basis {1, a}
    return GorensteinBlock(vec([-alpha / 2, 1]), Matrix.of([[0, 1], [1, alpha]]))


def ex62_l1(alpha) -> Matrix:
    """Pinned L(1): b -> -1, d(a) -> 0 (columns indexed by B)."""
    return Matrix.of([[-1, 0], [0, 0]])


def ex62(alpha) -> AlgebroidFile:
    alpha = F(alpha)
    grading = Grading([0, 1]) if alpha == 0 else None
    return AlgebroidFile(
        f"ex62_alpha{alpha}", ex62_algebra(alpha), ex62_algebroid(alpha), grading,
        ex62_gorenstein(alpha), ex62_l1(alpha),
    )


# ---------------------------------------- three-dimensional B over Q[a]/(a^2)


def ex63_algebroid(rho) -> VertexAlgebroid:
    rho = F(rho)
    g = Builder(truncated_polynomial(2, "a"), ["u", "v", "d(a)"])
    g.d("a", {"d(a)": 1})
    g.act("a", "v", {"d(a)": rho})
    g.br("u", "v", {"d(a)": 1})
    g.br("v", "d(a)", {"d(a)": 1})
    g.anc("v", "a", {"a": 1})
    g.pair("u", "v", {"a": 1})
    g.pair("v", "v", {"1": 1 + rho})
    g.pair("v", "d(a)", {"a": 1})
    return g.build()


def ex63(rho) -> AlgebroidFile:
    rho = F(rho)
    g = ex63_algebroid(rho)
    return AlgebroidFile(
        f"ex63_rho{rho}", g.algebra, g, Grading([0, 1]),
        GorensteinBlock(vec([0, 1]), Matrix.of([[0, 1], [1, 0]])),
        Matrix.of([[0, -1, 0], [0, 0, 0]]),
    )


# ------------------------------------------------- sl2 acting on l copies of Q^2


def sl2_algebroid(l: int) -> tuple[VertexAlgebroid, Sl2Block]:
    """A = Q1 + sum_j N^j with N^j * N^j' = 0, B = sl2 + d(A)."""
    a_names = ["1"] + [f"a{j}{i}" for j in range(l) for i in (0, 1)]
    exps = [tuple(0 for _ in range(2 * l))]
    for k in range(2 * l):
        exps.append(tuple(1 if q == k else 0 for q in range(2 * l)))
    alg = monomial_algebra(exps, a_names[1:])
    alg = CommAlgebra(alg.mul, alg.unit, a_names)
    d = {x: f"d({x})" for x in a_names[1:]}
    g = Builder(alg, ["e", "f", "h"] + list(d.values()))
    for x, dx in d.items():
        g.d(x, {dx: 1})
    g.br("e", "f", {"h": 1})
    g.br("f", "e", {"h": -1})
    g.br("h", "e", {"e": 2})
    g.br("e", "h", {"e": -2})
    g.br("h", "f", {"f": -2})
    g.br("f", "h", {"f": 2})
    g.pair("e", "f", {"1": 1})
    g.pair("h", "h", {"1": 2})
    for j in range(l):
        a0, a1 = f"a{j}0", f"a{j}1"
        # sl2 acts on N^j = span{a0, a1} with highest weight vector a0
        anchors = {("e", a1): {a0: 1}, ("f", a0): {a1: 1}, ("h", a0): {a0: 1}, ("h", a1): {a1: -1}}
        for (x, a), val in anchors.items():
            g.anc(x, a, val)
            g.pair(x, d[a], val)
            g.br(x, d[a], {d[k]: c for k, c in val.items()})
        g.act(a1, "e", {d[a0]: 1})
        g.act(a0, "f", {d[a1]: 1})
        g.act(a0, "h", {d[a0]: 1})
        g.act(a1, "h", {d[a1]: -1})
    decomposition = [
        (alg.basis(a_names.index(f"a{j}0")), alg.basis(a_names.index(f"a{j}1"))) for j in range(l)
    ]
    return g.build(), Sl2Block((0, 1, 2), tuple(decomposition))


def sl2_fixture(l: int = 1) -> AlgebroidFile:
    g, block = sl2_algebroid(l)
    grading = Grading([0] + [1] * (2 * l))
    return AlgebroidFile(f"sl2_l{l}", g.algebra, g, grading, sl2=block)


# ------------------------------------------------------------- small extras


def pure_partial() -> AlgebroidFile:
    """A = Q[x]/(x^2), B = span{d(x)}; every structure map beyond d and 1.v vanishes."""
    alg = truncated_polynomial(2)
    g = Builder(alg, ["d(x)"])
    g.d("x", {"d(x)": 1})
    return AlgebroidFile(
        "pure_partial", alg, g.build(), Grading([0, 1]),
        GorensteinBlock(vec([0, 1]), Matrix.of([[0, 1], [1, 0]])),
    )


def mutant_ex62_action() -> AlgebroidFile:
    """a.d(a) = d(a) instead of d(a)/2 (alpha = 1): breaks d(a*a) = 2 a.d(a)."""
    base = ex62(1)
    g = base.algebroid.with_entry("action", (1, 1, 1), 1)
    return AlgebroidFile("mutant_ex62_action", base.algebra, g, None, base.gorenstein)


def mutant_ex63_pairing() -> AlgebroidFile:
    """<v, d(a)> = 0 instead of a (rho = 1)."""
    base = ex63(1)
    g = base.algebroid.with_entry("pairing", (1, 2, 1), 0).with_entry("pairing", (2, 1, 1), 0)
    return AlgebroidFile("mutant_ex63_pairing", base.algebra, g, base.grading, base.gorenstein)


def mutant_ex62_form() -> AlgebroidFile:
    """B(t,t) = 1 for alpha = 1: the form is no longer invariant."""
    base = ex62(1)
    # in the basis {1, a}: B(1,a) = 1, B(a,a) = B(t + 1/2, t + 1/2) = 1 + 1 = 2
    gor = GorensteinBlock(base.gorenstein.t, Matrix.of([[0, 1], [1, 2]]))
    return AlgebroidFile("mutant_ex62_form", base.algebra, base.algebroid, None, gor)


def corpus() -> dict[str, AlgebroidFile]:
    """Every shipped fixture by id."""
    files = [ex61(k) for k in range(1, 6)]
    files += [ex62(a) for a in range(4)]
    files += [ex63(r) for r in (-1, 0, 1)]
    files += [sl2_fixture(1), pure_partial()]
    files += [mutant_ex62_action(), mutant_ex63_pairing(), mutant_ex62_form()]
    return {f.fixture_id: f for f in files}


VALID_ALGEBROIDS = (
    "ex62_alpha0", "ex62_alpha1", "ex62_alpha2", "ex62_alpha3",
    "ex63_rho-1", "ex63_rho0", "ex63_rho1", "sl2_l1", "pure_partial",
)


def corrupted_json() -> dict:
    """ex62_alpha1 with the last entry of the multiplication table dropped."""
    data = to_json(ex62(1))
    data["id"] = "corrupt_short_mul"
    data["algebra"]["mul"][-1] = data["algebra"]["mul"][-1][:-1]
    return data


def write_corpus(directory) -> list[Path]:
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    written = []
    for name, f in corpus().items():
        path = directory / f"{name}.json"
        path.write_text(dumps(f))
        written.append(path)
    path = directory / "corrupt_short_mul.json"
    path.write_text(json.dumps(corrupted_json(), indent=1) + "\n")
    written.append(path)
    return written


def fixture_path(name: str) -> Path:
    """Path of a shipped fixture file."""
    return Path(str(resources.files("valab") / "fixtures" / f"{name}.json"))
