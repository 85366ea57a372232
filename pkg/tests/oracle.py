"""Independent re-evaluation of every structure identity with numpy object arrays.

Nothing here goes through valab's own multilinear helpers; tensors are read
raw and contracted with einsum over Fractions, on random rational vectors.
"""
from __future__ import annotations

import random
from fractions import Fraction

import numpy as np


def arr(x):
    return np.array(x, dtype=object)


class Raw:
    def __init__(self, g):
        self.n, self.m = g.a_dim, g.b_dim
        self.M = arr(g.algebra.mul).reshape(self.n, self.n, self.n)
        self.one = arr(g.algebra.unit)
        self.D = arr(g.partial).reshape(self.n, self.m)
        self.Act = arr(g.action).reshape(self.n, self.m, self.m)
        self.Br = arr(g.bracket).reshape(self.m, self.m, self.m)
        self.An = arr(g.anchor).reshape(self.m, self.n, self.n)
        self.P = arr(g.pairing).reshape(self.m, self.m, self.n)

    def mul(self, x, y):
        return np.einsum("i,j,ijk->k", x, y, self.M)

    def d(self, x):
        return np.einsum("i,ip->p", x, self.D)

    def act(self, x, u):
        return np.einsum("i,p,ipq->q", x, u, self.Act)

    def br(self, u, v):
        return np.einsum("p,q,pqr->r", u, v, self.Br)

    def pi(self, u, x):
        return np.einsum("p,i,pij->j", u, x, self.An)

    def pair(self, u, v):
        return np.einsum("p,q,pqi->i", u, v, self.P)

    # C = A + B
    def split(self, z):
        return z[: self.n], z[self.n:]

    def c0(self, z1, z2):
        a1, b1 = self.split(z1)
        a2, b2 = self.split(z2)
        return np.concatenate([self.pi(b1, a2) - self.pi(b2, a1), self.br(b1, b2)])

    def c1(self, z1, z2):
        _, b1 = self.split(z1)
        _, b2 = self.split(z2)
        return np.concatenate([self.pair(b1, b2), np.zeros(self.m, dtype=object) * Fraction(0)])

    def cd(self, z):
        a, _ = self.split(z)
        return np.concatenate([np.zeros(self.n, dtype=object) * Fraction(0), self.d(a)])

    def ca(self, x):
        return np.concatenate([x, arr([Fraction(0)] * self.m)])

    def cb(self, u):
        return np.concatenate([arr([Fraction(0)] * self.n), u])


def _identities(R: Raw, x, y, u, v, w, z1, z2, z3):
    one = R.one
    out = {
        "alg.commutative": R.mul(x, y) - R.mul(y, x),
        "alg.unit": R.mul(one, x) - x,
        "alg.associative": R.mul(R.mul(x, y), z1[: R.n]) - R.mul(x, R.mul(y, z1[: R.n])),
        "lb.leibniz": R.br(u, R.br(v, w)) - R.br(R.br(u, v), w) - R.br(v, R.br(u, w)),
        "va.unit_action": R.act(one, u) - u,
        "va.leibniz": R.br(u, R.br(v, w)) - R.br(R.br(u, v), w) - R.br(v, R.br(u, w)),
        "va.anchor_derivation": R.pi(u, R.mul(x, y)) - R.mul(x, R.pi(u, y)) - R.mul(R.pi(u, x), y),
        "va.anchor_hom": R.pi(R.br(u, v), x) - R.pi(u, R.pi(v, x)) + R.pi(v, R.pi(u, x)),
        "va.pairing_symmetric": R.pair(u, v) - R.pair(v, u),
        "va.anchor_partial": R.pi(R.d(x), y),
        "va.action_assoc": R.act(x, R.act(y, u)) - R.act(R.mul(x, y), u)
        - R.act(R.pi(u, x), R.d(y)) - R.act(R.pi(u, y), R.d(x)),
        "va.bracket_action": R.br(u, R.act(x, v)) - R.act(R.pi(u, x), v) - R.act(x, R.br(u, v)),
        "va.bracket_symmetric": R.br(u, v) + R.br(v, u) - R.d(R.pair(u, v)),
        "va.anchor_linear": R.pi(R.act(x, u), y) - R.mul(x, R.pi(u, y)),
        "va.pairing_action": R.pair(R.act(x, u), v) - R.mul(x, R.pair(u, v)) + R.pi(u, R.pi(v, x)),
        "va.pairing_invariant": R.pi(u, R.pair(v, w)) - R.pair(R.br(u, v), w) - R.pair(v, R.br(u, w)),
        "va.partial_derivation": R.d(R.mul(x, y)) - R.act(x, R.d(y)) - R.act(y, R.d(x)),
        "va.bracket_partial": R.br(u, R.d(x)) - R.d(R.pi(u, x)),
        "va.pairing_partial": R.pair(u, R.d(x)) - R.pi(u, x),
        "cp.anchor_action": -R.pi(R.act(y, v), x) + R.mul(y, R.pi(v, x)),
        "tc.partial_mode0": R.c0(R.cd(R.ca(x)), z1),
        "tc.partial_mode1": R.c1(R.cd(R.ca(x)), z1) + R.c0(R.ca(x), z1),
        "tc.partial_equivariant": R.cd(R.c0(R.cb(u), R.ca(x))) - R.c0(R.cb(u), R.cd(R.ca(x))),
        "tc.skew_mixed": R.c0(R.cb(u), R.ca(x)) + R.c0(R.ca(x), R.cb(u)),
        "tc.skew_bracket": R.c0(R.cb(u), R.cb(v)) + R.c0(R.cb(v), R.cb(u)) - R.cd(R.c1(R.cb(u), R.cb(v))),
        "tc.pairing_symmetric": R.c1(R.cb(u), R.cb(v)) - R.c1(R.cb(v), R.cb(u)),
        "tc.associativity_0": R.c0(z1, R.c0(z2, z3)) - R.c0(z2, R.c0(z1, z3)) - R.c0(R.c0(z1, z2), z3),
        "tc.associativity_1": R.c0(z1, R.c1(z2, z3)) - R.c1(z2, R.c0(z1, z3)) - R.c1(R.c0(z1, z2), z3),
    }
    for name in ("action_assoc", "bracket_action", "anchor_derivation", "pairing_action", "partial_derivation"):
        out[f"cp.{name}"] = out[f"va.{name}"]
    return out




def random_vector(rng: random.Random, k: int):
    # nonzero entries from a wide pool keep a nonzero multilinear residual from vanishing by accident
    return arr([Fraction(rng.choice((-1, 1)) * rng.randint(1, 97), rng.randint(1, 13)) for _ in range(k)])


def violated(g, rng: random.Random, trials: int = 6) -> set[str]:
    """Axiom ids whose residual is nonzero on some random argument tuple."""
    R = Raw(g)
    bad: set[str] = set()
    for _ in range(trials):
        x, y = random_vector(rng, R.n), random_vector(rng, R.n)
        u, v, w = (random_vector(rng, R.m) for _ in range(3))
        z1, z2, z3 = (random_vector(rng, R.n + R.m) for _ in range(3))
        for k, res in _identities(R, x, y, u, v, w, z1, z2, z3).items():
            if any(c != 0 for c in res):
                bad.add(k)
    return bad


def all_ids(g) -> set[str]:
    R = Raw(g)
    rng = random.Random(0)
    args = [random_vector(rng, R.n)] * 2 + [random_vector(rng, R.m)] * 3 + [random_vector(rng, R.n + R.m)] * 3
    return set(_identities(R, *args))
