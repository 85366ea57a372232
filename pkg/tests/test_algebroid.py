from __future__ import annotations

import random
from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from oracle import all_ids, violated
from valab.algebroid import (
    VertexAlgebroid,
    elem_a,
    elem_b,
    full_check,
    ker_partial_is_scalars,
    mode,
    semisimple_fixture_check,
    trivial_algebroid,
)
from valab.commalg import truncated_polynomial
from valab.corpus import ex62_algebroid, ex63_algebroid, sl2_algebroid
from valab.errors import DimensionMismatch, NotSl2Triple, OutOfWeightRange
from valab.exactnum import vadd, vec, vscale, vsub

CONSISTENT = ("ex62_alpha0", "ex62_alpha1", "ex62_alpha2", "ex62_alpha3", "sl2_l1", "pure_partial")
EX63_BROKEN = {"lb.leibniz", "va.leibniz", "va.pairing_invariant", "tc.associativity_0", "tc.associativity_1"}


@pytest.mark.parametrize("name", CONSISTENT)
def test_consistent_fixtures_pass_every_axiom(fixtures, name):
    rep = full_check(fixtures[name].algebroid)
    assert rep.ok, rep.failed()
    assert len(rep.ids()) == 33


@pytest.mark.parametrize("rho", [-1, 0, 1])
def test_rank_three_family_breaks_exactly_the_leibniz_type_identities(rho):
    rep = full_check(ex63_algebroid(rho))
    assert set(rep.failed()) == EX63_BROKEN
    assert ["v", "u", "v"] in [w["args"] for w in rep["va.pairing_invariant"].witnesses]


@pytest.mark.parametrize("name", CONSISTENT)
def test_hundred_random_vectors_have_zero_residuals(fixtures, name):
    assert violated(fixtures[name].algebroid, random.Random(name), trials=100) == set()


def test_oracle_and_checker_cover_the_same_ids(fixtures):
    for f in fixtures.values():
        if f.algebroid is not None:
            assert all_ids(f.algebroid) == set(full_check(f.algebroid).ids())


def test_oracle_agrees_with_checker_on_corpus(fixtures):
    for name, f in fixtures.items():
        if f.algebroid is not None:
            assert violated(f.algebroid, random.Random(1)) == set(full_check(f.algebroid).failed()), name


def test_corrupted_action_is_flagged():
    g = ex62_algebroid(1).with_entry("action", (1, 1, 1), 1)
    failed = set(full_check(g).failed())
    assert "va.partial_derivation" in failed
    assert failed == violated(g, random.Random(3))


def test_trivial_algebroid_and_ker_partial():
    g = trivial_algebroid(truncated_polynomial(3))
    assert g.b_dim == 0
    assert full_check(g).ok
    assert not ker_partial_is_scalars(g)
    assert ker_partial_is_scalars(ex62_algebroid(1))


def test_shape_errors():
    g = ex62_algebroid(1)
    with pytest.raises(DimensionMismatch):
        VertexAlgebroid(g.algebra, g.partial[:1], g.action, g.bracket, g.anchor, g.pairing, g.names)
    with pytest.raises(DimensionMismatch):
        VertexAlgebroid(g.algebra, g.partial, g.action, g.bracket, g.anchor, g.pairing, ("b",))


def test_mode_table_on_alpha_one():
    g = ex62_algebroid(1)
    one, a = elem_a([1, 0]), elem_a([0, 1])
    b, da = elem_b([1, 0]), elem_b([0, 1])
    assert mode(g, b, 1, b) == elem_a([0, 1])  # b_1 b = a
    assert mode(g, b, 0, b) == elem_b([0, F(1, 2)])  # b_0 b = d(a)/2
    assert mode(g, b, 0, a) == elem_a([F(-1, 2), 1])  # b_0 a = a - 1/2
    assert mode(g, a, 0, b) == elem_a([F(1, 2), -1])
    assert mode(g, a, -1, b) == elem_b([F(1, 2), F(-1, 2)])
    assert mode(g, a, -2, one) == elem_b([0, 1])  # a_{-2} 1 = d(a)
    assert mode(g, one, -2, a) == elem_b([0, 0])
    assert mode(g, a, -1, a) == elem_a([F(-1, 4), 1])
    assert mode(g, da, 1, b) == elem_a([F(-1, 2), 1])
    assert mode(g, a, 1, b).weight < 0
    with pytest.raises(OutOfWeightRange):
        mode(g, b, -1, b)
    with pytest.raises(ValueError):
        mode(g, b, 2, b)


def rand_vec(rng, k):
    return vec([F(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(k)])


@given(st.sampled_from([0, 1, 2, 3]), st.integers(0, 10_000))
def test_skew_symmetry_of_modes(alpha, seed):
    g = ex62_algebroid(alpha)
    rng = random.Random(seed)
    x, y = elem_a(rand_vec(rng, 2)), elem_a(rand_vec(rng, 2))
    u, v = elem_b(rand_vec(rng, 2)), elem_b(rand_vec(rng, 2))
    assert mode(g, x, -1, y) == mode(g, y, -1, x)
    assert mode(g, u, 0, x).coords == vscale(-1, mode(g, x, 0, u).coords)
    # u_{-1} x = x_{-1} u + d(u_0 x)
    assert mode(g, u, -1, x).coords == vadd(mode(g, x, -1, u).coords, g.d(mode(g, u, 0, x).coords))
    # u_0 v + v_0 u = d(u_1 v)
    assert vadd(mode(g, u, 0, v).coords, mode(g, v, 0, u).coords) == g.d(mode(g, u, 1, v).coords)
    assert mode(g, u, 1, v) == mode(g, v, 1, u)
    # x_{-2} y = y.d(x), and d(x y) = x_{-2} y + y_{-2} x
    xy = g.mul(x.coords, y.coords)
    assert g.d(xy) == vadd(mode(g, x, -2, y).coords, mode(g, y, -2, x).coords)


def test_semisimple_fixture():
    g, block = sl2_algebroid(1)
    rep = semisimple_fixture_check(g, block.triple, block.decomposition)
    assert rep.ok, rep.failed()
    assert "ss.h1h" in rep.ids() and "ss.m_squared_zero" in rep.ids()
    assert g.pair(g.b(2), g.b(2)) == vscale(2, g.algebra.unit)
    with pytest.raises(NotSl2Triple):
        semisimple_fixture_check(g, (1, 0, 2), block.decomposition)


def test_semisimple_fixture_two_copies():
    g, block = sl2_algebroid(2)
    assert full_check(g).ok
    assert semisimple_fixture_check(g, block.triple, block.decomposition).ok


def test_semisimple_relation_failure_is_reported():
    g, block = sl2_algebroid(1)
    bad = g.with_entry("pairing", (2, 2, 0), 3)
    rep = semisimple_fixture_check(bad, block.triple, block.decomposition)
    assert rep.failed() == ["ss.h1h"]


def test_with_entry_is_pure():
    g = ex62_algebroid(1)
    h = g.with_entry("bracket", (0, 0, 1), 7)
    assert g.entry("bracket", (0, 0, 1)) == F(1, 2)
    assert h.entry("bracket", (0, 0, 1)) == 7
    assert vsub(h.br(g.b(0), g.b(0)), g.br(g.b(0), g.b(0))) == vec([0, F(13, 2)])
