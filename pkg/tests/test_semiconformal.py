from __future__ import annotations

import random
from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from helpers import context_of
from valab.commalg import quadratic_algebra, split_algebra, truncated_polynomial
from valab.corpus import ex62, ex62_algebroid, ex63, ex63_algebroid, pure_partial, sl2_algebroid
from valab.errors import BetaZero, NoGenerator, NoSolution, WindowOverflow
from valab.exactnum import Matrix, lincomb, vec
from valab.semiconformal import (
    BModuleLoop,
    LOneMap,
    PinStatus,
    check_l1,
    heisenberg_search,
    indecomposability_report,
    loop_virasoro,
    pin_L1,
    random_loop,
    rational_sqrt,
    safe_range,
    solve_L1,
    virasoro_commutator_check,
)


@pytest.mark.parametrize("alpha", [0, 1, 2, 3])
def test_rank_two_solution_family(alpha):
    # L(1)b = (-alpha x/2 - 1) 1 + x a, L(1)d(a) = 0
    sol = solve_L1(ex62_algebroid(alpha))
    assert sol.dim == 1
    for x in (F(0), F(1), F(-3, 7)):
        assert sol.contains(vec([-F(alpha, 2) * x - 1, x, 0, 0]))
    assert not sol.contains(vec([-1, 0, 1, 0]))


@pytest.mark.parametrize("alpha", [0, 1, 2, 3])
def test_rank_two_pin(alpha):
    g = ex62_algebroid(alpha)
    pin = pin_L1(g, solve_L1(g), context_of(ex62(alpha)))
    assert pin.status is PinStatus.UNIQUE
    assert pin.l1.matrix.rows == Matrix.of([[-1, 0], [0, 0]]).rows


def test_rank_three_family_and_pin():
    g = ex63_algebroid(0)
    sol = solve_L1(g)
    # L(1)u = 0, L(1)v = -1 + y a, L(1)d(a) = 0
    assert sol.dim == 1
    assert sol.contains(vec([0, 0, -1, 5, 0, 0]))
    pin = pin_L1(g, sol, context_of(ex63(0)))
    assert pin.l1.apply(g.b(0)) == vec([0, 0])
    assert pin.l1.apply(g.b(1)) == vec([-1, 0])
    assert pin.status is PinStatus.UNIQUE


def test_no_l1_on_semisimple_fixture():
    g, _ = sl2_algebroid(1)
    with pytest.raises(NoSolution):
        solve_L1(g)


@given(st.sampled_from([0, 1, 2, 3]), st.lists(st.fractions(-5, 5, max_denominator=4), min_size=4, max_size=4))
def test_solver_and_checker_agree(alpha, coords):
    g = ex62_algebroid(alpha)
    sol = solve_L1(g)
    l1 = LOneMap.from_unknowns(vec(coords), g.a_dim, g.b_dim)
    assert check_l1(g, l1).ok == sol.contains(l1.unknowns())
    member = LOneMap.from_unknowns(
        tuple(p + q for p, q in zip(sol.particular, lincomb(vec(coords[:1]), sol.homogeneous.basis, 4))), 2, 2
    )
    assert check_l1(g, member).ok


@given(st.integers(1, 3), st.integers(1, 3), st.lists(st.fractions(-9, 9, max_denominator=9), min_size=9, max_size=9))
def test_l1_unknowns_round_trip(n, m, pool):
    x = vec(pool[: n * m])
    l1 = LOneMap.from_unknowns(x, n, m)
    assert l1.unknowns() == x
    for p in range(m):
        assert l1.column(p) == x[p * n:(p + 1) * n]


def test_heisenberg_rank_two():
    w = heisenberg_search(context_of(ex62(1)))
    assert w.g == vec([1, 0]) and w.rho == 1 and w.beta == F(1, 2)
    assert w.h_prime == vec([1, F(-1, 2)])
    assert not w.normalized and w.checks.ok
    w2 = heisenberg_search(context_of(ex62(2)))
    assert w2.beta == 1 and w2.normalized
    assert heisenberg_search(context_of(ex62(3))).beta == F(3, 2)


def test_heisenberg_beta_is_double_form_of_g():
    from valab.forms import double_form

    for f in (ex62(1), ex62(2), ex62(3), ex63(0), ex63(1)):
        ctx = context_of(f)
        w = heisenberg_search(ctx)
        gram = double_form(ctx)
        assert w.beta == sum(w.g[p] * gram.rows[p][q] * w.g[q] for p in range(len(w.g)) for q in range(len(w.g)))


def test_heisenberg_rank_three():
    w = heisenberg_search(context_of(ex63(0)))
    assert w.g == vec([0, 1, 0]) and w.beta == 1 and w.normalized
    assert w.checks["heis.normalized_h1h"].passed and w.checks["heis.normalized_h0h"].passed
    assert heisenberg_search(context_of(ex63(1))).beta == 2


def test_heisenberg_preconditions():
    with pytest.raises(BetaZero):
        heisenberg_search(context_of(ex62(0)))
    with pytest.raises(BetaZero):
        heisenberg_search(context_of(ex63(-1)))
    with pytest.raises(NoGenerator):
        heisenberg_search(context_of(pure_partial()))


def test_rational_sqrt():
    assert rational_sqrt(F(9, 4)) == F(3, 2)
    assert rational_sqrt(F(1, 2)) is None
    assert rational_sqrt(F(-1)) is None


def test_loop_action_values():
    loop = BModuleLoop(1, 1, Matrix.of([[3]], 1), (-12, 12))
    assert loop_virasoro(loop, 0, (1, 2)) == {(1, 2): -2}
    assert loop_virasoro(loop, 1, (1, 2)) == {(1, 3): -2, (0, 2): 3}
    assert loop_virasoro(loop, -1, (0, 2)) == {(0, 1): -2}
    with pytest.raises(WindowOverflow):
        loop_virasoro(loop, 4, (1, 10))
    assert safe_range(loop, 4) == range(-8, 5)


@given(st.integers(0, 10_000))
def test_loop_commutator_on_random_modules(seed):
    loop = random_loop(random.Random(seed), window=(-12, 12))
    assert virasoro_commutator_check(loop, 4).ok


def test_loop_commutator_flags_corrupted_action():
    loop = BModuleLoop(1, 2, Matrix.of([[1, 2]], 2), (-12, 12))

    def bad(lp, m, elem):
        out = loop_virasoro(lp, m, elem)
        if m == 2 and elem[0] == 0:
            out[(0, elem[1] + 2)] = out.get((0, elem[1] + 2), F(0)) + 1
        return out

    rep = virasoro_commutator_check(loop, 4, bad)
    entry = rep["vir.commutator"]
    assert not entry.passed and entry.witnesses
    assert len(entry.witnesses[0]["args"]) == 4


def test_window_too_small():
    with pytest.raises(WindowOverflow):
        virasoro_commutator_check(BModuleLoop(1, 0, Matrix(((),), 0), (0, 5)), 4)


def test_indecomposability_verdicts():
    assert indecomposability_report(truncated_polynomial(3)).verdict == "indecomposable"
    assert indecomposability_report(ex62_algebroid(1)).verdict == "indecomposable"
    assert indecomposability_report(split_algebra(3)).verdict == "decomposable"
    assert indecomposability_report(quadratic_algebra(3, 0)).verdict == "indeterminate"
