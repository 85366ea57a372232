from __future__ import annotations

from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from valab.errors import DimensionMismatch, NoSolution, NotSymmetric, ParseError
from valab.exactnum import (
    Matrix,
    Subspace,
    form_radical,
    kernel,
    rank,
    rational,
    rref,
    solve_affine,
    vec,
)

rationals = st.fractions(min_value=-6, max_value=6, max_denominator=5)


def matrices(max_rows=4, max_cols=4):
    return st.integers(1, max_cols).flatmap(
        lambda c: st.lists(st.lists(rationals, min_size=c, max_size=c), min_size=1, max_size=max_rows).map(
            lambda rows: Matrix.of(rows, c)
        )
    )


def test_rational_parsing():
    assert rational("3/6") == F(1, 2)
    assert rational(" -2 ") == F(-2)
    assert rational(7) == F(7)
    for bad in ("1/0", "x", 0.5, True, None):
        with pytest.raises(ParseError):
            rational(bad)


def test_rref_hand_example():
    m = Matrix.of([[2, 4, 6], [1, 2, 4], [0, 0, 1]])
    assert rref(m).rows == vec_rows([[1, 2, 0], [0, 0, 1], [0, 0, 0]])
    assert rank(m) == 2


def vec_rows(rows):
    return tuple(vec(r) for r in rows)


def test_kernel_hand_example():
    ker = kernel(Matrix.of([[1, 1, 0], [0, 0, 1]]))
    assert ker == Subspace.span([vec([1, -1, 0])], 3)


def test_solve_affine_free_variables_zeroed():
    sol = solve_affine(Matrix.of([[1, 1, 0]]), [3])
    assert sol.particular == vec([3, 0, 0])
    assert sol.dim == 2
    with pytest.raises(NoSolution):
        solve_affine(Matrix.of([[1, 1], [1, 1]]), [1, 2])


def test_shape_errors():
    with pytest.raises(DimensionMismatch):
        Matrix.of([[1, 2], [3]], 2)
    with pytest.raises(DimensionMismatch):
        Subspace.span([vec([1, 2])], 3)
    with pytest.raises(NotSymmetric):
        form_radical(Matrix.of([[0, 1], [0, 0]]))


def test_form_radical():
    assert form_radical(Matrix.of([[1, 0], [0, 0]])) == Subspace.span([vec([0, 1])], 2)


@given(matrices())
def test_rref_is_idempotent_and_rank_nullity(m):
    assert rref(rref(m)) == rref(m)
    assert rank(m) + kernel(m).dim == m.ncols


@given(matrices())
def test_kernel_vectors_are_annihilated(m):
    for v in kernel(m).basis:
        assert not any(m.apply(v))


@given(matrices(), st.randoms(use_true_random=False))
def test_span_is_order_independent(m, rnd):
    rows = list(m.rows)
    rnd.shuffle(rows)
    assert Subspace.span(rows, m.ncols) == Subspace.span(m.rows, m.ncols)


@given(matrices(), matrices())
def test_intersection_lies_in_both(a, b):
    if a.ncols != b.ncols:
        return
    s, t = Subspace.span(a.rows, a.ncols), Subspace.span(b.rows, b.ncols)
    i = s.intersect(t)
    assert i <= s and i <= t
    assert i.dim + (s + t).dim == s.dim + t.dim


@given(matrices(), st.lists(rationals, min_size=4, max_size=4))
def test_solve_affine_round_trip(m, coeffs):
    x = vec(coeffs[: m.ncols])
    rhs = m.apply(x)
    sol = solve_affine(m, rhs)
    assert m.apply(sol.particular) == rhs
    assert sol.contains(x)
