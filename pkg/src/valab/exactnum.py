"""Exact rational linear algebra.

Scalars are :class:`fractions.Fraction`; vectors are tuples of fractions.
Everything here is immutable and deterministic: elimination always pivots
on the first nonzero entry in column order, and subspaces are stored by
their reduced row echelon basis, so equal subspaces compare equal.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DimensionMismatch, NoSolution, NotSymmetric, ParseError

Vector = tuple  # tuple[Fraction, ...]

ZERO = Fraction(0)
ONE = Fraction(1)


def rational(x) -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` string to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise ParseError(f"not a rational: {x!r}")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        try:
            return Fraction(x.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"not a rational: {x!r}") from exc
    raise ParseError(f"not a rational: {x!r}")


def vec(xs: Iterable) -> Vector:
    return tuple(rational(x) for x in xs)


def zeros(n: int) -> Vector:
    return (ZERO,) * n


def basis_vector(n: int, i: int, scale=ONE) -> Vector:
    v = [ZERO] * n
    v[i] = Fraction(scale)
    return tuple(v)


def vadd(x: Vector, y: Vector) -> Vector:
    return tuple(a + b for a, b in zip(x, y))


def vsub(x: Vector, y: Vector) -> Vector:
    return tuple(a - b for a, b in zip(x, y))


def vscale(c, x: Vector) -> Vector:
    c = Fraction(c)
    return tuple(c * a for a in x)


def dot(x: Vector, y: Vector) -> Fraction:
    return sum((a * b for a, b in zip(x, y) if a and b), ZERO)


def is_zero(x: Vector) -> bool:
    return not any(x)


def lincomb(coeffs: Sequence, vectors: Sequence[Vector], n: int) -> Vector:
    out = [ZERO] * n
    for c, v in zip(coeffs, vectors):
        if not c:
            continue
        for k, a in enumerate(v):
            if a:
                out[k] += c * a
    return tuple(out)


def fmt_vector(v: Vector) -> list[str]:
    return [str(a) for a in v]


@dataclass(frozen=True)
class Matrix:
    """Dense row-major matrix of Fractions."""

    rows: tuple
    ncols: int

    def __post_init__(self):
        for r in self.rows:
            if len(r) != self.ncols:
                raise DimensionMismatch(f"row of length {len(r)} in a {self.ncols}-column matrix")

    @classmethod
    def of(cls, rows: Iterable[Iterable], ncols: int | None = None) -> "Matrix":
        rows = tuple(vec(r) for r in rows)
        if ncols is None:
            if not rows:
                raise DimensionMismatch("cannot infer the column count of an empty matrix")
            ncols = len(rows[0])
        return cls(rows, ncols)

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls(tuple(basis_vector(n, i) for i in range(n)), n)

    @classmethod
    def zero(cls, nrows: int, ncols: int) -> "Matrix":
        return cls(tuple(zeros(ncols) for _ in range(nrows)), ncols)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def transpose(self) -> "Matrix":
        return Matrix(tuple(tuple(r[j] for r in self.rows) for j in range(self.ncols)), self.nrows)

    def apply(self, v: Vector) -> Vector:
        if len(v) != self.ncols:
            raise DimensionMismatch(f"vector of length {len(v)} against {self.ncols} columns")
        return tuple(dot(r, v) for r in self.rows)

    def __matmul__(self, other):
        if isinstance(other, Matrix):
            cols = other.transpose().rows
            return Matrix(tuple(tuple(dot(r, c) for c in cols) for r in self.rows), other.ncols)
        return self.apply(tuple(other))

    def is_symmetric(self) -> bool:
        return self.nrows == self.ncols and all(
            self.rows[i][j] == self.rows[j][i] for i in range(self.nrows) for j in range(i)
        )

    def to_json(self) -> list[list[str]]:
        return [fmt_vector(r) for r in self.rows]


def _eliminate(rows: Sequence[Vector], ncols: int) -> tuple[list[list[Fraction]], list[int]]:
    m = [list(r) for r in rows]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == len(m):
            break
        p = next((i for i in range(r, len(m)) if m[i][c]), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c]
        if inv != 1:
            m[r] = [a * inv for a in m[r]]
        for i in range(len(m)):
            f = m[i][c]
            if i != r and f:
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    return m, pivots


def rref(m: Matrix) -> Matrix:
    """Reduced row echelon form; zero rows are kept at the bottom."""
    rows, _ = _eliminate(m.rows, m.ncols)
    return Matrix(tuple(tuple(r) for r in rows), m.ncols)


def rank(m: Matrix) -> int:
    return len(_eliminate(m.rows, m.ncols)[1])


@dataclass(frozen=True)
class Subspace:
    """A subspace of Q^n stored by its canonical RREF basis."""

    ambient_dim: int
    basis: tuple

    @classmethod
    def span(cls, vectors: Iterable[Vector], ambient_dim: int) -> "Subspace":
        vectors = [tuple(v) for v in vectors]
        for v in vectors:
            if len(v) != ambient_dim:
                raise DimensionMismatch(f"vector of length {len(v)} in Q^{ambient_dim}")
        rows, piv = _eliminate(vectors, ambient_dim)
        return cls(ambient_dim, tuple(tuple(r) for r in rows[: len(piv)]))

    @classmethod
    def zero(cls, n: int) -> "Subspace":
        return cls(n, ())

    @classmethod
    def full(cls, n: int) -> "Subspace":
        return cls(n, tuple(basis_vector(n, i) for i in range(n)))

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def codim(self) -> int:
        return self.ambient_dim - self.dim

    @property
    def pivots(self) -> tuple[int, ...]:
        return tuple(next(j for j, a in enumerate(r) if a) for r in self.basis)

    def is_zero(self) -> bool:
        return not self.basis

    def is_full(self) -> bool:
        return self.dim == self.ambient_dim

    def reduce(self, v: Vector) -> Vector:
        """Remainder of ``v`` after clearing the pivot columns of this subspace."""
        out = list(v)
        for row, p in zip(self.basis, self.pivots):
            f = out[p]
            if f:
                out = [a - f * b for a, b in zip(out, row)]
        return tuple(out)

    def contains(self, v: Vector) -> bool:
        return is_zero(self.reduce(v))

    def __contains__(self, v) -> bool:
        return self.contains(tuple(v))

    def issubset(self, other: "Subspace") -> bool:
        return all(other.contains(b) for b in self.basis)

    def __le__(self, other: "Subspace") -> bool:
        return self.issubset(other)

    def __add__(self, other: "Subspace") -> "Subspace":
        return Subspace.span(self.basis + other.basis, self.ambient_dim)

    def intersect(self, other: "Subspace") -> "Subspace":
        # x = sum c_i s_i = sum d_j o_j  <=>  (c, -d) in ker [S^T | -O^T]
        n, k = self.ambient_dim, self.dim
        cols = list(self.basis) + [vscale(-1, o) for o in other.basis]
        if not cols:
            return Subspace.zero(n)
        system = Matrix(tuple(tuple(c[i] for c in cols) for i in range(n)), len(cols))
        ker = kernel(system)
        return Subspace.span((lincomb(z[:k], self.basis, n) for z in ker.basis), n)

    def complement_indices(self) -> tuple[int, ...]:
        piv = set(self.pivots)
        return tuple(j for j in range(self.ambient_dim) if j not in piv)

    def to_json(self) -> dict:
        return {"dim": self.dim, "basis": [fmt_vector(b) for b in self.basis]}


def kernel(m: Matrix) -> Subspace:
    """Null space {v : m v = 0}."""
    rows, piv = _eliminate(m.rows, m.ncols)
    free = [j for j in range(m.ncols) if j not in set(piv)]
    out = []
    for f in free:
        v = [ZERO] * m.ncols
        v[f] = ONE
        for r, p in enumerate(piv):
            v[p] = -rows[r][f]
        out.append(tuple(v))
    return Subspace.span(out, m.ncols)


@dataclass(frozen=True)
class AffineSpace:
    """particular + span(homogeneous)."""

    particular: Vector
    homogeneous: Subspace

    @property
    def dim(self) -> int:
        return self.homogeneous.dim

    def contains(self, x: Vector) -> bool:
        return self.homogeneous.contains(vsub(tuple(x), self.particular))

    def point(self, coeffs: Sequence) -> Vector:
        n = len(self.particular)
        return vadd(self.particular, lincomb([Fraction(c) for c in coeffs], self.homogeneous.basis, n))

    def to_json(self) -> dict:
        return {"particular": fmt_vector(self.particular), "directions": self.homogeneous.to_json()}


def solve_affine(m: Matrix, rhs: Sequence) -> AffineSpace:
    """All solutions of ``m x = rhs``; free variables are zero in the particular solution.

    Raises :class:`NoSolution` when the system is inconsistent.
    """
    rhs = vec(rhs)
    if len(rhs) != m.nrows:
        raise DimensionMismatch(f"rhs of length {len(rhs)} for {m.nrows} equations")
    aug = [r + (b,) for r, b in zip(m.rows, rhs)]
    rows, piv = _eliminate(aug, m.ncols + 1)
    if piv and piv[-1] == m.ncols:
        raise NoSolution("inconsistent linear system")
    x = [ZERO] * m.ncols
    for r, p in enumerate(piv):
        x[p] = rows[r][m.ncols]
    return AffineSpace(tuple(x), kernel(m))


def form_radical(gram: Matrix) -> Subspace:
    """Radical of a symmetric bilinear form given by its Gram matrix."""
    if not gram.is_symmetric():
        raise NotSymmetric("Gram matrix is not symmetric")
    return kernel(gram)


def matrix_from_columns(cols: Sequence[Vector], nrows: int) -> Matrix:
    return Matrix(tuple(tuple(c[i] for c in cols) for i in range(nrows)), len(cols))


def stack(blocks: Iterable[Matrix], ncols: int) -> Matrix:
    rows: list = []
    for b in blocks:
        rows.extend(b.rows)
    return Matrix(tuple(rows), ncols)
