"""JSON file format for algebras and algebroids (format_version "1").

Rationals are written as strings ``"p/q"`` (or ``"n"``); every tensor is dense.
Optional blocks: ``algebroid``, ``grading``, ``gorenstein`` {t, B}, ``l1``
(an n x m matrix whose column p is L(1) of the p-th B basis vector) and
``sl2`` {triple, decomposition}.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from .algebroid import VertexAlgebroid
from .commalg import CommAlgebra, Grading
from .errors import DimensionMismatch, ParseError
from .exactnum import Matrix, Vector, vec

FORMAT_VERSION = "1"


@dataclass(frozen=True)
class GorensteinBlock:
    t: Vector
    B: Matrix


@dataclass(frozen=True)
class Sl2Block:
    triple: tuple
    decomposition: tuple  # ((a_{j,0}, a_{j,1}), ...)


@dataclass(frozen=True)
class AlgebroidFile:
    fixture_id: str
    algebra: CommAlgebra
    algebroid: VertexAlgebroid | None = None
    grading: Grading | None = None
    gorenstein: GorensteinBlock | None = None
    l1: Matrix | None = None
    sl2: Sl2Block | None = None

    def __post_init__(self):
        if self.algebroid is not None and self.algebroid.algebra != self.algebra:
            raise DimensionMismatch("algebroid is built over a different algebra")


def _strs(x):
    if isinstance(x, (list, tuple)):
        return [_strs(y) for y in x]
    return str(x)


def to_json(f: AlgebroidFile) -> dict:
    a = f.algebra
    out: dict = {
        "format_version": FORMAT_VERSION,
        "id": f.fixture_id,
        "algebra": {"dim": a.dim, "names": list(a.names), "unit": _strs(a.unit), "mul": _strs(a.mul)},
    }
    g = f.algebroid
    if g is not None:
        out["algebroid"] = {
            "b_dim": g.b_dim,
            "names": list(g.names),
            **{k: _strs(getattr(g, k)) for k in ("partial", "action", "bracket", "anchor", "pairing")},
        }
    if f.grading is not None:
        out["grading"] = list(f.grading.degrees)
    if f.gorenstein is not None:
        out["gorenstein"] = {"t": _strs(f.gorenstein.t), "B": _strs(f.gorenstein.B.rows)}
    if f.l1 is not None:
        out["l1"] = _strs(f.l1.rows)
    if f.sl2 is not None:
        out["sl2"] = {"triple": list(f.sl2.triple), "decomposition": _strs(f.sl2.decomposition)}
    return out


def dumps(f: AlgebroidFile) -> str:
    return json.dumps(to_json(f), indent=1) + "\n"


def _get(d: dict, key: str, where: str):
    if not isinstance(d, dict):
        raise ParseError(f"{where}: expected an object")
    if key not in d:
        raise ParseError(f"{where}: missing key {key!r}")
    return d[key]


def _matrix(raw, nrows: int, ncols: int, what: str) -> Matrix:
    if not isinstance(raw, list) or len(raw) != nrows or any(not isinstance(r, list) or len(r) != ncols for r in raw):
        raise DimensionMismatch(f"{what}: expected a {nrows}x{ncols} array")
    return Matrix.of(raw, ncols)


def from_json(data: dict, default_id: str = "") -> AlgebroidFile:
    version = _get(data, "format_version", "file")
    if version != FORMAT_VERSION:
        raise ParseError(f"unsupported format_version {version!r}")
    raw_alg = _get(data, "algebra", "file")
    unit = vec(_get(raw_alg, "unit", "algebra"))
    dim = _get(raw_alg, "dim", "algebra")
    if dim != len(unit):
        raise DimensionMismatch(f"algebra: dim {dim} but unit has {len(unit)} entries")
    alg = CommAlgebra(_get(raw_alg, "mul", "algebra"), unit, tuple(raw_alg.get("names", ())))
    n = alg.dim

    g = None
    if "algebroid" in data:
        raw = data["algebroid"]
        m = _get(raw, "b_dim", "algebroid")
        partial = _get(raw, "partial", "algebroid")
        if m == 0 and partial == []:
            partial = [[] for _ in range(n)]
        g = VertexAlgebroid(
            alg, partial, *(_get(raw, k, "algebroid") for k in ("action", "bracket", "anchor", "pairing")),
            names=tuple(raw.get("names", ())),
        )
        if g.b_dim != m:
            raise DimensionMismatch(f"algebroid: b_dim {m} but tensors have {g.b_dim}")

    grading = None
    if "grading" in data:
        grading = Grading(data["grading"])
        if len(grading.degrees) != n:
            raise DimensionMismatch(f"grading: {len(grading.degrees)} degrees for dim {n}")

    gor = None
    if "gorenstein" in data:
        raw = data["gorenstein"]
        t = vec(_get(raw, "t", "gorenstein"))
        if len(t) != n:
            raise DimensionMismatch(f"gorenstein.t: expected {n} entries")
        gor = GorensteinBlock(t, _matrix(_get(raw, "B", "gorenstein"), n, n, "gorenstein.B"))

    l1 = None
    if "l1" in data:
        if g is None:
            raise ParseError("l1 given without an algebroid block")
        l1 = _matrix(data["l1"], n, g.b_dim, "l1")

    sl2 = None
    if "sl2" in data:
        if g is None:
            raise ParseError("sl2 given without an algebroid block")
        raw = data["sl2"]
        triple = tuple(int(i) for i in _get(raw, "triple", "sl2"))
        if len(triple) != 3 or any(not 0 <= i < g.b_dim for i in triple):
            raise DimensionMismatch("sl2.triple: need three B indices")
        decomposition = []
        for pair in _get(raw, "decomposition", "sl2"):
            if len(pair) != 2 or any(len(x) != n for x in pair):
                raise DimensionMismatch("sl2.decomposition: each summand needs two A-vectors")
            decomposition.append(tuple(vec(x) for x in pair))
        sl2 = Sl2Block(triple, tuple(decomposition))

    return AlgebroidFile(data.get("id", default_id), alg, g, grading, gor, l1, sl2)


def loads(text: str, default_id: str = "") -> AlgebroidFile:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    return from_json(data, default_id)


def load(path) -> AlgebroidFile:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    return loads(text, path.stem)


def dump(f: AlgebroidFile, path) -> None:
    Path(path).write_text(dumps(f))
