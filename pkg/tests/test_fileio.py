from __future__ import annotations

import json
import random

import pytest
from hypothesis import given, strategies as st

from valab.corpus import corpus, corrupted_json, ex62, fixture_path
from valab.errors import DimensionMismatch, InputError, ParseError
from valab.fileio import dump, dumps, from_json, load, loads, to_json


def test_every_shipped_file_equals_its_builder(fixtures):
    for name, f in fixtures.items():
        assert load(fixture_path(name)) == f, name


def test_shipped_files_are_byte_identical_to_a_fresh_dump(fixtures):
    for name, f in fixtures.items():
        assert fixture_path(name).read_text() == dumps(f)


def test_rationals_are_strings():
    data = to_json(ex62(1))
    assert data["gorenstein"]["t"] == ["-1/2", "1"]
    assert data["format_version"] == "1"


def test_round_trip_through_disk(tmp_path, fixtures):
    for name, f in fixtures.items():
        path = tmp_path / f"{name}.json"
        dump(f, path)
        assert load(path) == f


def test_id_defaults_to_file_stem(tmp_path):
    data = to_json(ex62(1))
    del data["id"]
    path = tmp_path / "nameless.json"
    path.write_text(json.dumps(data))
    assert load(path).fixture_id == "nameless"


def test_corrupted_file_is_rejected():
    with pytest.raises(DimensionMismatch):
        load(fixture_path("corrupt_short_mul"))
    with pytest.raises(DimensionMismatch):
        from_json(corrupted_json())


@pytest.mark.parametrize(
    "edit, error",
    [
        (lambda d: d.update(format_version="2"), ParseError),
        (lambda d: d.pop("algebra"), ParseError),
        (lambda d: d["algebra"].update(dim=3), DimensionMismatch),
        (lambda d: d["algebra"]["unit"].__setitem__(0, "1/0"), ParseError),
        (lambda d: d["algebra"]["unit"].__setitem__(0, 0.5), ParseError),
        (lambda d: d.update(grading=[0]), DimensionMismatch),
        (lambda d: d["gorenstein"].update(t=["1"]), DimensionMismatch),
        (lambda d: d.update(l1=[["1"]]), DimensionMismatch),
        (lambda d: d["algebroid"].update(b_dim=5), DimensionMismatch),
        (lambda d: d["algebroid"]["bracket"].pop(), DimensionMismatch),
    ],
)
def test_malformed_input(edit, error):
    data = to_json(ex62(1))
    edit(data)
    with pytest.raises(error):
        from_json(data)


def test_algebroid_must_share_the_algebra():
    from dataclasses import replace

    f = ex62(1)
    with pytest.raises(DimensionMismatch):
        replace(f, algebroid=f.algebroid.with_entry("mul", (1, 1, 0), 5))


def test_unreadable_input(tmp_path):
    with pytest.raises(ParseError):
        loads("{not json")
    with pytest.raises(ParseError):
        load(tmp_path / "missing.json")
    with pytest.raises(InputError):
        loads("[1, 2]")


@given(st.sampled_from(sorted(corpus())), st.integers(0, 10_000))
def test_round_trip_after_random_mutation(name, seed):
    f = corpus()[name]
    if f.algebroid is None:
        return
    from valab.mutation import random_mutations
    from dataclasses import replace

    mut = random_mutations(f.algebroid, seed, 1)[0]
    h = mut.apply(f.algebroid)
    g = replace(f, algebra=h.algebra, algebroid=h)
    assert loads(dumps(g)) == g
    assert loads(dumps(g)) != f or mut.new == mut.old
