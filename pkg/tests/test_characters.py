import json
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from kleinrgw.characters import (
    CharacterTable, cache_path, character, character_table, clear_memory_cache, compute_table,
)
from kleinrgw.combinatorics import partitions_of, sign, zeta
from kleinrgw.errors import ArgumentError
from kleinrgw.oracles import frobenius_character


def test_small_tables():
    assert compute_table(1).values == ((1,),)
    t2 = compute_table(2)
    assert t2.partitions == ((2,), (1, 1))
    assert t2((1, 1), (2,)) == -1
    assert character((2, 1), (3,)) == -1


def test_size_mismatch():
    with pytest.raises(ArgumentError):
        character((2, 1), (2,))


@given(st.integers(1, 8))
def test_trivial_and_sign_rows(d):
    table = compute_table(d)
    for a in partitions_of(d):
        assert table((d,), a) == 1
        assert table((1,) * d, a) == sign(a)


@pytest.mark.parametrize("d", range(1, 9))
def test_orthogonality(d):
    table = compute_table(d)
    parts = table.partitions
    for r in parts:
        for q in parts:
            row = sum(Fraction(table(r, a) * table(q, a), zeta(a)) for a in parts)
            assert row == (1 if r == q else 0)
    for a in parts:
        for b in parts:
            col = sum(table(r, a) * table(r, b) for r in parts)
            assert col == (zeta(a) if a == b else 0)


@pytest.mark.parametrize("d", range(1, 7))
def test_against_frobenius_formula(d):
    table = compute_table(d)
    for r in partitions_of(d):
        for a in partitions_of(d):
            assert table(r, a) == frobenius_character(r, a)


def test_dims_column():
    table = compute_table(5)
    assert len(table.partitions) == 7
    assert table.dims == tuple(table(r, (1,) * 5) for r in table.partitions)


def test_json_roundtrip():
    table = compute_table(6)
    assert CharacterTable.from_json(table.to_json()) == table


def test_cache_hit_is_byte_identical(tmp_path):
    clear_memory_cache()
    cold = character_table(7, directory=tmp_path)
    path = cache_path(7, tmp_path)
    first = path.read_bytes()
    clear_memory_cache()
    warm = character_table(7, directory=tmp_path)
    assert warm == cold == compute_table(7)
    assert path.read_bytes() == first
    assert first == compute_table(7).to_json().encode()


def test_corrupt_cache_is_ignored(tmp_path):
    clear_memory_cache()
    path = cache_path(4, tmp_path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps({"format": 999}))
    assert character_table(4, directory=tmp_path) == compute_table(4)
    clear_memory_cache()
