import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from kleinrgw.dsl import (
    ArityError, Compose, DslSyntaxError, Generator, Identity, Tensor, evaluate, functoriality_check,
    parse, random_expression, relation_report, to_text, typecheck,
)
from kleinrgw.ring import Scalar, t
from kleinrgw.tqft import closed_invariant, elementary_operator


def test_parse_chain():
    assert parse("cup . K . xcap") == Compose(Generator("cup"), Compose(Generator("K"), Generator("xcap")))


def test_parse_level_and_tensor():
    assert parse("tube(-1,0)") == Generator("tube", (-1, 0))
    assert parse("cap ⊗ cap") == parse("cap * cap") == Tensor(Generator("cap"), Generator("cap"))
    assert parse("id(2)") == Identity(2)
    assert parse("(a * b)".replace("a", "cap").replace("b", "cup")) == Tensor(Generator("cap"), Generator("cup"))


@pytest.mark.parametrize("text, pos", [("cup . ", 6), ("cup $ cap", 4), ("foo", 0), ("cap(1)", 5), ("cap cup", 4)])
def test_syntax_errors_report_position(text, pos):
    with pytest.raises(DslSyntaxError) as info:
        parse(text)
    assert info.value.pos == pos


def test_typecheck():
    assert typecheck(parse("cap")) == (0, 1)
    assert typecheck(parse("cup . cap")) == (0, 0)
    assert typecheck(parse("pants . copants")) == (2, 2)
    assert typecheck(parse("twist . cap * xcap")) == (0, 2)
    with pytest.raises(ArityError) as info:
        typecheck(parse("cup . pants"))
    assert info.value.pos == 4
    with pytest.raises(ArityError):
        typecheck(parse("K . cap * cap"))


def test_evaluate_scalars():
    assert evaluate("cup . K . xcap", 3) == Scalar.const(1)
    assert evaluate("cup . cap", 2) == Scalar.t_power(-4, Fraction(1, 2))
    for d in range(1, 5):
        assert evaluate("cup . K . K . xcap", d) == closed_invariant(2, 0, d)
        assert evaluate("cup . A . K . K . xcap", d).agrees(closed_invariant(2, -1, d))


def test_evaluate_levels():
    assert evaluate("tube(-1,0)", 3) == elementary_operator("A", 3)
    assert evaluate("tube(0,-1)", 3) == elementary_operator("Abar", 3)
    assert evaluate("tube(1,1) . tube(-1,-1)", 2).agrees(evaluate("id(1)", 2))


@pytest.mark.parametrize("d", range(1, 6))
def test_relations(d):
    report = relation_report(d)
    assert all(report.values()), report


def test_random_expressions_are_well_typed():
    rng = random.Random(3)
    for _ in range(200):
        n, m = rng.randint(0, 3), rng.randint(0, 3)
        assert typecheck(random_expression(rng, n, m)) == (n, m)


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 3), st.integers(0, 3), st.integers(0, 2**32))
def test_print_parse_roundtrip(n, m, seed):
    node = random_expression(seed, n, m)
    text = to_text(node)
    assert parse(text) == node
    assert to_text(parse(text)) == text


def test_functoriality_small():
    rng = random.Random(11)
    for _ in range(10):
        compose_ok, tensor_ok, _ = functoriality_check(rng, rng.randint(1, 3), order=6)
        assert compose_ok and tensor_ok
