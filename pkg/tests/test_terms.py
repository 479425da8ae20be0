import random

import pytest

from quadlat.terms import (
    BOTTOM,
    TOP,
    ParseError,
    format_term,
    gen,
    join,
    meet,
    parse_term,
    random_term,
    substitute,
    term_size,
)


def e(i):
    return gen(i)


def test_meet_examples():
    assert meet([e(1), TOP]) is e(1)
    assert meet([e(1), BOTTOM]) is BOTTOM
    t = meet([e(2), join([e(3), e(4)])])
    assert format_term(t) == "(* e2 (+ e3 e4))"


def test_join_examples():
    assert join([e(1), BOTTOM]) is e(1)
    assert join([e(1), e(1)]) is e(1)
    assert format_term(join([e(2), e(3), e(4)])) == "(+ e2 e3 e4)"


def test_empty_list_rejected():
    with pytest.raises(ValueError):
        meet([])
    with pytest.raises(ValueError):
        join([])


def test_flattening_and_dedupe():
    t = join([e(1), join([e(2), e(3)])])
    assert format_term(t) == "(+ e1 e2 e3)"
    u = meet([meet([e(1), e(2)]), e(2), e(1)])
    assert format_term(u) == "(* e1 e2)"


def test_hash_consing_identity():
    a = join([e(2), meet([e(3), e(4)])])
    b = join([meet([e(4), e(3)]), e(2)])
    assert a is b


def test_composites_never_contain_constants():
    t = meet([join([e(1), TOP]), e(2)])
    assert t is e(2)
    u = join([meet([e(1), BOTTOM]), e(2)])
    assert u is e(2)


def test_normalization_idempotent_fuzz():
    rng = random.Random(23)
    for _ in range(400):
        t = random_term(rng, 5)
        if t.is_meet():
            assert meet(list(t.children)) is t
        elif t.is_join():
            assert join(list(t.children)) is t


def test_substitute_examples():
    q12 = meet([join([e(1), e(2)]), join([e(3), e(4)])])
    images = {k: meet([e(k), q12]) for k in range(1, 5)}
    t = substitute(e(1), images)
    assert format_term(t) == "(* e1 (+ e1 e2) (+ e3 e4))"
    ident = {k: e(k) for k in range(1, 5)}
    body = join([e(1), meet([e(2), e(3)])])
    assert substitute(body, ident) is body
    assert substitute(TOP, ident) is TOP
    assert substitute(BOTTOM, images) is BOTTOM


def test_substitute_requires_all_generators():
    with pytest.raises(ValueError):
        substitute(e(1), {1: e(1), 2: e(2), 3: e(3)})


def test_parse_examples():
    assert parse_term("(+ e2 e3 e4)") is join([e(2), e(3), e(4)])
    assert parse_term("(* e2 (+ e3 e4))") is meet([e(2), join([e(3), e(4)])])
    assert parse_term("I") is TOP
    assert parse_term("0") is BOTTOM
    assert parse_term("  (*   e1\n e2 )") is meet([e(1), e(2)])


def test_parse_errors_carry_position():
    with pytest.raises(ParseError):
        parse_term("(+ e1")
    with pytest.raises(ParseError) as exc:
        parse_term("(+ e1)")
    assert "two arguments" in str(exc.value)
    with pytest.raises(ParseError):
        parse_term("(? e1 e2)")
    with pytest.raises(ParseError):
        parse_term("e5")
    with pytest.raises(ParseError):
        parse_term("e1 e2")


def test_print_parse_roundtrip_fuzz():
    rng = random.Random(29)
    for _ in range(1000):
        t = random_term(rng, 6)
        assert parse_term(format_term(t)) is t


def test_term_size_counts_dag_nodes():
    shared = join([e(1), e(2)])
    t = meet([shared, join([shared, e(3)])])
    assert term_size(t) == 6  # e1, e2, e3, shared, inner join, outer meet
