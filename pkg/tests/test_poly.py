import pytest

from quadlat.poly import (
    SIGNATURE_TABLE,
    atomic,
    cumulative_e,
    cumulative_f0,
    e_alpha,
    e_spellings,
    end_one_type,
    f_alpha0,
    f_spellings,
    gp_e,
    gp_f,
    inv_cumulative_e,
    inv_cumulative_f0,
    unified_e,
    unified_f,
    unified_signature,
    unified_triple_of_class,
)
from quadlat.reps import catalog, semantically_equal, semantically_leq
from quadlat.seqs import canonicalize, classes_of_length, seq_from_string
from quadlat.terms import TOP, format_term, gen, parse_term

REPS = catalog(2) + catalog(3)


def cls(text):
    return canonicalize(seq_from_string(text))


def eq(t1, t2):
    return semantically_equal(t1, t2, REPS)


def test_atomic_examples():
    assert atomic(1, 2, 0) is TOP
    assert format_term(atomic(1, 2, 1)) == "(+ e1 e2)"
    assert format_term(atomic(3, 4, 2)) == "(+ e3 (* e4 (+ e1 e2)))"
    with pytest.raises(ValueError):
        atomic(1, 1, 2)
    with pytest.raises(ValueError):
        atomic(1, 2, -1)


def test_atomic_order_insensitive_semantically():
    for (j, k, l) in ((1, 3, 4), (2, 3, 4), (3, 1, 2), (4, 2, 3)):
        for n in range(1, 5):
            lhs = parse_term(f"(* e{j} {format_term(atomic(k, l, n))})")
            rhs = parse_term(f"(* e{j} {format_term(atomic(l, k, n))})")
            assert eq(lhs, rhs)


def test_atomic_chain_is_decreasing():
    for n in range(1, 5):
        assert semantically_leq(atomic(1, 2, n), atomic(1, 2, n - 1), REPS)


def test_e_alpha_worked_examples():
    assert format_term(e_alpha(cls("21"))) == "(* e2 (+ e3 e4))"
    assert format_term(e_alpha(cls("121"))) == "(* e1 (+ e3 (* e4 (+ e1 e2))))"
    assert format_term(e_alpha(cls("321"))) == "(* e3 (+ e1 e2) (+ e1 e4))"
    assert format_term(e_alpha(cls("2141"))) == "(* e2 (+ e3 e4) (+ e4 (* e1 (+ e2 e3))))"
    assert e_alpha(cls("1")) is gen(1)
    assert e_alpha(cls("2341")) is e_alpha(cls("2141"))


def test_e_alpha_relabeled_start():
    # class of "12": same shape as "21" with 1 and 2 swapped
    assert format_term(e_alpha(cls("12"))) == "(* e1 (+ e3 e4))"
    assert format_term(e_alpha(cls("32"))) == "(* e3 (+ e1 e4))"


def test_f_alpha0_worked_examples():
    assert format_term(f_alpha0(cls("1"))) == "(* e1 (+ e2 e3 e4))"
    assert format_term(f_alpha0(cls("2"))) == "(* e2 (+ e1 e3 e4))"
    expected_f210 = parse_term("(* (* e2 (+ e3 e4)) (+ e1 e4 (* e3 (+ e1 e2))))")
    assert f_alpha0(cls("21")) is expected_f210
    paper_f1210 = parse_term(
        "(* (* e1 (+ e3 (* e4 (+ e1 e2)))) (+ (* e1 (+ e2 e3)) (* (+ e2 e4) (+ e3 e4))))"
    )
    assert eq(f_alpha0(cls("121")), paper_f1210)
    paper_f3210 = parse_term(
        "(* (* e3 (+ e1 e2) (+ e1 e4)) (+ e1 (* (+ e3 e2) (+ e2 e4) (+ e3 e4))))"
    )
    assert eq(f_alpha0(cls("321")), paper_f3210)
    paper_f21410 = parse_term(
        "(* (* e2 (+ e3 e4) (+ e4 (* e1 (+ e2 e3))))"
        " (+ (+ e3 (* e4 (+ e1 e2))) (* e1 (+ e2 (* e4 (+ e1 e3))))))"
    )
    assert eq(f_alpha0(cls("2141")), paper_f21410)


def test_f_is_below_e():
    for n in range(1, 5):
        for c in classes_of_length(n):
            assert semantically_leq(f_alpha0(c), e_alpha(c), REPS)


def test_row_spellings_agree_semantically():
    for n in range(1, 6):
        for c in classes_of_length(n, start=1):
            es = e_spellings(c)
            fs = f_spellings(c)
            assert es and fs
            assert all(eq(es[0], other) for other in es[1:])
            assert all(eq(fs[0], other) for other in fs[1:])


def test_unified_examples():
    assert unified_e(1, 0, 0, 0) is gen(1)
    assert format_term(unified_e(1, 0, 0, 1)) == "(* e1 (+ e3 e4))"
    assert format_term(unified_f(1, 1, 0, 0)) == (
        "(* e1 (+ e2 e3) (+ e2 e4 (* e1 (+ e3 e4))))"
    )
    with pytest.raises(ValueError):
        unified_f(1, 0, 0, 1)
    with pytest.raises(ValueError):
        unified_e(1, -1, 0, 0)
    # signature-table row check: unified form vs the class polynomial of F12
    for r in range(0, 2):
        for s in range(0, 2):
            for t in range(1, 3):
                u = unified_e(1, 2 * r, 2 * s, 2 * t - 1)
                matches = [
                    c
                    for c in classes_of_length(2 * (r + s + t), end=1, start=2)
                    if unified_triple_of_class(c) == (2 * r, 2 * s, 2 * t - 1)
                ]
                assert len(matches) == 1
                assert eq(u, e_alpha(matches[0]))


def test_unified_matches_class_polynomials():
    for n in range(1, 5):
        for c in classes_of_length(n):
            triple = unified_triple_of_class(c)
            assert sum(triple) == n - 1
            assert eq(e_alpha(c), unified_e(c.end, *triple))


def test_signature_bijection():
    seen = set()
    for n in range(1, 7):
        for c in classes_of_length(n, end=1):
            ty = end_one_type(c)
            sig = unified_signature(*unified_triple_of_class(c))
            assert SIGNATURE_TABLE[ty] == sig
            seen.add(sig)
    assert len(seen) == 8


def test_gp_e_examples():
    assert format_term(gp_e(seq_from_string("21"))) == "(* e2 (+ e3 e4))"
    assert eq(gp_e(seq_from_string("321")), parse_term("(* e3 (+ e1 e2) (+ e1 e4))"))
    assert eq(
        gp_e(seq_from_string("2341")),
        parse_term("(* e2 (+ e3 e4) (+ e4 (* e1 (+ e2 e3))))"),
    )


def test_gp_f_examples():
    paper = parse_term("(* e2 (+ e3 e4) (+ e4 e1 (* e3 (+ e1 e2))))")
    assert eq(gp_f(seq_from_string("21")), paper)
    assert eq(gp_f(seq_from_string("121")), f_alpha0(cls("121")))
    expected_3210 = parse_term(
        "(* e3 (+ e1 e2) (+ e1 e4) (+ e1 (* (+ e2 e4) (+ e3 e2) (+ e3 e4))))"
    )
    assert eq(gp_f(seq_from_string("321")), expected_3210)


def test_gp_coincidence_small():
    for text in ("21", "121", "321", "2341"):
        assert eq(gp_e(seq_from_string(text)), e_alpha(cls(text)))
    for text in ("21", "121", "321"):
        assert eq(gp_f(seq_from_string(text)), f_alpha0(cls(text)))


def test_cumulative_examples():
    assert cumulative_e(1, 1) is gen(1)
    expected = parse_term("(+ (* e2 (+ e3 e4)) (* e3 (+ e2 e4)) (* e4 (+ e2 e3)))")
    assert cumulative_e(1, 2) is expected
    assert len(cumulative_e(1, 3).children) == 6
    assert cumulative_f0(1) is TOP
    f02 = parse_term(
        "(+ (* e1 (+ e2 e3 e4)) (* e2 (+ e1 e3 e4))"
        " (* e3 (+ e1 e2 e4)) (* e4 (+ e1 e2 e3)))"
    )
    assert cumulative_f0(2) is f02
    with pytest.raises(ValueError):
        cumulative_e(1, 0)


def test_inverse_cumulative_counts_and_examples():
    assert inv_cumulative_e(1, 1) is gen(1)
    for n in range(1, 5):
        for i in range(1, 5):
            t = inv_cumulative_e(i, n)
            expect = n * (n + 1) // 2
            assert (len(t.children) if t.is_join() else 1) == expect
    # r >= 1 leaves triple counts of the previous level
    t = inv_cumulative_f0(2)
    assert len(t.children) == 4 * 3  # four ends, three triples each


def test_sum_of_inverse_equals_sum_of_cumulative():
    for n in range(1, 5):
        lhs = parse_term(
            "(+ "
            + " ".join(format_term(inv_cumulative_e(i, n)) for i in range(1, 5))
            + ")"
        )
        rhs = parse_term(
            "(+ "
            + " ".join(format_term(cumulative_e(i, n)) for i in range(1, 5))
            + ")"
        )
        assert eq(lhs, rhs)
