import random

import numpy as np
import pytest

from quadlat.gf import (
    PrimeField,
    Subspace,
    apply_map,
    as_matrix,
    intersect_spaces,
    is_prime,
    kernel,
    leq,
    rref,
    sum_spaces,
)

from oracles import apply_set, kernel_set, span_set, sum_sets

PRIMES = (2, 3, 5)


def random_subspace(rng, p, d):
    k = rng.randrange(0, d + 1)
    rows = [[rng.randrange(p) for _ in range(d)] for _ in range(k)]
    return Subspace.from_rows(p, d, rows)


def test_prime_field_rejects_composites():
    with pytest.raises(ValueError):
        PrimeField(4)
    assert PrimeField(5).inv(2) == 3
    assert not is_prime(1)


def test_rref_hand_examples():
    # [[1,1],[0,1]] over GF(2) reduces to the identity
    r, piv = rref(as_matrix([[1, 1], [0, 1]]), 2)
    assert r.tolist() == [[1, 0], [0, 1]] and piv == (0, 1)
    # zero matrix is fixed
    r, piv = rref(np.zeros((2, 3), dtype=np.int64), 3)
    assert r.tolist() == [[0, 0, 0], [0, 0, 0]] and piv == ()
    # [[2]] over GF(3): scale by 2^-1 = 2
    r, piv = rref(as_matrix([[2]]), 3)
    assert r.tolist() == [[1]] and piv == (0,)


def test_rref_idempotent_fuzz():
    rng = random.Random(7)
    for p in PRIMES:
        for _ in range(150):
            m = as_matrix(
                [[rng.randrange(p) for _ in range(rng.randrange(1, 6))]] or [[0]]
            )
            rows = rng.randrange(1, 6)
            m = np.array(
                [[rng.randrange(p) for _ in range(m.shape[1])] for _ in range(rows)],
                dtype=np.int64,
            )
            r1, piv1 = rref(m, p)
            r2, piv2 = rref(r1, p)
            assert r1.tolist() == r2.tolist() and piv1 == piv2


def test_subspace_equality_is_structural():
    a = Subspace.from_rows(2, 2, [[1, 0], [1, 1]])
    b = Subspace.from_rows(2, 2, [[0, 1], [1, 0]])
    assert a == b and hash(a) == hash(b)
    assert a.is_full()


def test_sum_examples():
    a = Subspace.from_rows(2, 2, [[1, 0]])
    b = Subspace.from_rows(2, 2, [[0, 1]])
    assert sum_spaces(a, b) == Subspace.full(2, 2)
    assert sum_spaces(a, a) == a
    c = Subspace.from_rows(3, 2, [[1, 0]])
    d = Subspace.from_rows(3, 2, [[1, 1]])
    assert sum_spaces(c, d) == Subspace.full(3, 2)


def test_intersect_examples():
    a = Subspace.from_rows(2, 2, [[1, 0]])
    assert intersect_spaces(Subspace.full(2, 2), a) == a
    b = Subspace.from_rows(2, 2, [[1, 1]])
    assert intersect_spaces(a, b) == Subspace.zero(2, 2)
    e = Subspace.from_rows(5, 2, [[1, 0], [0, 1]])
    f = Subspace.from_rows(5, 2, [[1, 1]])
    assert intersect_spaces(e, f) == f


def test_ambient_mismatch_raises():
    a = Subspace.from_rows(2, 2, [[1, 0]])
    b = Subspace.from_rows(2, 3, [[1, 0, 0]])
    with pytest.raises(ValueError):
        sum_spaces(a, b)
    c = Subspace.from_rows(3, 2, [[1, 0]])
    with pytest.raises(ValueError):
        intersect_spaces(a, c)


def test_kernel_examples():
    k = kernel(as_matrix([[1], [1], [1], [1]]), 3)
    assert k.ambient == 4 and k.dim == 3
    assert kernel(np.eye(3, dtype=np.int64), 5) == Subspace.zero(5, 3)
    # zero map from GF(2)^2 to GF(2)^1
    assert kernel(np.zeros((2, 1), dtype=np.int64), 2) == Subspace.full(2, 2)


def test_apply_map_examples():
    a = Subspace.from_rows(2, 2, [[1, 1]])
    ident = np.eye(2, dtype=np.int64)
    assert apply_map(ident, a) == a
    zero = np.zeros((2, 2), dtype=np.int64)
    assert apply_map(zero, a) == Subspace.zero(2, 2)
    proj = as_matrix([[1], [0]])
    assert apply_map(proj, a) == Subspace.from_rows(2, 1, [[1]])


def test_ops_against_bruteforce_oracle():
    rng = random.Random(11)
    for p in PRIMES:
        d = 3
        for _ in range(40):
            a = random_subspace(rng, p, d)
            b = random_subspace(rng, p, d)
            sa = span_set(p, d, a.basis)
            sb = span_set(p, d, b.basis)
            s = sum_spaces(a, b)
            assert span_set(p, d, s.basis) == sum_sets(p, d, sa, sb)
            i = intersect_spaces(a, b)
            assert span_set(p, d, i.basis) == (sa & sb)
            m = [[rng.randrange(p) for _ in range(2)] for _ in range(d)]
            img = apply_map(as_matrix(m), a)
            assert span_set(p, 2, img.basis) == apply_set(p, m, sa)
            ker = kernel(as_matrix(m), p)
            assert span_set(p, d, ker.basis) == kernel_set(p, m, d)


def test_dim_formula_fuzz():
    rng = random.Random(13)
    for p in PRIMES:
        for _ in range(120):
            d = rng.randrange(1, 6)
            a = random_subspace(rng, p, d)
            b = random_subspace(rng, p, d)
            s = sum_spaces(a, b)
            i = intersect_spaces(a, b)
            assert s.dim + i.dim == a.dim + b.dim


def test_modular_law_fuzz():
    # a <= c  =>  a + (b ^ c) == (a + b) ^ c
    rng = random.Random(17)
    for p in PRIMES:
        for _ in range(200):
            d = rng.randrange(1, 6)
            c = random_subspace(rng, p, d)
            rows = [c.basis[i] for i in range(c.dim) if rng.random() < 0.6]
            a = Subspace.from_rows(p, d, rows) if rows else Subspace.zero(p, d)
            b = random_subspace(rng, p, d)
            assert leq(a, c)
            lhs = sum_spaces(a, intersect_spaces(b, c))
            rhs = intersect_spaces(sum_spaces(a, b), c)
            assert lhs == rhs


def test_apply_map_distributes_over_sum():
    rng = random.Random(19)
    for p in PRIMES:
        for _ in range(60):
            d = rng.randrange(1, 5)
            cod = rng.randrange(1, 5)
            a = random_subspace(rng, p, d)
            b = random_subspace(rng, p, d)
            m = as_matrix([[rng.randrange(p) for _ in range(cod)] for _ in range(d)])
            assert apply_map(m, sum_spaces(a, b)) == sum_spaces(
                apply_map(m, a), apply_map(m, b)
            )
