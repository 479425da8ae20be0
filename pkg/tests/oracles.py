"""Brute-force oracles used by the test suite.

These work by enumerating whole subspaces as vector sets, so they stay
independent of the Gaussian-elimination code paths they are checking.
Only usable for tiny p^dim.
"""

from __future__ import annotations

import itertools

Vec = tuple[int, ...]


def span_set(p: int, ambient: int, rows) -> frozenset[Vec]:
    """All vectors in the span of the given rows, as tuples."""
    rows = [tuple(int(x) % p for x in r) for r in rows]
    vecs = {tuple([0] * ambient)}
    for coeffs in itertools.product(range(p), repeat=len(rows)):
        v = [0] * ambient
        for c, r in zip(coeffs, rows):
            for i in range(ambient):
                v[i] = (v[i] + c * r[i]) % p
        vecs.add(tuple(v))
    return frozenset(vecs)


def set_dim(p: int, vecs: frozenset[Vec]) -> int:
    n = len(vecs)
    d = 0
    while p**d < n:
        d += 1
    assert p**d == n, "not a subspace"
    return d


def sum_sets(p: int, ambient: int, a: frozenset[Vec], b: frozenset[Vec]) -> frozenset[Vec]:
    out = set()
    for u in a:
        for v in b:
            out.add(tuple((x + y) % p for x, y in zip(u, v)))
    return frozenset(out)


def apply_set(p: int, mat, vecs: frozenset[Vec]) -> frozenset[Vec]:
    rows = [tuple(int(x) % p for x in r) for r in mat]
    cod = len(rows[0]) if rows else 0
    out = set()
    for v in vecs:
        w = [0] * cod
        for coef, row in zip(v, rows):
            for i in range(cod):
                w[i] = (w[i] + coef * row[i]) % p
        out.add(tuple(w))
    return frozenset(out)


def kernel_set(p: int, mat, domain_dim: int) -> frozenset[Vec]:
    rows = [tuple(int(x) % p for x in r) for r in mat]
    cod = len(rows[0]) if rows else 0
    out = set()
    for v in itertools.product(range(p), repeat=domain_dim):
        w = [0] * cod
        for coef, row in zip(v, rows):
            for i in range(cod):
                w[i] = (w[i] + coef * row[i]) % p
        if all(x == 0 for x in w):
            out.add(v)
    return frozenset(out)
