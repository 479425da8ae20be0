"""Substitution endomorphisms of the lattice and the perfect elements.

For a split of the generators into two pairs {i,j} | {k,l}, the polynomial
q_ij = (e_i + e_j)(e_k + e_l) drives the endomorphism

    gamma_ij : e_m -> e_m * q_ij,   I -> q_ij,   0 -> 0,

and only the split matters, so gamma_12 = gamma_21 = gamma_34 = gamma_43
and there are exactly three distinct endomorphisms.  Their sum R =
gamma_12 + gamma_13 + gamma_14 generates the perfect elements s_n, t_n,
p_{i,n}; the cumulative elements give the coatom system h_t(n).  cube(n)
assembles the sixteen-row table of the Boolean cube in all three
descriptions.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .poly import cumulative_e, cumulative_f0
from .seqs import _PAIR_TYPE
from .terms import BOTTOM, TOP, Term, gen, join, meet, map_generators

__all__ = [
    "EndoSpec", "q_poly", "gamma", "r_endo", "s_poly", "t_poly", "p_poly",
    "h_poly", "cube", "CubeRow",
]

_TYPE_CANON = ((1, 2), (1, 3), (1, 4))


@dataclass(frozen=True)
class EndoSpec:
    """A pair split {i,j} | {k,l}, normalized to its 1-containing pair."""

    i: int
    j: int

    def __init__(self, i: int, j: int):
        if i == j or i not in (1, 2, 3, 4) or j not in (1, 2, 3, 4):
            raise ValueError(f"endomorphism needs two distinct indices, got ({i},{j})")
        ci, cj = _TYPE_CANON[_PAIR_TYPE[(i, j)]]
        object.__setattr__(self, "i", ci)
        object.__setattr__(self, "j", cj)

    @property
    def pairs(self) -> tuple[tuple[int, int], tuple[int, int]]:
        k, l = sorted(set((1, 2, 3, 4)) - {self.i, self.j})
        return ((self.i, self.j), (k, l))

    def __str__(self) -> str:
        return f"gamma_{self.i}{self.j}"


GAMMAS = (EndoSpec(1, 2), EndoSpec(1, 3), EndoSpec(1, 4))


@lru_cache(maxsize=None)
def q_poly(spec: EndoSpec) -> Term:
    """The split polynomial (e_i + e_j)(e_k + e_l)."""
    (i, j), (k, l) = spec.pairs
    return meet([join([gen(i), gen(j)]), join([gen(k), gen(l)])])


_GAMMA_IMAGES: dict[EndoSpec, dict[int, Term]] = {}


def gamma(spec: EndoSpec, t: Term) -> Term:
    """Apply the endomorphism: e_m -> e_m q, I -> q, 0 -> 0."""
    images = _GAMMA_IMAGES.get(spec)
    if images is None:
        q = q_poly(spec)
        images = {m: meet([gen(m), q]) for m in range(1, 5)}
        _GAMMA_IMAGES[spec] = images
    if t is BOTTOM:
        return BOTTOM
    return map_generators(t, images, q_poly(spec))


def r_endo(t: Term) -> Term:
    """Sum of the three distinct endomorphisms."""
    return join([gamma(g, t) for g in GAMMAS])


@lru_cache(maxsize=None)
def s_poly(n: int) -> Term:
    """s_0 = I, s_1 = e1+e2+e3+e4, s_{n+1} = R(s_n)."""
    if n < 0:
        raise ValueError("index must be >= 0")
    if n == 0:
        return TOP
    if n == 1:
        return join([gen(i) for i in range(1, 5)])
    return r_endo(s_poly(n - 1))


@lru_cache(maxsize=None)
def t_poly(n: int) -> Term:
    """t_0 = I, t_1 = meet of the four triple joins, t_{n+1} = R(t_n)."""
    if n < 0:
        raise ValueError("index must be >= 0")
    if n == 0:
        return TOP
    if n == 1:
        return meet(
            [join([gen(j) for j in range(1, 5) if j != i]) for i in (4, 3, 2, 1)]
        )
    return r_endo(t_poly(n - 1))


@lru_cache(maxsize=None)
def p_poly(i: int, n: int) -> Term:
    """p_{i,0} = I, p_{i,1} = e_i + t_1, recursion via the endomorphisms."""
    if i not in (1, 2, 3, 4):
        raise ValueError(f"index {i} out of range 1..4")
    if n < 0:
        raise ValueError("index must be >= 0")
    if n == 0:
        return TOP
    if n == 1:
        return join([gen(i), t_poly(1)])
    return join(
        [gamma(EndoSpec(i, j), p_poly(j, n - 1)) for j in range(1, 5) if j != i]
    )


@lru_cache(maxsize=None)
def h_poly(t: int, n: int) -> Term:
    """Coatom h_t(n): join of the cumulative elements avoiding start t."""
    if t not in (1, 2, 3, 4):
        raise ValueError(f"index {t} out of range 1..4")
    if n < 1:
        raise ValueError("level must be >= 1")
    return join([cumulative_e(j, n) for j in range(1, 5) if j != t])


@dataclass(frozen=True)
class CubeRow:
    row: int
    label: str
    gp: Term
    herrmann: Term
    cumulative: Term


def cube(n: int) -> list[CubeRow]:
    """The sixteen-row table of the level-n Boolean cube of perfect
    elements: coatom description, endomorphism description, cumulative
    description."""
    if n < 1:
        raise ValueError("level must be >= 1")
    h = {i: h_poly(i, n) for i in range(1, 5)}
    e = {i: cumulative_e(i, n) for i in range(1, 5)}
    p = {i: p_poly(i, n) for i in range(1, 5)}
    f_next = cumulative_f0(n + 1)
    rows: list[CubeRow] = []

    def add(label, gp, herrmann, cumulative):
        rows.append(CubeRow(len(rows) + 1, label, gp, herrmann, cumulative))

    add(
        "h1+h2+h3+h4",
        join([h[i] for i in range(1, 5)]),
        s_poly(n),
        join([e[i] for i in range(1, 5)]),
    )
    for i in range(1, 5):
        rest = [j for j in range(1, 5) if j != i]
        add(
            f"h{i}",
            h[i],
            join([p[j] for j in rest]),
            join([e[j] for j in rest]),
        )
    for i, j in ((1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)):
        k, l = [x for x in range(1, 5) if x not in (i, j)]
        add(
            f"h{i}h{j}",
            meet([h[i], h[j]]),
            join([p[k], p[l]]),
            join([e[k], e[l], f_next]),
        )
    for i, j, k in ((1, 2, 3), (1, 2, 4), (1, 3, 4), (2, 3, 4)):
        (l,) = [x for x in range(1, 5) if x not in (i, j, k)]
        add(
            f"h{i}h{j}h{k}",
            meet([h[i], h[j], h[k]]),
            p[l],
            join([e[l], f_next]),
        )
    add(
        "h1h2h3h4",
        meet([h[i] for i in range(1, 5)]),
        t_poly(n),
        f_next,
    )
    return rows
