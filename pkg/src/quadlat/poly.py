"""Atomic and admissible lattice polynomials.

The atomic elements are the nested polynomials

    a_0^{ij} = I,    a_n^{ij} = e_i + e_j * a_{n-1}^{kl},

with {k,l} the complementary pair of indices in ascending order.  The
admissible elements e_alpha / f_alpha0 are built from a class's
canonical form via the eight table rows (stated for classes starting at
1 and transported along the stored transposition for other starts).
Each row carries several spellings whose validity depends on the
exponents; the first spelling with all subscripts nonnegative is used,
and the spellings' semantic agreement is checked by the suites, not
assumed here.

gp_e / gp_f are the recursive forms built from the index sets

    Gamma_e(alpha): words (k_{n-1},...,k_1), k_p not in {i_{p+1}, i_p},
    Gamma_f(alpha): words (k_n,...,k_1),    k_p not in {i_p, i_{p-1}}
                    (reading k_1 not in {i_1}), adjacent k's distinct,

via e_alpha~ = e_{i_n} * sum of e_beta~ over the index set.
"""

from __future__ import annotations

from functools import lru_cache

from .seqs import AdmSeq, CanonForm, classes_of_length, _require_admissible
from .terms import TOP, Term, gen, join, meet, relabel

__all__ = [
    "atomic", "e_alpha", "f_alpha0", "unified_e", "unified_f", "gp_e", "gp_f",
    "cumulative_e", "cumulative_f0", "inv_cumulative_e", "inv_cumulative_f0",
    "end_one_type", "unified_signature", "SIGNATURE_TABLE", "UNIFIED_PAIRS",
]


@lru_cache(maxsize=None)
def atomic(i: int, j: int, n: int) -> Term:
    """The atomic element a_n^{ij}; a_0 = I."""
    if i == j or i not in (1, 2, 3, 4) or j not in (1, 2, 3, 4):
        raise ValueError(f"atomic indices must be distinct in 1..4, got ({i},{j})")
    if n < 0:
        raise ValueError(f"atomic subscript must be >= 0, got {n}")
    if n == 0:
        return TOP
    k, l = sorted(set((1, 2, 3, 4)) - {i, j})
    return join([gen(i), meet([gen(j), atomic(k, l, n - 1)])])


def _a(pair: str, idx: int) -> Term:
    return atomic(int(pair[0]), int(pair[1]), idx)


# e_alpha spellings per start-at-1 row: (leading generator, factors),
# factors as (upper index pair, subscript) in table labels.
def _e_rows(tag: str, r: int, s: int, t: int):
    if tag == "F21":
        return [(2, (("31", 2 * s), ("41", 2 * r), ("34", 2 * t - 1)))]
    if tag == "F31":
        return [(3, (("21", 2 * t), ("41", 2 * r), ("24", 2 * s - 1)))]
    if tag == "F41":
        return [(4, (("21", 2 * t), ("31", 2 * s), ("32", 2 * r - 1)))]
    if tag == "G11":
        return [(1, (("24", 2 * s), ("34", 2 * t), ("32", 2 * r)))]
    if tag == "G21":
        return [
            (2, (("34", 2 * t), ("31", 2 * s + 1), ("14", 2 * r - 1))),
            (2, (("34", 2 * t), ("31", 2 * s - 1), ("14", 2 * r + 1))),
        ]
    if tag == "G31":
        return [
            (3, (("24", 2 * s), ("21", 2 * t + 1), ("14", 2 * r - 1))),
            (3, (("24", 2 * s), ("21", 2 * t - 1), ("14", 2 * r + 1))),
        ]
    if tag == "G41":
        return [
            (4, (("32", 2 * r), ("31", 2 * s + 1), ("12", 2 * t - 1))),
            (4, (("32", 2 * r), ("31", 2 * s - 1), ("12", 2 * t + 1))),
        ]
    if tag == "H11":
        return [
            (1, (("23", 2 * r + 1), ("24", 2 * s - 1), ("34", 2 * t - 1))),
            (1, (("23", 2 * r - 1), ("24", 2 * s - 1), ("34", 2 * t + 1))),
            (1, (("23", 2 * r - 1), ("24", 2 * s + 1), ("34", 2 * t - 1))),
        ]
    raise ValueError(f"unknown class tag {tag!r}")


# f_alpha0 spellings: shape 1 is e_alpha * (e_g a_X + a_Y a_Z), shape 2 is
# e_alpha * (a_X + e_g a_Y a_Z).
def _f_rows(tag: str, r: int, s: int, t: int):
    if tag == "F21":
        return [
            (1, 2, ("34", 2 * t), ("41", 2 * r + 1), ("31", 2 * s - 1)),
            (2, 1, ("43", 2 * t), ("24", 2 * r), ("23", 2 * s)),
        ]
    if tag == "F31":
        return [
            (1, 3, ("42", 2 * s), ("41", 2 * r + 1), ("21", 2 * t - 1)),
            (2, 1, ("42", 2 * s), ("34", 2 * r), ("32", 2 * t)),
        ]
    if tag == "F41":
        return [
            (1, 4, ("32", 2 * r), ("31", 2 * s + 1), ("21", 2 * t - 1)),
            (2, 1, ("32", 2 * r), ("43", 2 * s), ("42", 2 * t)),
        ]
    if tag == "G11":
        return [
            (1, 1, ("32", 2 * r + 1), ("24", 2 * s + 1), ("34", 2 * t - 1)),
            (2, 4, ("32", 2 * r + 1), ("21", 2 * s), ("31", 2 * t)),
        ]
    if tag == "G21":
        return [
            (1, 2, ("14", 2 * r), ("31", 2 * s + 2), ("34", 2 * t - 1)),
            (2, 3, ("14", 2 * r), ("21", 2 * s + 1), ("24", 2 * t)),
        ]
    if tag == "G31":
        return [
            (1, 3, ("14", 2 * r), ("21", 2 * t + 2), ("24", 2 * s - 1)),
            (2, 2, ("14", 2 * r), ("31", 2 * t + 1), ("34", 2 * s)),
        ]
    if tag == "G41":
        return [
            (1, 4, ("12", 2 * t), ("31", 2 * s), ("32", 2 * r + 1)),
            (2, 3, ("12", 2 * t), ("41", 2 * s + 1), ("42", 2 * r)),
        ]
    if tag == "H11":
        return [
            (1, 1, ("23", 2 * r), ("24", 2 * s), ("34", 2 * t)),
            (1, 1, ("24", 2 * s), ("34", 2 * t), ("23", 2 * r)),
            (1, 1, ("34", 2 * t), ("23", 2 * r), ("24", 2 * s)),
        ]
    raise ValueError(f"unknown class tag {tag!r}")


def _transport(term: Term, c: CanonForm) -> Term:
    if c.perm == (1, 2, 3, 4):
        return term
    return relabel(term, {i: c.perm[i - 1] for i in range(1, 5)})


def e_spellings(c: CanonForm) -> list[Term]:
    """All valid e_alpha spellings of the class (same element semantically)."""
    out = []
    for g, factors in _e_rows(c.tag, c.r, c.s, c.t):
        if all(idx >= 0 for _, idx in factors):
            term = meet([gen(g)] + [_a(p, idx) for p, idx in factors])
            out.append(_transport(term, c))
    return out


@lru_cache(maxsize=None)
def e_alpha(c: CanonForm) -> Term:
    """The admissible element e_alpha of a canonical class."""
    sp = e_spellings(c)
    if not sp:
        raise ValueError(f"no valid e_alpha spelling for {c}")
    return sp[0]


def f_spellings(c: CanonForm) -> list[Term]:
    """All valid f_alpha0 spellings of the class."""
    base = e_alpha(c)
    out = []
    for shape, g, fx, fy, fz in _f_rows(c.tag, c.r, c.s, c.t):
        if fx[1] < 0 or fy[1] < 0 or fz[1] < 0:
            continue
        ax, ay, az = _a(*fx), _a(*fy), _a(*fz)
        if shape == 1:
            factor = join([meet([gen(g), ax]), meet([ay, az])])
        else:
            factor = join([ax, meet([gen(g), ay, az])])
        out.append(meet([base, _transport(factor, c)]))
    return out


@lru_cache(maxsize=None)
def f_alpha0(c: CanonForm) -> Term:
    """The admissible element f_{alpha 0} of a canonical class."""
    sp = f_spellings(c)
    if not sp:
        raise ValueError(f"no valid f_alpha0 spelling for {c}")
    return sp[0]


# Upper-index pairs of the three unified-form factors, per ending index:
# unified_e(i, r, s, t) = e_i * a_r^{p1} * a_s^{p2} * a_t^{p3}.
UNIFIED_PAIRS = {
    1: ("32", "24", "34"),
    2: ("31", "14", "34"),
    3: ("12", "24", "14"),
    4: ("12", "23", "13"),
}


@lru_cache(maxsize=None)
def unified_e(i: int, r: int, s: int, t: int) -> Term:
    """Unified form of the admissible elements ending at i."""
    if i not in (1, 2, 3, 4):
        raise ValueError(f"generator index {i} out of range")
    if min(r, s, t) < 0:
        raise ValueError("unified exponents must be >= 0")
    p1, p2, p3 = UNIFIED_PAIRS[i]
    return meet([gen(i), _a(p1, r), _a(p2, s), _a(p3, t)])


@lru_cache(maxsize=None)
def unified_f(i: int, r: int, s: int, t: int) -> Term:
    """Unified form of the f-elements ending at i; needs r >= 1."""
    if r < 1:
        raise ValueError(f"unified_f needs r >= 1, got r={r}")
    p1, p2, p3 = UNIFIED_PAIRS[i]
    factor = join([meet([gen(i), _a(p3, t + 1)]), meet([_a(p2, s + 1), _a(p1, r - 1)])])
    return meet([unified_e(i, r, s, t), factor])


def _gamma_e_words(s: AdmSeq):
    """Index words for the recursive e-form: one letter per pair of s."""
    n = len(s)

    def extend(word: tuple[int, ...], j: int):
        if j == n - 1:
            yield word
            return
        for k in range(1, 5):
            if k not in (s[j], s[j + 1]) and (not word or k != word[-1]):
                yield from extend(word + (k,), j + 1)

    yield from extend((), 0)


def _gamma_f_words(s: AdmSeq):
    """Index words for the recursive f-form: one letter per index of s."""
    n = len(s)

    def extend(word: tuple[int, ...], j: int):
        if j == n:
            yield word
            return
        if j < n - 1:
            banned = (s[j], s[j + 1])
        else:
            banned = (s[n - 1],)
        for k in range(1, 5):
            if k not in banned and (not word or k != word[-1]):
                yield from extend(word + (k,), j + 1)

    yield from extend((), 0)


@lru_cache(maxsize=None)
def gp_e(s: AdmSeq) -> Term:
    """Recursive admissible element for a sequence (not a class)."""
    s = _require_admissible(s)
    if len(s) == 1:
        return gen(s[0])
    summands = [gp_e(b) for b in _gamma_e_words(s)]
    return meet([gen(s[0]), join(summands)])


@lru_cache(maxsize=None)
def gp_f(s: AdmSeq) -> Term:
    """Recursive f-element for a sequence (not a class)."""
    s = _require_admissible(s)
    summands = [gp_e(b) for b in _gamma_f_words(s)]
    return meet([gen(s[0]), join(summands)])


def cumulative_e(start: int, n: int) -> Term:
    """Join of e_alpha over all length-n classes with the given start."""
    if n < 1:
        raise ValueError("length must be >= 1")
    if start not in (1, 2, 3, 4):
        raise ValueError(f"start index {start} out of range")
    return join([e_alpha(c) for c in classes_of_length(n, start=start)])


def cumulative_f0(n: int) -> Term:
    """Join of f_alpha0 over all classes of length n-1; I for n = 1."""
    if n < 1:
        raise ValueError("length must be >= 1")
    if n == 1:
        return TOP
    return join([f_alpha0(c) for c in classes_of_length(n - 1)])


def _triples(total: int, r_min: int = 0):
    for r in range(r_min, total + 1):
        for ss in range(0, total - r + 1):
            yield r, ss, total - r - ss


def inv_cumulative_e(i: int, n: int) -> Term:
    """Join of the unified e-forms ending at i with r+s+t = n-1."""
    if n < 1:
        raise ValueError("length must be >= 1")
    return join([unified_e(i, r, s, t) for r, s, t in _triples(n - 1)])


def inv_cumulative_f0(n: int) -> Term:
    """Join of the unified f-forms over all four ends, r+s+t = n, r >= 1."""
    if n < 1:
        raise ValueError("length must be >= 1")
    return join(
        [unified_f(i, r, s, t) for i in (1, 2, 3, 4) for r, s, t in _triples(n, 1)]
    )


# Signature rows for classes ending at 1: parity bits of the unified
# exponents (r, s, t) per type.
SIGNATURE_TABLE = {
    "F12": (0, 0, 1),
    "F13": (0, 1, 0),
    "F14": (1, 0, 0),
    "G11": (0, 0, 0),
    "G12": (1, 1, 0),
    "G13": (1, 0, 1),
    "G14": (0, 1, 1),
    "H11": (1, 1, 1),
}


def unified_signature(r: int, s: int, t: int) -> tuple[int, int, int]:
    return (r % 2, s % 2, t % 2)


def end_one_type(c: CanonForm) -> str:
    """Type name (start digit as written second) of a class ending at 1."""
    if c.end != 1:
        raise ValueError("type table applies to classes ending at 1")
    if c.length % 2:
        return f"G1{c.start}"
    return "H11" if c.start == 1 else f"F1{c.start}"


def unified_triple_of_class(c: CanonForm) -> tuple[int, int, int]:
    """Exponents (r, s, t) with unified_e(end, r, s, t) ~ e_alpha(c).

    Each unified factor a^{p} is driven by the substitution endomorphism
    of p's pair type, so its subscript is the count of that pair type in
    the class's type word.
    """
    from .seqs import _PAIR_TYPE

    return tuple(
        c.counts[_PAIR_TYPE[(int(p[0]), int(p[1]))]] for p in UNIFIED_PAIRS[c.end]
    )
