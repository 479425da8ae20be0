"""Lattice terms in the four generators e1..e4.

Terms are immutable and hash-consed: the smart constructors meet()/join()
normalize (flatten, absorb constants, deduplicate, sort) and intern, so
identical normal forms are the *same* object and `is` equality is
structural equality.  Normalization keeps Top/Bottom out of composite
terms entirely, which downstream substitution code relies on.

Equality of terms is syntactic on normal forms only; identities of the
free modular lattice are checked semantically over representation
corpora (see quadlat.reps).
"""

from __future__ import annotations

import functools
from typing import Iterable

_BOTTOM_KIND = 0
_TOP_KIND = 1
_GEN_KIND = 2
_MEET_KIND = 3
_JOIN_KIND = 4


class Term:
    __slots__ = ("kind", "index", "children")

    def __init__(self, kind: int, index: int, children: tuple["Term", ...]):
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "index", index)
        object.__setattr__(self, "children", children)

    def __setattr__(self, *_):
        raise AttributeError("Term is immutable")

    def is_bottom(self) -> bool:
        return self.kind == _BOTTOM_KIND

    def is_top(self) -> bool:
        return self.kind == _TOP_KIND

    def is_gen(self) -> bool:
        return self.kind == _GEN_KIND

    def is_meet(self) -> bool:
        return self.kind == _MEET_KIND

    def is_join(self) -> bool:
        return self.kind == _JOIN_KIND

    def __repr__(self) -> str:
        return format_term(self)


_INTERN: dict[tuple, Term] = {}


def _mk(kind: int, index: int, children: tuple[Term, ...]) -> Term:
    key = (kind, index, tuple(id(c) for c in children))
    got = _INTERN.get(key)
    if got is None:
        got = Term(kind, index, children)
        _INTERN[key] = got
    return got


BOTTOM = _mk(_BOTTOM_KIND, 0, ())
TOP = _mk(_TOP_KIND, 0, ())
_GENS = tuple(_mk(_GEN_KIND, i, ()) for i in range(5))  # slot 0 unused


def gen(i: int) -> Term:
    """Generator e_i, i in 1..4."""
    if not 1 <= i <= 4:
        raise ValueError(f"generator index {i} out of range 1..4")
    return _GENS[i]


_CMP_CACHE: dict[tuple[int, int], int] = {}


def term_cmp(a: Term, b: Term) -> int:
    """Fixed total order: Bottom < Top < Gen(by index) < Meet < Join,
    composites ordered lexicographically by their (sorted) children."""
    if a is b:
        return 0
    key = (id(a), id(b))
    got = _CMP_CACHE.get(key)
    if got is not None:
        return got
    if a.kind != b.kind:
        out = -1 if a.kind < b.kind else 1
    elif a.kind == _GEN_KIND:
        out = -1 if a.index < b.index else 1
    else:
        out = 0
        for ca, cb in zip(a.children, b.children):
            out = term_cmp(ca, cb)
            if out:
                break
        else:
            la, lb = len(a.children), len(b.children)
            out = -1 if la < lb else 1  # proper prefix is smaller
    _CMP_CACHE[key] = out
    _CMP_CACHE[(id(b), id(a))] = -out
    return out


_SORT_KEY = functools.cmp_to_key(term_cmp)


def _combine(ts: Iterable[Term], kind: int, absorbing: Term, neutral: Term) -> Term:
    ts = list(ts)
    if not ts:
        raise ValueError("meet/join of an empty list")
    flat: list[Term] = []
    for t in ts:
        if not isinstance(t, Term):
            raise TypeError(f"not a Term: {t!r}")
        if t is absorbing:
            return absorbing
        if t is neutral:
            continue
        if t.kind == kind:
            flat.extend(t.children)  # children are already flat and normalized
        else:
            flat.append(t)
    if not flat:
        return neutral
    # dedupe by identity (interned), then sort under the fixed order
    seen: dict[int, Term] = {}
    for t in flat:
        seen.setdefault(id(t), t)
    uniq = sorted(seen.values(), key=_SORT_KEY)
    if len(uniq) == 1:
        return uniq[0]
    return _mk(kind, 0, tuple(uniq))


def meet(ts: Iterable[Term]) -> Term:
    """Normalized meet; Top is neutral, Bottom absorbing."""
    return _combine(ts, _MEET_KIND, BOTTOM, TOP)


def join(ts: Iterable[Term]) -> Term:
    """Normalized join; Bottom is neutral, Top absorbing."""
    return _combine(ts, _JOIN_KIND, TOP, BOTTOM)


def substitute(t: Term, images: dict[int, Term]) -> Term:
    """Simultaneous substitution e_i -> images[i], then re-normalization.

    Top and Bottom are fixed; images must cover all four generators.
    """
    for i in range(1, 5):
        if i not in images:
            raise ValueError(f"substitution does not define generator e{i}")
    memo: dict[int, Term] = {}

    def walk(u: Term) -> Term:
        got = memo.get(id(u))
        if got is not None:
            return got
        if u.kind == _GEN_KIND:
            out = images[u.index]
        elif u.kind == _MEET_KIND:
            out = meet([walk(c) for c in u.children])
        elif u.kind == _JOIN_KIND:
            out = join([walk(c) for c in u.children])
        else:
            out = u
        memo[id(u)] = out
        return out

    return walk(t)


def map_generators(t: Term, images: dict[int, Term], top_image: Term) -> Term:
    """Like substitute(), but sending Top to top_image (Bottom stays fixed).

    Normalized composite terms never contain Top internally, so the only
    Top that can occur is the whole term.
    """
    if t is TOP:
        return top_image
    return substitute(t, images)


def relabel(t: Term, perm: dict[int, int]) -> Term:
    """Apply a permutation of {1,2,3,4} to the generator indices."""
    return substitute(t, {i: gen(perm[i]) for i in range(1, 5)})


def format_term(t: Term) -> str:
    """Render as an S-expression: 0, I, eN, (+ ...), (* ...)."""
    memo: dict[int, str] = {}

    def walk(u: Term) -> str:
        got = memo.get(id(u))
        if got is not None:
            return got
        if u is BOTTOM:
            out = "0"
        elif u is TOP:
            out = "I"
        elif u.kind == _GEN_KIND:
            out = f"e{u.index}"
        else:
            op = "*" if u.kind == _MEET_KIND else "+"
            out = f"({op} " + " ".join(walk(c) for c in u.children) + ")"
        memo[id(u)] = out
        return out

    return walk(t)


class ParseError(ValueError):
    """Syntax error in a term S-expression, with a character position."""

    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} at position {pos}")
        self.pos = pos


def _tokenize(text: str) -> list[tuple[str, int]]:
    toks: list[tuple[str, int]] = []
    i = 0
    n = len(text)
    while i < n:
        c = text[i]
        if c.isspace():
            i += 1
            continue
        if c in "()+*":
            toks.append((c, i))
            i += 1
            continue
        j = i
        while j < n and not text[j].isspace() and text[j] not in "()+*":
            j += 1
        toks.append((text[i:j], i))
        i = j
    return toks


def parse_term(text: str) -> Term:
    """Parse the S-expression grammar:

        term := "0" | "I" | "e1".."e4" | "(+ " term (" " term)+ ")"
                                       | "(* " term (" " term)+ ")"
    """
    toks = _tokenize(text)
    pos = 0

    def fail(msg: str, at: int | None = None):
        raise ParseError(msg, len(text) if at is None else at)

    def parse_one() -> Term:
        nonlocal pos
        if pos >= len(toks):
            fail("unexpected end of input")
        tok, at = toks[pos]
        pos += 1
        if tok == "0":
            return BOTTOM
        if tok == "I":
            return TOP
        if len(tok) == 2 and tok[0] == "e" and tok[1] in "1234":
            return gen(int(tok[1]))
        if tok == "(":
            if pos >= len(toks):
                fail("unexpected end of input after '('")
            op, op_at = toks[pos]
            pos += 1
            if op not in "+*":
                fail(f"expected '+' or '*', got {op!r}", op_at)
            args: list[Term] = []
            while True:
                if pos >= len(toks):
                    fail("unbalanced '(': missing ')'", at)
                if toks[pos][0] == ")":
                    pos += 1
                    break
                args.append(parse_one())
            if len(args) < 2:
                fail(f"operator '{op}' needs at least two arguments", op_at)
            return join(args) if op == "+" else meet(args)
        fail(f"unexpected token {tok!r}", at)

    out = parse_one()
    if pos != len(toks):
        fail("trailing input", toks[pos][1])
    return out


def random_term(rng, max_depth: int = 4, const_prob: float = 0.05) -> Term:
    """Seeded random normalized term; used by fuzz checks."""
    if max_depth <= 0 or rng.random() < 0.35:
        r = rng.random()
        if r < const_prob:
            return TOP if rng.random() < 0.5 else BOTTOM
        return gen(rng.randrange(1, 5))
    k = rng.randrange(2, 4)
    args = [random_term(rng, max_depth - 1, const_prob) for _ in range(k)]
    return meet(args) if rng.random() < 0.5 else join(args)


def walk_subterms(t: Term) -> Iterable[Term]:
    """Every distinct subterm of a DAG, children before parents."""
    seen: set[int] = set()
    out: list[Term] = []

    def rec(u: Term):
        if id(u) in seen:
            return
        seen.add(id(u))
        for c in u.children:
            rec(c)
        out.append(u)

    rec(t)
    return out


def term_size(t: Term) -> int:
    """Number of distinct nodes in the term DAG."""
    return sum(1 for _ in walk_subterms(t))
