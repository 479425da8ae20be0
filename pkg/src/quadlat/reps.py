"""Quadruple representations over GF(p) and exact term evaluation.

A representation is an ambient space X0 = GF(p)^dim0 with four subspaces
Y1..Y4 (the images of the generators).  Terms evaluate homomorphically
into the subspace lattice of X0.  The derived representation lives on

    X0' = { (eta1, eta2, eta3, eta4) in Y1 (+) Y2 (+) Y3 (+) Y4 :
            eta1 + eta2 + eta3 + eta4 = 0 },

with elementary maps phi_i : X0' -> X0 projecting onto the i-th summand,
new subspaces Y_i' = X0' cap G'_i, and the associated lattice maps
nu0/nu1/psi_i inside the big sum R = (+) Y_i.

Everything is exact, immutable and aggressively cached: evaluation is
memoized per representation and per term node (terms are hash-consed),
and binary lattice operations are memoized per representation.
"""

from __future__ import annotations

import random

import numpy as np

from .gf import (
    PrimeField,
    Subspace,
    intersect_spaces,
    kernel,
    leq,
    row_space,
    sum_spaces,
)
from .terms import TOP, Term

__all__ = [
    "QuadRep", "CoxeterStep", "eval_term", "coxeter_plus", "tower",
    "phi_compose", "nu_eval", "psi", "catalog", "random_rep", "default_reps",
    "direct_sum", "semantically_equal", "semantically_leq", "perfect_check",
    "rep_to_json", "rep_from_json",
]


class QuadRep:
    """Four subspaces Y1..Y4 of GF(p)^dim0."""

    __slots__ = ("p", "dim0", "Y", "key", "_eval", "_ops", "_full", "_zero")

    def __init__(self, p: int, dim0: int, Y):
        PrimeField(p)
        Y = tuple(Y)
        if len(Y) != 4:
            raise ValueError("a quadruple representation needs exactly 4 subspaces")
        for s in Y:
            if s.p != p or s.ambient != dim0:
                raise ValueError("subspace does not live in GF(p)^dim0")
        self.p = p
        self.dim0 = dim0
        self.Y = Y
        self.key = (p, dim0) + tuple(s._key for s in Y)
        self._eval: dict[int, Subspace] = {}
        self._ops: dict = {}
        self._full = Subspace.full(p, dim0)
        self._zero = Subspace.zero(p, dim0)

    def __eq__(self, other):
        return isinstance(other, QuadRep) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        dims = ",".join(str(s.dim) for s in self.Y)
        return f"QuadRep(p={self.p}, dim0={self.dim0}, dims=({dims}))"


def rep_to_json(rep: QuadRep) -> dict:
    return {
        "p": rep.p,
        "dim0": rep.dim0,
        "Y": [[list(map(int, row)) for row in s.basis] for s in rep.Y],
    }


def rep_from_json(obj: dict) -> QuadRep:
    p = int(obj["p"])
    d = int(obj["dim0"])
    Y = [Subspace.from_rows(p, d, rows) for rows in obj["Y"]]
    return QuadRep(p, d, Y)


def _cached_sum(rep: QuadRep, a: Subspace, b: Subspace) -> Subspace:
    key = ("s", a, b)
    got = rep._ops.get(key)
    if got is None:
        got = sum_spaces(a, b)
        rep._ops[key] = got
    return got


def _cached_meet(rep: QuadRep, a: Subspace, b: Subspace) -> Subspace:
    key = ("m", a, b)
    got = rep._ops.get(key)
    if got is None:
        got = intersect_spaces(a, b)
        rep._ops[key] = got
    return got


def _eval_with(rep: QuadRep, images, t: Term) -> Subspace:
    """Evaluate a term DAG against per-node images; memoized on the rep."""
    cache = rep._eval
    stack = [t]
    while stack:
        u = stack[-1]
        if id(u) in cache:
            stack.pop()
            continue
        if u.is_gen() or not u.children:
            cache[id(u)] = images(u)
            stack.pop()
            continue
        missing = [c for c in u.children if id(c) not in cache]
        if missing:
            stack.extend(missing)
            continue
        vals = [cache[id(c)] for c in u.children]
        acc = vals[0]
        combine = _cached_meet if u.is_meet() else _cached_sum
        for v in vals[1:]:
            acc = combine(rep, acc, v)
        cache[id(u)] = acc
        stack.pop()
    return cache[id(t)]


def eval_term(t: Term, rep: QuadRep) -> Subspace:
    """Image of a lattice term: e_i -> Y_i, I -> X0, 0 -> 0."""

    def images(u: Term) -> Subspace:
        if u.is_gen():
            return rep.Y[u.index - 1]
        if u is TOP:
            return rep._full
        return rep._zero

    return _eval_with(rep, images, t)


class CoxeterStep:
    """One application of the derived-representation construction."""

    __slots__ = (
        "base", "plus", "phi", "R_dim", "offsets", "X01", "G", "Gp",
        "_nu_rep0", "_nu_rep1",
    )

    def __init__(self, base: QuadRep):
        p = base.p
        dims = [s.dim for s in base.Y]
        D = sum(dims)
        offsets = []
        off = 0
        for k in dims:
            offsets.append(off)
            off += k
        # R = (+) Y_i in block coordinates; eta |-> sum eta_i is eta @ stack
        if D:
            stack = np.vstack([s.basis for s in base.Y if s.dim])
        else:
            stack = np.zeros((0, base.dim0), dtype=np.int64)
        x01 = kernel(stack, p, domain_dim=D)
        K = x01.basis
        d1 = K.shape[0]
        phi = []
        newY = []
        for i in range(4):
            ki = dims[i]
            Ki = K[:, offsets[i]: offsets[i] + ki]
            if ki:
                phi_i = (Ki @ base.Y[i].basis) % p if d1 else np.zeros((0, base.dim0), dtype=np.int64)
            else:
                phi_i = np.zeros((d1, base.dim0), dtype=np.int64)
            phi.append(phi_i)
            newY.append(kernel(Ki, p, domain_dim=d1))
        self.base = base
        self.plus = QuadRep(p, d1, newY)
        self.phi = tuple(phi)
        self.R_dim = D
        self.offsets = tuple(offsets)
        self.X01 = x01
        eye = np.eye(D, dtype=np.int64)
        G = []
        Gp = []
        for i in range(4):
            rows_i = eye[offsets[i]: offsets[i] + dims[i]]
            G.append(Subspace(p, D, rows_i))
            other = [eye[offsets[j]: offsets[j] + dims[j]] for j in range(4) if j != i]
            Gp.append(Subspace(p, D, row_space(np.vstack(other) if other else eye[:0], p)))
        self.G = tuple(G)
        self.Gp = tuple(Gp)
        # nu0/nu1 evaluate inside L(R); reuse QuadRep's caching machinery
        self._nu_rep0 = QuadRep(p, D, [sum_spaces(x01, G[i]) for i in range(4)])
        self._nu_rep1 = QuadRep(p, D, [intersect_spaces(x01, Gp[i]) for i in range(4)])

    def __repr__(self):
        return f"CoxeterStep(base={self.base!r}, plus={self.plus!r})"


_COXETER_CACHE: dict[tuple, CoxeterStep] = {}


def coxeter_plus(rep: QuadRep) -> CoxeterStep:
    got = _COXETER_CACHE.get(rep.key)
    if got is None:
        got = CoxeterStep(rep)
        _COXETER_CACHE[rep.key] = got
    return got


def tower(rep: QuadRep, depth: int) -> list[CoxeterStep]:
    """Iterate the derived construction; step k+1 starts from step k's plus."""
    steps = []
    cur = rep
    for _ in range(depth):
        st = coxeter_plus(cur)
        steps.append(st)
        cur = st.plus
    return steps


def phi_compose(steps: list[CoxeterStep], indices) -> np.ndarray:
    """Matrix of phi_{i1} o phi_{i2} o ... o phi_{ik} across tower levels.

    indices[0] is the outermost (last applied) map; indices[k-1] acts on
    the deepest level, so the composite maps level k down to level 0.
    """
    indices = list(indices)
    k = len(indices)
    if k > len(steps):
        raise ValueError(f"tower of depth {len(steps)} cannot compose {k} maps")
    p = steps[0].base.p
    m = steps[k - 1].phi[indices[-1] - 1]
    for lvl in range(k - 2, -1, -1):
        m = (m @ steps[lvl].phi[indices[lvl] - 1]) % p
    return m


def nu_eval(which: int, t: Term, step: CoxeterStep) -> Subspace:
    """Evaluate a term in L(R) under nu0 (which=0) or nu1 (which=1).

    nu0: e_i -> X0' + G_i, I -> R.  nu1: e_i -> X0' cap G'_i, I -> X0'
    (the latter is what the joint-map formula consumes).
    """
    rep = step._nu_rep0 if which == 0 else step._nu_rep1
    if which == 0:
        def images(u: Term) -> Subspace:
            if u.is_gen():
                return rep.Y[u.index - 1]
            if u is TOP:
                return rep._full
            return rep._zero
    else:
        def images(u: Term) -> Subspace:
            if u.is_gen():
                return rep.Y[u.index - 1]
            if u is TOP:
                return step.X01
            return rep._zero
    return _eval_with(rep, images, t)


def psi(i: int, t: Term, step: CoxeterStep) -> Subspace:
    """Joint map psi_i(a) = X0' + G_i cap (G'_i + nu1(a)), inside L(R)."""
    inner = sum_spaces(step.Gp[i - 1], nu_eval(1, t, step))
    return sum_spaces(step.X01, intersect_spaces(step.G[i - 1], inner))


def _one_dim_reps(p: int) -> list[QuadRep]:
    out = []
    full = Subspace.full(p, 1)
    zero = Subspace.zero(p, 1)
    for mask in range(16):
        Y = [full if (mask >> i) & 1 else zero for i in range(4)]
        out.append(QuadRep(p, 1, Y))
    return out


def _four_lines_reps(p: int) -> list[QuadRep]:
    out = []
    for lam in range(2, p):
        Y = [
            Subspace.from_rows(p, 2, [[1, 0]]),
            Subspace.from_rows(p, 2, [[0, 1]]),
            Subspace.from_rows(p, 2, [[1, 1]]),
            Subspace.from_rows(p, 2, [[1, lam]]),
        ]
        out.append(QuadRep(p, 2, Y))
    return out


_CATALOG_CACHE: dict[tuple, list[QuadRep]] = {}


def catalog(p: int, max_dim: int = 12) -> list[QuadRep]:
    """Deterministic corpus of indecomposable representations.

    Sixteen one-dimensional representations, the four-distinct-lines
    representations of GF(p)^2 (p >= 3), and the derived-representation
    iterates of all of these while the derived space stays nonzero and
    of dimension <= max_dim.  One-dimensionals are indecomposable
    outright; iterates of indecomposables are indecomposable or zero,
    and zero iterates are dropped.  Cycles (the four-lines family is
    periodic under iteration) are cut by key.
    """
    cache_key = (p, max_dim)
    got = _CATALOG_CACHE.get(cache_key)
    if got is not None:
        return got
    seeds = _one_dim_reps(p) + _four_lines_reps(p)
    reps: list[QuadRep] = []
    seen: set[tuple] = set()

    def add(r: QuadRep) -> None:
        if r.dim0 >= 1 and r.key not in seen:
            seen.add(r.key)
            reps.append(r)

    for s in seeds:
        add(s)
    for s in seeds:
        cur = s
        walked: set[tuple] = {cur.key}
        for _ in range(64):
            nxt = coxeter_plus(cur).plus
            if nxt.dim0 == 0 or nxt.dim0 > max_dim or nxt.key in walked:
                break
            walked.add(nxt.key)
            add(nxt)
            cur = nxt
    _CATALOG_CACHE[cache_key] = reps
    return reps


def random_rep(rng: random.Random, p: int, max_dim: int = 6) -> QuadRep:
    d = rng.randrange(1, max_dim + 1)
    Y = []
    for _ in range(4):
        k = rng.randrange(0, d + 1)
        rows = [[rng.randrange(p) for _ in range(d)] for _ in range(k)]
        Y.append(Subspace.from_rows(p, d, rows))
    return QuadRep(p, d, Y)


_DEFAULT_REPS_CACHE: dict[tuple, list[QuadRep]] = {}


def default_reps(primes=(2, 3, 5), seed: int = 0, n_random: int = 50,
                 max_dim: int = 6) -> list[QuadRep]:
    """Catalog over all primes plus seeded random representations.

    Equality over this corpus is evidence for lattice identities, not a
    proof; the corpus is deterministic for a fixed (primes, seed).
    """
    key = (tuple(primes), seed, n_random, max_dim)
    got = _DEFAULT_REPS_CACHE.get(key)
    if got is not None:
        return got
    reps: list[QuadRep] = []
    for p in primes:
        reps.extend(catalog(p))
        rng = random.Random(seed * 1000003 + p)
        for _ in range(n_random):
            reps.append(random_rep(rng, p, max_dim))
    _DEFAULT_REPS_CACHE[key] = reps
    return reps


def direct_sum(a: QuadRep, b: QuadRep) -> QuadRep:
    if a.p != b.p:
        raise ValueError("mixed moduli")
    d = a.dim0 + b.dim0
    Y = []
    for sa, sb in zip(a.Y, b.Y):
        rows = np.zeros((sa.dim + sb.dim, d), dtype=np.int64)
        rows[: sa.dim, : a.dim0] = sa.basis
        rows[sa.dim:, a.dim0:] = sb.basis
        Y.append(Subspace.from_rows(a.p, d, rows))
    return QuadRep(a.p, d, Y)


def semantically_equal(t1: Term, t2: Term, reps) -> bool:
    """Equal images on every listed representation."""
    if t1 is t2:
        return True
    return all(eval_term(t1, r) == eval_term(t2, r) for r in reps)


def semantically_leq(t1: Term, t2: Term, reps) -> bool:
    """Contained images on every listed representation."""
    if t1 is t2:
        return True
    return all(leq(eval_term(t1, r), eval_term(t2, r)) for r in reps)


def first_counterexample(t1: Term, t2: Term, reps):
    """The first representation separating t1 from t2, or None."""
    for r in reps:
        if eval_term(t1, r) != eval_term(t2, r):
            return r
    return None


def perfect_check(t: Term, reps) -> dict:
    """Check that a term lands on {0, X0} across (indecomposable) reps."""
    violations = []
    for r in reps:
        v = eval_term(t, r)
        if not (v.is_zero() or v.is_full()):
            violations.append({"rep": rep_to_json(r), "image_dim": v.dim})
    return {"ok": not violations, "violations": violations}
