"""Exact linear algebra over small prime fields GF(p).

Everything here uses the row convention: vectors are rows, a linear map
GF(p)^a -> GF(p)^b is an (a, b) matrix M acting by v |-> v @ M, and a
subspace of GF(p)^d is stored as a reduced-row-echelon basis with zero
rows dropped.  The rref basis of a row space is unique, so two Subspace
objects are equal iff they describe the same subspace; this makes
subspaces hashable and lets callers cache lattice computations.
"""

from __future__ import annotations

import numpy as np

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


class PrimeField:
    """The field GF(p) for a small prime p, with a cached inverse table."""

    __slots__ = ("p", "_inv")
    _cache: dict[int, "PrimeField"] = {}

    def __new__(cls, p: int) -> "PrimeField":
        got = cls._cache.get(p)
        if got is not None:
            return got
        if not is_prime(p):
            raise ValueError(f"modulus {p} is not prime")
        self = object.__new__(cls)
        self.p = p
        # inv[0] unused; pow is exact for small p
        self._inv = tuple(pow(a, p - 2, p) if a else 0 for a in range(p))
        cls._cache[p] = self
        return self

    def inv(self, a: int) -> int:
        a %= self.p
        if a == 0:
            raise ZeroDivisionError("inverse of 0 in GF(p)")
        return self._inv[a]

    def __repr__(self) -> str:
        return f"GF({self.p})"


def as_matrix(rows, cols: int | None = None) -> np.ndarray:
    """Coerce a sequence of rows (possibly empty) to an int64 matrix."""
    m = np.array(rows, dtype=np.int64)
    if m.size == 0:
        m = m.reshape(0, 0 if cols is None else cols)
    if m.ndim == 1:
        m = m.reshape(1, -1)
    return m


def rref(mat: np.ndarray, p: int) -> tuple[np.ndarray, tuple[int, ...]]:
    """Reduced row-echelon form mod p; returns (matrix, pivot columns)."""
    field = PrimeField(p)
    m = np.asarray(mat, dtype=np.int64) % p
    m = m.copy()
    nrows, ncols = m.shape
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.nonzero(m[r:, c])[0]
        if nz.size == 0:
            continue
        pr = r + int(nz[0])
        if pr != r:
            m[[r, pr]] = m[[pr, r]]
        piv = int(m[r, c])
        if piv != 1:
            m[r] = (m[r] * field.inv(piv)) % p
        col = m[:, c].copy()
        col[r] = 0
        hit = np.nonzero(col)[0]
        if hit.size:
            m[hit] = (m[hit] - np.outer(col[hit], m[r])) % p
        pivots.append(c)
        r += 1
    return m, tuple(pivots)


def row_space(mat: np.ndarray, p: int) -> np.ndarray:
    """Canonical (rref, zero rows dropped) basis of the row space."""
    r, pivots = rref(mat, p)
    return r[: len(pivots)]


def right_nullspace(mat: np.ndarray, p: int) -> np.ndarray:
    """Rows spanning {x : mat @ x = 0}, in canonical rref form."""
    r, pivots = rref(mat, p)
    ncols = mat.shape[1]
    free = [c for c in range(ncols) if c not in pivots]
    if not free:
        return np.zeros((0, ncols), dtype=np.int64)
    basis = np.zeros((len(free), ncols), dtype=np.int64)
    for i, f in enumerate(free):
        basis[i, f] = 1
        for j, c in enumerate(pivots):
            basis[i, c] = (-int(r[j, f])) % p
    return row_space(basis, p)


class Subspace:
    """A subspace of GF(p)^ambient, held as its unique rref basis."""

    __slots__ = ("p", "ambient", "basis", "_key", "_hash")

    def __init__(self, p: int, ambient: int, basis: np.ndarray):
        PrimeField(p)
        self.p = p
        self.ambient = ambient
        b = np.asarray(basis, dtype=np.int64)
        if b.ndim != 2 or b.shape[1] != ambient:
            raise ValueError(f"basis shape {b.shape} does not fit ambient {ambient}")
        b.flags.writeable = False
        self.basis = b
        self._key = (p, ambient, b.shape[0], b.tobytes())
        self._hash = hash(self._key)

    @staticmethod
    def from_rows(p: int, ambient: int, rows) -> "Subspace":
        m = as_matrix(rows, ambient)
        if m.shape[1] != ambient:
            raise ValueError(f"rows of length {m.shape[1]} in ambient {ambient}")
        return Subspace(p, ambient, row_space(m, p))

    @staticmethod
    def zero(p: int, ambient: int) -> "Subspace":
        return Subspace(p, ambient, np.zeros((0, ambient), dtype=np.int64))

    @staticmethod
    def full(p: int, ambient: int) -> "Subspace":
        return Subspace(p, ambient, np.eye(ambient, dtype=np.int64))

    @property
    def dim(self) -> int:
        return self.basis.shape[0]

    def is_zero(self) -> bool:
        return self.dim == 0

    def is_full(self) -> bool:
        return self.dim == self.ambient

    def __eq__(self, other) -> bool:
        return isinstance(other, Subspace) and self._key == other._key

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        rows = [list(map(int, row)) for row in self.basis]
        return f"Subspace(GF({self.p})^{self.ambient}, dim={self.dim}, basis={rows})"


def _check_compatible(a: Subspace, b: Subspace) -> None:
    if a.p != b.p:
        raise ValueError(f"mixed moduli {a.p} and {b.p}")
    if a.ambient != b.ambient:
        raise ValueError(f"ambient mismatch {a.ambient} vs {b.ambient}")


def sum_spaces(a: Subspace, b: Subspace) -> Subspace:
    """Lattice join: the smallest subspace containing both."""
    _check_compatible(a, b)
    if a.is_zero() or b.is_full():
        return b
    if b.is_zero() or a.is_full():
        return a
    stacked = np.vstack([a.basis, b.basis])
    return Subspace(a.p, a.ambient, row_space(stacked, a.p))


def intersect_spaces(a: Subspace, b: Subspace) -> Subspace:
    """Lattice meet, via the kernel of the stacked bases.

    A vector lies in both spaces iff it is u @ A.basis = -w @ B.basis for
    some (u | w) in the left kernel of vstack(A.basis, B.basis).
    """
    _check_compatible(a, b)
    if a.is_zero() or b.is_full():
        return a
    if b.is_zero() or a.is_full():
        return b
    stacked = np.vstack([a.basis, b.basis])
    left_null = right_nullspace(stacked.T, a.p)
    combo = (left_null[:, : a.dim] @ a.basis) % a.p
    return Subspace(a.p, a.ambient, row_space(combo, a.p))


def kernel(mat: np.ndarray, p: int, domain_dim: int | None = None) -> Subspace:
    """Null space {v : v @ mat = 0} of a map GF(p)^a -> GF(p)^b."""
    m = np.asarray(mat, dtype=np.int64)
    if domain_dim is None:
        domain_dim = m.shape[0]
    if m.shape[0] != domain_dim:
        raise ValueError("matrix rows do not match the stated domain")
    basis = right_nullspace(m.T, p)
    return Subspace(p, domain_dim, basis)


def apply_map(mat: np.ndarray, s: Subspace) -> Subspace:
    """Image {v @ mat : v in s} of a subspace under a linear map."""
    m = np.asarray(mat, dtype=np.int64)
    if m.shape[0] != s.ambient:
        raise ValueError(f"map with domain {m.shape[0]} applied in ambient {s.ambient}")
    codomain = m.shape[1]
    if s.is_zero():
        return Subspace.zero(s.p, codomain)
    image = (s.basis @ m) % s.p
    return Subspace(s.p, codomain, row_space(image, s.p))


def leq(a: Subspace, b: Subspace) -> bool:
    """Containment a <= b."""
    _check_compatible(a, b)
    if a.dim > b.dim:
        return False
    return sum_spaces(a, b) == b
