"""Admissible index sequences and their canonical classification.

A sequence is a tuple over {1,2,3,4} with distinct adjacent entries,
written end-first: s[0] is the end index i_n, s[-1] is the start index
i_1 (matching the digit-string serialization, e.g. "1321").  The
rewriting relation replaces the middle index of any window of three
pairwise-distinct consecutive indices by the fourth index.

Classification rests on the pair-type word: each consecutive pair
{s[k], s[k+1]} falls into one of the three partitions of {1,2,3,4} into
two pairs (12|34, 13|24, 14|23).  A step of pair type T from a given
index has a unique target, so a sequence is exactly (end index, word
over {A,B,C}); one rewrite swaps two adjacent distinct letters of that
word.  Hence

    closure class  <->  (end index, letter counts of the type word),

which canonicalize() exploits.  class_closure() is the independent
breadth-first oracle; the test suites check the two agree exhaustively
on small lengths.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

AdmSeq = tuple[int, ...]

# Partition types of unordered pairs: 0 <-> 12|34, 1 <-> 13|24, 2 <-> 14|23.
_PAIR_TYPE = {}
for _pair, _ty in (((1, 2), 0), ((3, 4), 0), ((1, 3), 1), ((2, 4), 1),
                   ((1, 4), 2), ((2, 3), 2)):
    _PAIR_TYPE[_pair] = _ty
    _PAIR_TYPE[(_pair[1], _pair[0])] = _ty

# partner under a type: stepping from x by type t lands on _PARTNER[t][x]
_PARTNER = (
    {1: 2, 2: 1, 3: 4, 4: 3},
    {1: 3, 3: 1, 2: 4, 4: 2},
    {1: 4, 4: 1, 2: 3, 3: 2},
)

# Action columns of the eight-type table: for each class tag, which tag
# results from prepending index i (relative to a class starting at 1).
# Missing keys are the "-" cells (i equal to the end index).
ACTION_TABLE = {
    "F21": {1: "G11", 3: "G31", 4: "G41"},
    "F31": {1: "G11", 2: "G21", 4: "G41"},
    "F41": {1: "G11", 2: "G21", 3: "G31"},
    "G11": {2: "F21", 3: "F31", 4: "F41"},
    "G21": {1: "H11", 3: "F31", 4: "F41"},
    "G31": {1: "H11", 2: "F21", 4: "F41"},
    "G41": {1: "H11", 2: "F21", 3: "F31"},
    "H11": {2: "G21", 3: "G31", 4: "G41"},
}


def seq_from_string(text: str) -> AdmSeq:
    if not text or any(ch not in "1234" for ch in text):
        raise ValueError(f"not an index sequence: {text!r}")
    return tuple(int(ch) for ch in text)


def seq_to_string(s: AdmSeq) -> str:
    return "".join(str(i) for i in s)


def is_admissible(s: AdmSeq) -> bool:
    """Nonempty, indices in 1..4, no two adjacent indices equal."""
    if not s or any(i not in (1, 2, 3, 4) for i in s):
        return False
    return all(a != b for a, b in zip(s, s[1:]))


def _require_admissible(s: AdmSeq) -> AdmSeq:
    s = tuple(s)
    if not is_admissible(s):
        raise ValueError(f"not an admissible sequence: {seq_to_string(s) if s else s!r}")
    return s


def pair_counts(s: AdmSeq) -> tuple[int, int, int]:
    """Letter counts of the pair-type word of a sequence."""
    c = [0, 0, 0]
    for a, b in zip(s, s[1:]):
        c[_PAIR_TYPE[(a, b)]] += 1
    return tuple(c)


def rewrite_neighbors(s: AdmSeq) -> set[AdmSeq]:
    """All one-step rewrites: middle-index swap in any all-distinct window."""
    s = _require_admissible(s)
    out: set[AdmSeq] = set()
    for k in range(len(s) - 2):
        x, y, z = s[k], s[k + 1], s[k + 2]
        if x != z:  # adjacent entries already differ, so the window is distinct
            w = 10 - x - y - z
            out.add(s[: k + 1] + (w,) + s[k + 2:])
    return out


def class_closure(s: AdmSeq) -> frozenset[AdmSeq]:
    """Breadth-first closure of the rewriting relation (oracle form)."""
    s = _require_admissible(s)
    seen = {s}
    frontier = [s]
    while frontier:
        nxt = []
        for cur in frontier:
            for nb in rewrite_neighbors(cur):
                if nb not in seen:
                    seen.add(nb)
                    nxt.append(nb)
        frontier = nxt
    return frozenset(seen)


def _klein_walk(end: int, counts: tuple[int, int, int]) -> int:
    """Start index implied by the end index and the type-word parities."""
    cur = end
    for ty in range(3):
        if counts[ty] % 2:
            cur = _PARTNER[ty][cur]
    return cur


def _relabel_counts(counts, perm) -> tuple[int, int, int]:
    out = [0, 0, 0]
    reps = ((1, 2), (1, 3), (1, 4))
    for ty in range(3):
        x, y = reps[ty]
        out[_PAIR_TYPE[(perm[x - 1], perm[y - 1])]] = counts[ty]
    return tuple(out)


@dataclass(frozen=True)
class CanonForm:
    """Canonical description of a closure class.

    tag/start/r/s/t describe the class after relabeling by perm (the
    transposition swapping 1 with the original start index), so the tag
    is always one of the eight start-at-1 table rows.  end and counts
    are in the original labels; (end, counts) is a complete class key.
    """

    tag: str
    end: int
    start: int
    r: int
    s: int
    t: int
    perm: tuple[int, int, int, int]
    length: int
    counts: tuple[int, int, int]

    @property
    def key(self) -> tuple[int, tuple[int, int, int]]:
        return (self.end, self.counts)

    @property
    def class_size(self) -> int:
        n = sum(self.counts)
        size = 1
        for k in range(1, n + 1):
            size *= k
        for c in self.counts:
            for k in range(1, c + 1):
                size //= k
        return size

    def __str__(self) -> str:
        sig = f"{self.tag} r={self.r} s={self.s} t={self.t}"
        if self.perm != (1, 2, 3, 4):
            sig += f" perm={''.join(map(str, self.perm))}"
        return sig


def _extract_exponents(tag: str, a: int, b: int, c: int) -> tuple[int, int, int]:
    if tag == "F21":
        return c // 2, b // 2, (a + 1) // 2
    if tag == "F31":
        return c // 2, (b + 1) // 2, a // 2
    if tag == "F41":
        return (c + 1) // 2, b // 2, a // 2
    if tag == "G11":
        return c // 2, b // 2, a // 2
    if tag == "G21":
        return (c + 1) // 2, (b - 1) // 2, a // 2
    if tag == "G31":
        return (c + 1) // 2, b // 2, (a - 1) // 2
    if tag == "G41":
        return c // 2, (b - 1) // 2, (a + 1) // 2
    # H11: all three counts odd.  The (14)^r(31)^s(21)^t spelling admits
    # two junction layouts; b == 1 is extracted with s = 0 (t maximal).
    r = (c + 1) // 2
    if b == 1:
        return r, 0, (a + 1) // 2
    return r, (b + 1) // 2, (a - 1) // 2


@lru_cache(maxsize=None)
def canon_from_key(end: int, counts: tuple[int, int, int]) -> CanonForm:
    start = _klein_walk(end, counts)
    if start == 1:
        perm = (1, 2, 3, 4)
    else:
        perm = tuple(1 if i == start else (start if i == 1 else i) for i in range(1, 5))
    end_1 = perm[end - 1]
    a, b, c = _relabel_counts(counts, perm)
    length = 1 + a + b + c
    if end_1 == 1:
        tag = "G11" if length % 2 else "H11"
    else:
        tag = f"F{end_1}1" if length % 2 == 0 else f"G{end_1}1"
    r, s, t = _extract_exponents(tag, a, b, c)
    return CanonForm(tag, end, start, r, s, t, perm, length, counts)


def canonicalize(s: AdmSeq) -> CanonForm:
    """Classify the closure class of a sequence into the eight-type table."""
    s = _require_admissible(s)
    return canon_from_key(s[0], pair_counts(s))


def representative(c: CanonForm) -> AdmSeq:
    """Lexicographically smallest member of the class."""
    remaining = list(c.counts)
    cur = c.end
    out = [cur]
    for _ in range(sum(c.counts)):
        step = min(
            (_PARTNER[ty][cur], ty) for ty in range(3) if remaining[ty]
        )
        cur = step[0]
        remaining[step[1]] -= 1
        out.append(cur)
    return tuple(out)


def class_members(c: CanonForm) -> frozenset[AdmSeq]:
    """All members of the class, generated from the canonical key.

    Distinct type words give distinct sequences (the word is recovered
    from the sequence's consecutive pairs), so a counted walk emits each
    member exactly once.
    """
    out: list[AdmSeq] = []
    counts = list(c.counts)
    seq = [c.end]

    def walk(cur: int) -> None:
        if not (counts[0] or counts[1] or counts[2]):
            out.append(tuple(seq))
            return
        for ty in range(3):
            if counts[ty]:
                counts[ty] -= 1
                nxt = _PARTNER[ty][cur]
                seq.append(nxt)
                walk(nxt)
                seq.pop()
                counts[ty] += 1

    walk(c.end)
    return frozenset(out)


def prepend(i: int, c: CanonForm) -> CanonForm:
    """Class of the sequence with i appended at the end side (length + 1).

    Undefined for i equal to the current end index, matching the "-"
    cells of the action table.
    """
    if i not in (1, 2, 3, 4):
        raise ValueError(f"index {i} out of range 1..4")
    if i == c.end:
        raise ValueError(f"prepend({i}, ...) undefined: class already ends at {i}")
    counts = list(c.counts)
    counts[_PAIR_TYPE[(i, c.end)]] += 1
    return canon_from_key(i, tuple(counts))


def _start_at_one(n: int):
    """All admissible sequences of length n starting at 1 (3^(n-1) items)."""
    def extend(suffix: tuple[int, ...]):
        if len(suffix) == n:
            yield suffix
            return
        for i in range(1, 5):
            if i != suffix[0]:
                yield from extend((i,) + suffix)

    yield from extend((1,))


def slice_enumerate(n: int) -> set[CanonForm]:
    """Classes of length-n sequences starting at 1, by brute-force closure."""
    if n < 1:
        raise ValueError("length must be >= 1")
    seen: set[AdmSeq] = set()
    out: set[CanonForm] = set()
    for s in _start_at_one(n):
        if s in seen:
            continue
        cls = class_closure(s)
        seen.update(cls)
        out.add(canonicalize(s))
    return out


def classes_of_length(n: int, start: int | None = None,
                      end: int | None = None) -> list[CanonForm]:
    """All closure classes of length n, optionally filtered by start/end.

    Enumerated directly from the class keys (ends x letter counts), so
    this stays cheap for lengths where brute force would not.
    """
    if n < 1:
        raise ValueError("length must be >= 1")
    ends = (end,) if end else (1, 2, 3, 4)
    out = []
    for e in ends:
        for a in range(n):
            for b in range(n - a):
                c = n - 1 - a - b
                form = canon_from_key(e, (a, b, c))
                if start is None or form.start == start:
                    out.append(form)
    return out
