"""Graver bases, circuits, and generalized primitive sets.

The Graver basis is computed by a Pottier-style completion over the saturated
kernel lattice: seed with a lattice basis and its negations, repeatedly form
pairwise sums with cancellation, conformally reduce each sum to a normal form
against the current set, and insert nonzero normal forms. At the fixpoint the
conformally minimal elements are exactly the Graver basis.

All arithmetic is exact. A numpy int64 index accelerates the search for
conformal reducers; it is only consulted while every entry is provably far
below the int64 range, otherwise the engine falls back to pure-integer scans.
"""

from __future__ import annotations

import heapq
import itertools
import math
import time
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import BudgetExceededError, PreconditionError
from .linalg import (
    IntMat,
    IntVec,
    kernel_lattice,
    negative_part,
    one_norm,
    positive_part,
    sign_canonical,
    vec_add,
    vec_neg,
    vec_sub,
)

# Above this magnitude the int64 reducer index is abandoned; sums of two
# in-range vectors must stay representable.
_NP_SAFE_BOUND = 1 << 60


@dataclass(frozen=True)
class Budget:
    """Resource caps for one completion run."""

    max_candidates: int = 2_000_000
    max_seconds: float = 600.0


DEFAULT_BUDGET = Budget()


@dataclass(frozen=True)
class GraverBasis:
    """Canonical Graver basis: one sign-normalized representative per +/- pair."""

    n: int
    elements: tuple[IntVec, ...]
    matrix_hash: str

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def as_set(self) -> frozenset[IntVec]:
        return frozenset(self.elements)

    def full_set(self) -> frozenset[IntVec]:
        """Both signs of every element."""
        return frozenset(self.elements) | frozenset(vec_neg(u) for u in self.elements)

    def contains_up_to_sign(self, u: Sequence[int]) -> bool:
        return sign_canonical(u) in self.as_set()


@dataclass(frozen=True)
class CircuitSet:
    n: int
    elements: tuple[IntVec, ...]

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def as_set(self) -> frozenset[IntVec]:
        return frozenset(self.elements)


# ---------------------------------------------------------------------------
# completion engine

class _ReducerIndex:
    """Set of vectors with fast conformal-divisor lookup.

    Row i of the int64 stack holds (g+, g-) of vector i; `find(sp, sm)`
    returns the index of some stored g with g+ <= sp and g- <= sm, or -1.
    Candidates discovered early have small norms and reduce most later sums,
    so the scan runs over geometrically growing chunks from the front.
    """

    _FIRST_CHUNK = 128

    def __init__(self, n: int):
        self.n = n
        self.vectors: list[IntVec] = []
        self.parts: list[tuple[int, ...]] = []  # concatenated (pos, neg)
        self._cap = 256
        self._stack = np.zeros((self._cap, 2 * n), dtype=np.int64)
        self._np_ok = True

    def __len__(self) -> int:
        return len(self.vectors)

    def add(self, v: IntVec) -> None:
        row = positive_part(v) + negative_part(v)
        k = len(self.vectors)
        self.vectors.append(v)
        self.parts.append(row)
        if self._np_ok and max(row) >= _NP_SAFE_BOUND // 2:
            self._np_ok = False
        if not self._np_ok:
            return
        if k == self._cap:
            self._cap *= 2
            grown = np.zeros((self._cap, 2 * self.n), dtype=np.int64)
            grown[:k] = self._stack[:k]
            self._stack = grown
        self._stack[k] = row

    def _scan(self, query: tuple[int, ...], count_all: bool) -> int:
        """First index with row <= query, or the number of such rows."""
        k = len(self.vectors)
        if k == 0:
            return 0 if count_all else -1
        if self._np_ok and max(query) < _NP_SAFE_BOUND:
            q = np.array(query, dtype=np.int64)
            if count_all:
                return int((self._stack[:k] <= q).all(axis=1).sum())
            start = 0
            chunk = self._FIRST_CHUNK
            while start < k:
                end = min(k, start + chunk)
                mask = (self._stack[start:end] <= q).all(axis=1)
                hit = int(mask.argmax())
                if mask[hit]:
                    return start + hit
                start = end
                chunk *= 8
            return -1
        found = 0
        for i in range(k):
            row = self.parts[i]
            if all(a <= b for a, b in zip(row, query)):
                if not count_all:
                    return i
                found += 1
        return found if count_all else -1

    def find(self, sp: IntVec, sm: IntVec) -> int:
        return self._scan(sp + sm, count_all=False)

    def dominators(self, idx: int) -> int:
        """How many stored vectors are conformally <= vector idx (including itself)."""
        return self._scan(self.parts[idx], count_all=True)


def _has_cancellation(u: IntVec, v: IntVec) -> bool:
    return any(a * b < 0 for a, b in zip(u, v))


def _complete_lattice(
    basis: Sequence[IntVec], n: int, budget: Budget
) -> list[IntVec]:
    """Run the completion; return canonical sorted Graver representatives."""
    if not basis:
        return []
    index = _ReducerIndex(n)
    members: set[IntVec] = set()

    def insert(v: IntVec) -> None:
        # keep +/- side by side so reduction chains mirror under negation
        for w in (v, vec_neg(v)):
            if w not in members:
                members.add(w)
                index.add(w)

    for b in basis:
        insert(b)

    heap: list[tuple[int, IntVec]] = []
    queued: set[IntVec] = set()
    generated = 0

    def enqueue_pairs(v: IntVec) -> None:
        nonlocal generated
        for g in list(index.vectors):
            if g == v or not _has_cancellation(v, g):
                continue
            s = vec_add(v, g)
            if all(x == 0 for x in s):
                continue
            s = sign_canonical(s)
            if s in queued:
                continue
            queued.add(s)
            generated += 1
            heapq.heappush(heap, (one_norm(s), s))

    seeds = list(index.vectors)
    for i, j in itertools.combinations(range(len(seeds)), 2):
        f, g = seeds[i], seeds[j]
        if not _has_cancellation(f, g):
            continue
        s = vec_add(f, g)
        if all(x == 0 for x in s):
            continue
        s = sign_canonical(s)
        if s not in queued:
            queued.add(s)
            generated += 1
            heapq.heappush(heap, (one_norm(s), s))

    start = time.monotonic()
    pops = 0
    while heap:
        if generated > budget.max_candidates:
            raise BudgetExceededError("elements", budget.max_candidates, generated)
        pops += 1
        if pops % 64 == 0 and time.monotonic() - start > budget.max_seconds:
            raise BudgetExceededError("time", budget.max_seconds, generated)
        _, s = heapq.heappop(heap)
        # normal form of s against the current set
        while True:
            if s in members:
                s = None
                break
            i = index.find(positive_part(s), negative_part(s))
            if i < 0:
                break
            s = vec_sub(s, index.vectors[i])
            if all(x == 0 for x in s):
                s = None
                break
        if s is None:
            continue
        insert(s)
        enqueue_pairs(s)

    minimal = []
    for i, v in enumerate(index.vectors):
        if index.dominators(i) == 1:
            minimal.append(sign_canonical(v))
    return sorted(set(minimal))


_GRAVER_MEMO: dict[tuple, GraverBasis] = {}


def graver_basis(A: IntMat, budget: Budget | None = None, use_cache: bool = True) -> GraverBasis:
    """Exact Graver basis of Ker_Z(A), canonical order, one element per +/- pair.

    Raises BudgetExceededError when the completion outgrows its caps; that is
    a resource condition, reported distinctly from any mathematical failure.
    """
    key = (A.rows, A.ncols)
    if use_cache and key in _GRAVER_MEMO:
        return _GRAVER_MEMO[key]
    budget = budget or DEFAULT_BUDGET
    lattice = kernel_lattice(A)
    elements = _complete_lattice(lattice.vectors, A.ncols, budget)
    result = GraverBasis(n=A.ncols, elements=tuple(elements), matrix_hash=A.content_hash())
    if use_cache:
        _GRAVER_MEMO[key] = result
    return result


# ---------------------------------------------------------------------------
# primitive elements of arbitrary sets

def is_primitive_in(u: Sequence[int], S: Iterable[IntVec]) -> bool:
    """True iff no v in S, v != u, has v+ <= u+ and v- <= u-."""
    u = tuple(u)
    pool = set(map(tuple, S))
    if u not in pool:
        raise PreconditionError(f"{u} is not a member of the given set")
    up, um = positive_part(u), negative_part(u)
    for v in pool:
        if v == u:
            continue
        if all(a <= b for a, b in zip(positive_part(v), up)) and all(
            a <= b for a, b in zip(negative_part(v), um)
        ):
            return False
    return True


def graver_of_set(S: Iterable[IntVec]) -> frozenset[IntVec]:
    """The primitive elements of S (with respect to membership in S itself)."""
    pool = list(set(map(tuple, S)))
    parts = [(v, positive_part(v), negative_part(v)) for v in pool]
    out = []
    for v, vp, vm in parts:
        primitive = True
        for w, wp, wm in parts:
            if w == v:
                continue
            if all(a <= b for a, b in zip(wp, vp)) and all(a <= b for a, b in zip(wm, vm)):
                primitive = False
                break
        if primitive:
            out.append(v)
    return frozenset(out)


# ---------------------------------------------------------------------------
# circuits

def circuits(A: IntMat) -> CircuitSet:
    """All circuits of A up to sign: minimal-support primitive kernel vectors.

    A column subset J supports a circuit iff rank(A_J) = |J| - 1 and the
    kernel vector of A_J has full support; the vector itself comes out of the
    saturated rank-one kernel, hence with coprime entries.
    """
    n = A.ncols
    found: set[IntVec] = set()

    if A.nrows == 1 and all(e > 0 for e in A.rows[0]):
        entries = A.rows[0]
        for i, j in itertools.combinations(range(n), 2):
            g = math.gcd(entries[i], entries[j])
            u = [0] * n
            u[i] = entries[j] // g
            u[j] = -entries[i] // g
            found.add(tuple(u))
        return CircuitSet(n=n, elements=tuple(sorted(found)))

    # zero columns are circuits on their own
    for j in range(n):
        if all(A.rows[k][j] == 0 for k in range(A.nrows)):
            u = [0] * n
            u[j] = 1
            found.add(tuple(u))

    r = A.rank()
    for k in range(2, min(r + 1, n) + 1):
        for J in itertools.combinations(range(n), k):
            sub = IntMat.from_rows(
                [[A.rows[t][j] for j in J] for t in range(A.nrows)]
            )
            lat = kernel_lattice(sub)
            if lat.rank != 1:
                continue
            u = lat.vectors[0]
            if any(x == 0 for x in u):
                continue
            full = [0] * n
            for pos, j in enumerate(J):
                full[j] = u[pos]
            found.add(sign_canonical(full))
    return CircuitSet(n=n, elements=tuple(sorted(found)))


# ---------------------------------------------------------------------------
# pointedness

def assert_pointed(A: IntMat, G: GraverBasis | None = None) -> bool:
    """True iff Ker_Z(A) meets the nonnegative orthant only in 0.

    A nonzero nonnegative kernel vector exists iff a conformally minimal one
    does, so scanning the Graver basis decides the question exactly.
    """
    if G is None:
        G = graver_basis(A)
    for g in G.elements:
        if all(x >= 0 for x in g) or all(x <= 0 for x in g):
            return False
    return True
