"""Indispensable elements and the strongly robust decision Gr(A) = S(A).

An element of the Graver basis is indispensable when it admits no proper
semiconformal decomposition into kernel vectors. The witness search may
restrict the second summand to Graver elements: conformally splitting a
non-primitive second summand w = w' +_c w'' turns u = v +_sc w into the
semiconformal sums u = (v+w') +_sc w'' and u = (v+w'') +_sc w', so a second
summand of minimal 1-norm is primitive. The brute-force oracle in
`graverkit.oracle` guards this reduction in the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import PreconditionError
from .graver import Budget, GraverBasis, assert_pointed, graver_basis
from .linalg import IntMat, IntVec, is_semiconformal_sum, sign_canonical, vec_sub

Witness = tuple[IntVec, IntVec]


@dataclass(frozen=True)
class IndispensableSet:
    """S(A): Graver elements with no proper semiconformal decomposition."""

    n: int
    elements: tuple[IntVec, ...]
    matrix_hash: str

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def as_set(self) -> frozenset[IntVec]:
        return frozenset(self.elements)


@dataclass(frozen=True)
class RobustnessCertificate:
    matrix_hash: str
    strongly_robust: bool
    graver_size: int
    indispensable_size: int
    # (u, v, w): u in Gr(A) with proper semiconformal decomposition u = v + w
    witness: tuple[IntVec, IntVec, IntVec] | None = None

    @property
    def verdict(self) -> bool:
        return self.strongly_robust


def dispensability_witness(u: Sequence[int], G: GraverBasis) -> Witness | None:
    """A proper semiconformal decomposition u = v +_sc w, or None.

    Probes every w in +-G as either summand; both orderings matter because
    semiconformality is not symmetric. The verdict is shared by u and -u.
    """
    u = sign_canonical(u)
    if u not in G.as_set():
        raise PreconditionError(f"{u} is not a Graver basis element (up to sign)")
    zero = (0,) * len(u)
    for w in G.full_set():
        if w == u:
            continue
        v = vec_sub(u, w)
        if v == zero:
            continue
        if is_semiconformal_sum(u, v, w):
            return (v, w)
        if is_semiconformal_sum(u, w, v):
            return (w, v)
    return None


def is_indispensable(u: Sequence[int], G: GraverBasis) -> bool:
    return dispensability_witness(u, G) is None


def indispensable_set(
    A: IntMat, budget: Budget | None = None, G: GraverBasis | None = None
) -> IndispensableSet:
    """Filter the Graver basis down to S(A). Requires a pointed kernel."""
    if G is None:
        G = graver_basis(A, budget=budget)
    if not assert_pointed(A, G):
        raise PreconditionError("matrix is not pointed: Ker(A) meets N^n \\ {0}")
    kept = tuple(u for u in G.elements if dispensability_witness(u, G) is None)
    return IndispensableSet(n=G.n, elements=kept, matrix_hash=G.matrix_hash)


def is_strongly_robust(A: IntMat, budget: Budget | None = None) -> RobustnessCertificate:
    """Decide Gr(A) = S(A); on failure include a validated witness triple."""
    G = graver_basis(A, budget=budget)
    if not assert_pointed(A, G):
        raise PreconditionError("matrix is not pointed: Ker(A) meets N^n \\ {0}")
    dispensable = 0
    first_witness = None
    for u in G.elements:
        w = dispensability_witness(u, G)
        if w is not None:
            dispensable += 1
            if first_witness is None:
                first_witness = (u, w[0], w[1])
    return RobustnessCertificate(
        matrix_hash=G.matrix_hash,
        strongly_robust=dispensable == 0,
        graver_size=len(G),
        indispensable_size=len(G) - dispensable,
        witness=first_witness,
    )
