"""The strongly robust simplicial complex of a monomial curve.

A subset w of {1..s} is a face exactly when the lifted matrix Lambda(T)_w has
a strongly robust toric ideal. For monomial curves the complex is {0} or
{0,{i}} for a single i, and the singleton faces admit a fast test: {i} is a
face iff every projection of a Graver element (delete coordinate i) stays
primitive among all such projections. The expensive lifting route is kept as
an independent cross-check.

Also houses the 1x3 complete-intersection classification driving the
structure theorems: the candidate generator degrees c_i * n_i, where c_i is
the least multiple of n_i lying in the numerical semigroup of the other two.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .bouquet import bouquet_decomposition, d_map, is_simple
from .errors import GraverKitError, PreconditionError
from .graver import Budget, _ReducerIndex, graver_basis
from .linalg import IntMat, IntVec, project_out, vec_neg
from .robustness import dispensability_witness, is_strongly_robust


def _as_row(T) -> IntMat:
    if isinstance(T, IntMat):
        if T.nrows != 1:
            raise PreconditionError(f"expected a 1xs matrix, got {T.nrows}x{T.ncols}")
        return T
    return IntMat.row_vector(T)


# ---------------------------------------------------------------------------
# Lawrence liftings

@dataclass(frozen=True)
class LambdaMatrix:
    """Second Lawrence lifting of T with row 1+i and column s+i removed, i in omega."""

    T: IntMat
    omega: frozenset[int]
    matrix: IntMat


def lambda_matrix(T, omega: Iterable[int]) -> LambdaMatrix:
    T = _as_row(T)
    s = T.ncols
    if s < 2:
        raise PreconditionError("lifting needs at least two columns")
    omega = frozenset(int(i) for i in omega)
    if not omega <= set(range(1, s + 1)):
        raise PreconditionError(f"omega {sorted(omega)} is not a subset of 1..{s}")
    keep = [j for j in range(1, s + 1) if j not in omega]
    rows = [list(T.rows[0]) + [0] * len(keep)]
    for i in keep:
        row = [0] * s
        row[i - 1] = 1
        row.extend(1 if j == i else 0 for j in keep)
        rows.append(row)
    return LambdaMatrix(T=T, omega=omega, matrix=IntMat.from_rows(rows))


# ---------------------------------------------------------------------------
# 1x3 classification

class CurveKind(enum.Enum):
    NOT_CI = "NotCI"
    CI_ON = "CIOn"
    CI_ON_ALL = "CIOnAll"


@dataclass(frozen=True)
class CurveClassification:
    T: tuple[int, int, int]  # gcd-normalized
    c: tuple[int, int, int]
    betti_candidates: tuple[int, int, int]  # c_i * n_i
    kind: CurveKind
    on: int | None  # 1-based slot when kind is CI_ON

    def describe(self) -> str:
        if self.kind is CurveKind.CI_ON:
            return f"CIOn({self.on})"
        return self.kind.value


def degree_t(T, u: Sequence[int]) -> int:
    """T-degree of the monomial x^u: the dot product T . u for u >= 0."""
    T = _as_row(T)
    u = tuple(int(x) for x in u)
    if len(u) != T.ncols:
        raise ValueError(f"vector length {len(u)} != {T.ncols}")
    if any(x < 0 for x in u):
        raise ValueError(f"negative entry in {u}")
    return sum(a * b for a, b in zip(T.rows[0], u))


def semigroup_min_multiple(n_i: int, n_j: int, n_k: int) -> int:
    """Least c >= 1 with c*n_i = a*n_j + b*n_k for some a, b >= 0.

    c = n_j * n_k always works, so a reachability table up to n_i*n_j*n_k
    suffices; past desk scale the table is replaced by a per-multiple
    divisibility scan with the same answer.
    """
    if n_i <= 0 or n_j <= 0 or n_k <= 0:
        raise PreconditionError("semigroup generators must be positive")
    c_bound = n_j * n_k
    top = c_bound * n_i
    if top <= 10**7:
        reachable = bytearray(top + 1)
        reachable[0] = 1
        for gen in (n_j, n_k):
            for value in range(gen, top + 1):
                if reachable[value - gen]:
                    reachable[value] = 1
        for c in range(1, c_bound + 1):
            if reachable[c * n_i]:
                return c
    else:
        for c in range(1, c_bound + 1):
            target = c * n_i
            a_max = target // n_j
            if any((target - a * n_j) % n_k == 0 for a in range(a_max + 1)):
                return c
    raise GraverKitError("unreachable: c = n_j*n_k is always representable")


def classify_curve3(T) -> CurveClassification:
    """CIOn(i) / CIOnAll / NotCI verdict from the candidate degree pattern."""
    T = _as_row(T)
    if T.ncols != 3:
        raise PreconditionError(f"classification needs a 1x3 matrix, got 1x{T.ncols}")
    n = T.rows[0]
    if any(x <= 0 for x in n):
        raise PreconditionError("entries must be positive")
    g = math.gcd(*n)
    n = tuple(x // g for x in n)
    c = (
        semigroup_min_multiple(n[0], n[1], n[2]),
        semigroup_min_multiple(n[1], n[0], n[2]),
        semigroup_min_multiple(n[2], n[0], n[1]),
    )
    d = tuple(ci * ni for ci, ni in zip(c, n))
    if d[0] == d[1] == d[2]:
        kind, on = CurveKind.CI_ON_ALL, None
    elif d[0] == d[1]:
        kind, on = CurveKind.CI_ON, 3
    elif d[0] == d[2]:
        kind, on = CurveKind.CI_ON, 2
    elif d[1] == d[2]:
        kind, on = CurveKind.CI_ON, 1
    else:
        kind, on = CurveKind.NOT_CI, None
    return CurveClassification(T=n, c=c, betti_candidates=d, kind=kind, on=on)


# ---------------------------------------------------------------------------
# faces of the complex

def _require_simple_curve(T: IntMat) -> None:
    if any(x <= 0 for x in T.rows[0]):
        raise PreconditionError("monomial curve entries must be positive")
    if not is_simple(T):
        raise PreconditionError("matrix is not simple (some bouquet is not a singleton)")


def _lifting_decomposition(T: IntMat, omega: frozenset[int]):
    """Bouquet decomposition of Lambda(T)_omega with sanity checks.

    Every non-free bouquet is anchored at one of the original s columns, so a
    kernel vector of T is carried to bouquet coordinates through the anchors
    regardless of the decomposition's canonical bouquet order.
    """
    lam = lambda_matrix(T, omega)
    dec = bouquet_decomposition(lam.matrix)
    s = T.ncols
    if dec.free_bouquet is not None or dec.num_bouquets != s:
        raise GraverKitError("unexpected bouquet structure in a Lawrence lifting")
    if {b.anchor for b in dec.bouquets} != set(range(1, s + 1)):
        raise GraverKitError("lifting bouquets are not anchored at the original columns")
    return lam, dec


def lift_curve_vector(dec, u: Sequence[int]) -> IntVec:
    """D image of a kernel vector of T inside a lifting's ambient space."""
    reordered = tuple(int(u[b.anchor - 1]) for b in dec.bouquets)
    return d_map(dec, reordered)


def s_omega(T, omega: Iterable[int], budget: Budget | None = None) -> frozenset[IntVec]:
    """The elements u of Gr(T) whose image D(u) is indispensable in Lambda(T)_omega."""
    T = _as_row(T)
    _require_simple_curve(T)
    omega = frozenset(int(i) for i in omega)
    lam, dec = _lifting_decomposition(T, omega)
    G_T = graver_basis(T, budget=budget)
    G_lam = graver_basis(lam.matrix, budget=budget)
    kept = []
    for u in G_T.elements:
        image = lift_curve_vector(dec, u)
        if not G_lam.contains_up_to_sign(image):
            raise GraverKitError(
                "D image of a Graver element is missing from the lifted Graver basis"
            )
        if dispensability_witness(image, G_lam) is None:
            kept.append(u)
    return frozenset(kept)


def face_test_lifting(T, omega: Iterable[int], budget: Budget | None = None) -> bool:
    """omega is a face iff the lifted toric ideal is strongly robust."""
    T = _as_row(T)
    _require_simple_curve(T)
    lam = lambda_matrix(T, omega)
    return is_strongly_robust(lam.matrix, budget=budget).strongly_robust


def face_test_projection(T, i: int, budget: Budget | None = None) -> bool:
    """{i} is a face iff every deleted-coordinate projection of Gr(T) is primitive.

    The projected set carries both signs of every projection, matching the
    up-to-sign semantics of the underlying Graver sets. Primitivity of x means
    no other member v has v+ <= x+ and v- <= x-, exactly `is_primitive_in`;
    the indexed dominator count only speeds the scan up.
    """
    T = _as_row(T)
    _require_simple_curve(T)
    if not 1 <= i <= T.ncols:
        raise PreconditionError(f"index {i} out of range 1..{T.ncols}")
    G = graver_basis(T, budget=budget)
    if not G.elements:
        return True
    index = _ReducerIndex(T.ncols - 1)
    for u in G.elements:
        p = project_out(u, i)
        index.add(p)
        index.add(vec_neg(p))
    # distinct Graver elements project to distinct vectors (a collision would
    # put a kernel vector supported on {i} in the lattice), so the dominator
    # count is 1 exactly for primitive projections
    for k in range(0, len(index.vectors), 2):
        if index.dominators(k) != 1:
            return False
    return True


@dataclass(frozen=True)
class RobustComplex:
    T: tuple[int, ...]
    faces: frozenset[frozenset[int]]
    cross_checked: bool = False

    @property
    def dim(self) -> int:
        return max(len(f) for f in self.faces) - 1

    def vertex(self) -> int | None:
        """The unique singleton face, when present."""
        singles = sorted(min(f) for f in self.faces if len(f) == 1)
        if not singles:
            return None
        if len(singles) > 1:
            raise GraverKitError(f"multiple vertices {singles}: uniqueness violated")
        return singles[0]

    def sorted_faces(self) -> list[list[int]]:
        return sorted([sorted(f) for f in self.faces], key=lambda f: (len(f), f))


def robust_complex(T, verify: bool = False, budget: Budget | None = None) -> RobustComplex:
    """Delta_T for a monomial curve: the empty face plus the passing singletons.

    T is gcd-normalized first. With verify=True every singleton verdict is
    cross-checked against the Lambda(T)_{i} lifting test; a mismatch raises.
    """
    T = _as_row(T)
    s = T.ncols
    if s < 3:
        raise PreconditionError(
            "complex computation needs s >= 3 (a 1x2 toric ideal is principal, never simple)"
        )
    g = math.gcd(*T.rows[0])
    T = IntMat.row_vector(tuple(x // g for x in T.rows[0]))
    _require_simple_curve(T)
    faces = {frozenset()}
    for i in range(1, s + 1):
        fast = face_test_projection(T, i, budget=budget)
        if verify:
            slow = face_test_lifting(T, {i}, budget=budget)
            if fast != slow:
                raise GraverKitError(
                    f"face tests disagree at i={i}: projection={fast}, lifting={slow}"
                )
        if fast:
            faces.add(frozenset({i}))
    return RobustComplex(
        T=T.rows[0], faces=frozenset(faces), cross_checked=verify
    )
