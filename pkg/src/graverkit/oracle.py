"""Brute-force reference routines.

These are the independent oracles the test suite checks the fast paths
against: boxed enumeration of kernel points, a conformal-minimality filter
(giving the Graver basis whenever the box provably contains it), and an
exhaustive semiconformal witness search for indispensability.
"""

from __future__ import annotations

from typing import Sequence

from .errors import PreconditionError
from .linalg import (
    IntMat,
    IntVec,
    is_semiconformal_sum,
    negative_part,
    positive_part,
    sign_canonical,
    vec_sub,
)


def kernel_points_in_box(A: IntMat, box: int) -> list[IntVec]:
    """All nonzero u with A*u = 0 and |u_i| <= box, both signs included.

    Depth-first over coordinates with a per-row residual bound; the final
    coordinate is solved instead of enumerated.
    """
    if box < 0:
        raise ValueError("box must be nonnegative")
    m, n = A.nrows, A.ncols
    if n == 0:
        return []
    cols = [A.column(j + 1) for j in range(n)]
    # suffix_reach[j][t]: max possible |contribution| of coordinates j.. to row t
    suffix_reach = [[0] * m for _ in range(n + 1)]
    for j in range(n - 1, -1, -1):
        for t in range(m):
            suffix_reach[j][t] = suffix_reach[j + 1][t] + box * abs(cols[j][t])

    out: list[IntVec] = []
    partial = [0] * n

    def descend(j: int, residual: list[int]) -> None:
        if j == n - 1:
            col = cols[j]
            if all(c == 0 for c in col):
                if any(residual):
                    return
                for x in range(-box, box + 1):
                    partial[j] = x
                    if any(partial):
                        out.append(tuple(partial))
                partial[j] = 0
                return
            t0 = next(t for t in range(m) if col[t] != 0)
            if residual[t0] % col[t0] != 0:
                return
            x = -residual[t0] // col[t0]
            if abs(x) > box:
                return
            if any(residual[t] + x * col[t] != 0 for t in range(m)):
                return
            partial[j] = x
            if any(partial):
                out.append(tuple(partial))
            partial[j] = 0
            return
        reach = suffix_reach[j + 1]
        col = cols[j]
        for x in range(-box, box + 1):
            nxt = [residual[t] + x * col[t] for t in range(m)]
            ok = True
            for t in range(m):
                if abs(nxt[t]) > reach[t]:
                    ok = False
                    break
            if not ok:
                continue
            partial[j] = x
            descend(j + 1, nxt)
            partial[j] = 0

    descend(0, [0] * m)
    return out


def graver_by_enumeration(A: IntMat, box: int) -> tuple[IntVec, ...]:
    """Conformally minimal nonzero kernel vectors inside the box, canonical.

    Raises if any minimal element touches the box boundary: the box is then
    not certified to contain the whole Graver basis.
    """
    points = kernel_points_in_box(A, box)
    parts = [(u, positive_part(u), negative_part(u)) for u in points]
    minimal: list[IntVec] = []
    for u, up, um in parts:
        dominated = False
        for v, vp, vm in parts:
            if v == u:
                continue
            if all(a <= b for a, b in zip(vp, up)) and all(a <= b for a, b in zip(vm, um)):
                dominated = True
                break
        if not dominated:
            minimal.append(u)
    for u in minimal:
        if max(abs(x) for x in u) == box:
            raise PreconditionError(
                f"oracle box {box} too small: minimal element {u} touches the boundary"
            )
    return tuple(sorted({sign_canonical(u) for u in minimal}))


def dispensability_witness_by_enumeration(
    A: IntMat, u: Sequence[int], box: int
) -> tuple[IntVec, IntVec] | None:
    """Search u = v +_sc w over ALL kernel points w with |w_i| <= box.

    v = u - w is unrestricted (it is a kernel vector automatically). Returns
    a proper witness (v, w) or None.
    """
    u = tuple(int(x) for x in u)
    if not A.in_kernel(u):
        raise PreconditionError(f"{u} is not in the kernel")
    for w in kernel_points_in_box(A, box):
        if w == u:
            continue
        v = vec_sub(u, w)
        if all(x == 0 for x in v):
            continue
        if is_semiconformal_sum(u, v, w):
            return (v, w)
    return None


def indispensable_by_enumeration(A: IntMat, box: int, wbox: int) -> tuple[IntVec, ...]:
    """Brute-force indispensable set: Graver-by-box filtered by witness search."""
    out = []
    for u in graver_by_enumeration(A, box):
        if dispensability_witness_by_enumeration(A, u, wbox) is None:
            out.append(u)
    return tuple(out)
