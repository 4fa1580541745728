"""Bounded desk-scale scan of strongly robust complexes of monomial curves.

Checks, over an exhaustive or sampled family of curves, that the complex
never carries more than one vertex, and (for 1x3 curves) that the vertex
pattern agrees with the complete-intersection classification. Any violation
is recorded and fails the run loudly; budget exhaustion on an instance only
skips it.
"""

from __future__ import annotations

import itertools
import math
import random
import time
from dataclasses import dataclass, field

from .complexes import CurveKind, classify_curve3, robust_complex
from .errors import BudgetExceededError
from .graver import Budget
from .linalg import IntMat


@dataclass
class SearchReport:
    s_values: tuple[int, ...]
    bound: int
    sample_budget: int | None
    instances: int = 0
    empty_complex: int = 0  # Delta_T = {0}
    one_vertex: int = 0  # Delta_T = {0, {i}}
    vertex_instances: list[dict] = field(default_factory=list)
    ci_on_count: int = 0  # s = 3 bookkeeping
    violations: list[str] = field(default_factory=list)
    skipped: list[dict] = field(default_factory=list)
    runtime_seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        return {
            "s_values": list(self.s_values),
            "bound": self.bound,
            "sample_budget": self.sample_budget,
            "instances": self.instances,
            "empty_complex": self.empty_complex,
            "one_vertex": self.one_vertex,
            "ci_on_count": self.ci_on_count,
            "vertex_instances": self.vertex_instances,
            "violations": self.violations,
            "skipped": self.skipped,
            "runtime_seconds": round(self.runtime_seconds, 3),
            "ok": self.ok,
        }


def _normalized(entries: tuple[int, ...]) -> tuple[int, ...]:
    g = math.gcd(*entries)
    return tuple(sorted(x // g for x in entries))


def _candidates(s: int, bound: int, sample_budget: int | None, rng: random.Random):
    if sample_budget is None:
        seen = set()
        for combo in itertools.combinations_with_replacement(range(1, bound + 1), s):
            t = _normalized(combo)
            if t not in seen:
                seen.add(t)
                yield t
    else:
        seen = set()
        emitted = 0
        attempts = 0
        while emitted < sample_budget and attempts < 100 * sample_budget:
            attempts += 1
            t = _normalized(tuple(rng.randint(1, bound) for _ in range(s)))
            if t in seen:
                continue
            seen.add(t)
            emitted += 1
            yield t


def sullivant_search(
    s_values,
    bound: int,
    sample_budget: int | None = None,
    seed: int = 0,
    budget: Budget | None = None,
) -> SearchReport:
    """Scan curves with s entries up to the bound; exhaustive unless sampled.

    Every instance is gcd-normalized, its complex computed by the projection
    criterion, and two structural facts asserted: at most one vertex, and for
    s = 3 exact agreement between the vertex and the classification verdict.
    """
    s_values = tuple(int(s) for s in s_values)
    report = SearchReport(s_values=s_values, bound=bound, sample_budget=sample_budget)
    rng = random.Random(seed)
    start = time.monotonic()
    for s in s_values:
        if not 3 <= s <= 6:
            raise ValueError(f"s must be within 3..6, got {s}")
        for t in _candidates(s, bound, sample_budget, rng):
            report.instances += 1
            T = IntMat.row_vector(t)
            try:
                complex_ = robust_complex(T, budget=budget)
            except BudgetExceededError as exc:
                report.skipped.append({"T": list(t), "reason": str(exc)})
                continue
            singles = [sorted(f)[0] for f in complex_.faces if len(f) == 1]
            if any(len(f) > 1 for f in complex_.faces):
                report.violations.append(f"T={t}: face of dimension >= 1")
            if len(singles) > 1:
                report.violations.append(f"T={t}: vertices {sorted(singles)} not unique")
            if singles:
                report.one_vertex += 1
                report.vertex_instances.append({"T": list(t), "vertex": singles[0]})
            else:
                report.empty_complex += 1
            if s == 3:
                cls = classify_curve3(T)
                if cls.kind is CurveKind.CI_ON:
                    report.ci_on_count += 1
                    if singles != [cls.on]:
                        report.violations.append(
                            f"T={t}: classification CIOn({cls.on}) but vertices {singles}"
                        )
                elif singles:
                    report.violations.append(
                        f"T={t}: classification {cls.kind.value} but vertex {singles[0]}"
                    )
    report.runtime_seconds = time.monotonic() - start
    return report
