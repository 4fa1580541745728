"""Command-line front end.

Exit codes: 0 success, 2 usage or input error, 3 mathematical precondition
failure (e.g. a non-pointed matrix), 4 budget exhaustion. With --format json
errors are emitted as machine-readable JSON on stdout.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .bouquet import bouquet_decomposition
from .complexes import classify_curve3, lambda_matrix, robust_complex
from .errors import BudgetExceededError, GraverKitError, PreconditionError
from .graver import Budget, circuits
from .lawrence import GenLawrenceSpec, build_gen_lawrence, reconstruct_gen_lawrence
from .linalg import IntMat
from .oracle import (
    graver_by_enumeration,
    indispensable_by_enumeration,
    kernel_points_in_box,
)
from .robustness import indispensable_set, is_strongly_robust
from .search import sullivant_search
from .store import (
    cached_graver_basis,
    format_vectors,
    read_matrix,
    resolve_cache,
    vectors_to_json,
)


class UsageError(GraverKitError):
    pass


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--out", metavar="FILE", help="write the result to FILE instead of stdout")
    p.add_argument("--cache-dir", metavar="PATH", help="persistent result cache (env GRAVERKIT_CACHE_DIR)")
    p.add_argument("--budget-elems", type=int, default=2_000_000, metavar="N",
                   help="candidate cap per Graver completion (default 2e6)")
    p.add_argument("--budget-secs", type=float, default=600.0, metavar="S",
                   help="wall-clock cap per Graver completion (default 600)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="graverkit",
        description="Exact Graver bases, bouquets, and strongly robust complexes of monomial curves.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("graver", help="Graver basis of a matrix file")
    p.add_argument("matrix")
    _add_common(p)
    p.set_defaults(func=cmd_graver)

    p = sub.add_parser("circuits", help="circuits of a matrix file")
    p.add_argument("matrix")
    _add_common(p)
    p.set_defaults(func=cmd_circuits)

    p = sub.add_parser("indispensable", help="indispensable elements S(A)")
    p.add_argument("matrix")
    _add_common(p)
    p.set_defaults(func=cmd_indispensable)

    p = sub.add_parser("bouquets", help="bouquet decomposition report")
    p.add_argument("matrix")
    _add_common(p)
    p.set_defaults(func=cmd_bouquets)

    p = sub.add_parser("check-robust", help="decide Gr(A) = S(A)")
    p.add_argument("matrix")
    _add_common(p)
    p.set_defaults(func=cmd_check_robust)

    p = sub.add_parser("complex", help="strongly robust complex of a monomial curve")
    p.add_argument("entries", nargs="+", type=int, metavar="N")
    p.add_argument("--verify", action="store_true",
                   help="cross-check each singleton against the lifting test")
    _add_common(p)
    p.set_defaults(func=cmd_complex)

    p = sub.add_parser("classify3", help="complete-intersection classification of a 1x3 curve")
    p.add_argument("entries", nargs=3, type=int, metavar="N")
    _add_common(p)
    p.set_defaults(func=cmd_classify3)

    p = sub.add_parser("lambda", help="lifted matrix Lambda(T)_omega")
    p.add_argument("entries", nargs="+", type=int, metavar="N")
    p.add_argument("--omega", default="", metavar="I,J,...",
                   help="comma-separated 1-based indices (default: empty set)")
    _add_common(p)
    p.set_defaults(func=cmd_lambda)

    p = sub.add_parser("genlaw", help="build a generalized Lawrence matrix from a JSON spec")
    p.add_argument("spec", help='JSON file {"T": [...], "c": [[...],...], "lambda": [[...],...]? }')
    p.add_argument("--verify", action="store_true",
                   help="also run the strong-robustness check on the result")
    p.add_argument("--skip-hypothesis", action="store_true",
                   help="skip the mixedness hypothesis check")
    _add_common(p)
    p.set_defaults(func=cmd_genlaw)

    p = sub.add_parser("reconstruct", help="generalized Lawrence form of a matrix file")
    p.add_argument("matrix")
    _add_common(p)
    p.set_defaults(func=cmd_reconstruct)

    p = sub.add_parser("search", help="bounded scan of robust complexes")
    p.add_argument("--s", nargs="+", type=int, default=[3], metavar="S")
    p.add_argument("--bound", type=int, default=20)
    p.add_argument("--samples", type=int, default=None,
                   help="random sample size per s (default: exhaustive)")
    p.add_argument("--seed", type=int, default=0)
    _add_common(p)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("oracle", help="brute-force reference computations")
    p.add_argument("mode", choices=("kernel", "graver", "indispensable"))
    p.add_argument("matrix")
    p.add_argument("--box", type=int, default=12, help="coordinate bound (default 12)")
    p.add_argument("--wbox", type=int, default=None,
                   help="bound for the semiconformal second summand (default: --box)")
    _add_common(p)
    p.set_defaults(func=cmd_oracle)

    return parser


def _budget(args) -> Budget:
    return Budget(max_candidates=args.budget_elems, max_seconds=args.budget_secs)


def _load(args) -> IntMat:
    try:
        return read_matrix(args.matrix)
    except (OSError, ValueError) as exc:
        raise UsageError(f"cannot read matrix from {args.matrix}: {exc}") from exc


def _graver_for(args, A: IntMat):
    return cached_graver_basis(A, resolve_cache(args.cache_dir), budget=_budget(args))


# ---------------------------------------------------------------------------
# handlers; each returns the output string

def cmd_graver(args) -> str:
    A = _load(args)
    G = _graver_for(args, A)
    if args.format == "json":
        return json.dumps(
            {"n": G.n, "count": len(G), "elements": vectors_to_json(G.elements),
             "matrix_hash": G.matrix_hash},
            indent=2,
        )
    return format_vectors(G.elements, G.n)


def cmd_circuits(args) -> str:
    A = _load(args)
    C = circuits(A)
    if args.format == "json":
        return json.dumps(
            {"n": C.n, "count": len(C), "elements": vectors_to_json(C.elements)}, indent=2
        )
    return format_vectors(C.elements, C.n)


def cmd_indispensable(args) -> str:
    A = _load(args)
    G = _graver_for(args, A)
    S = indispensable_set(A, budget=_budget(args), G=G)
    if args.format == "json":
        return json.dumps(
            {"n": S.n, "count": len(S), "elements": vectors_to_json(S.elements),
             "graver_size": len(G), "matrix_hash": S.matrix_hash},
            indent=2,
        )
    return format_vectors(S.elements, S.n)


def cmd_bouquets(args) -> str:
    A = _load(args)
    dec = bouquet_decomposition(A)
    report = {
        "bouquets": [
            {
                "members": list(b.members),
                "kind": b.kind,
                "c_vector": list(dec.c_vector(i + 1)),
            }
            for i, b in enumerate(dec.bouquets)
        ],
        "free_columns": list(dec.free_columns()),
        "a_matrix": [list(row) for row in dec.a_matrix.rows],
        "omega": sorted(dec.non_mixed_indices()),
        "simple": dec.free_bouquet is None and all(len(b.members) == 1 for b in dec.bouquets),
    }
    if args.format == "json":
        return json.dumps(report, indent=2)
    lines = []
    for i, b in enumerate(dec.bouquets, start=1):
        lines.append(f"B{i}: members={list(b.members)} kind={b.kind} c={list(b.c_restriction)}")
    if dec.free_bouquet:
        lines.append(f"free: members={list(dec.free_bouquet.members)}")
    lines.append(f"omega: {sorted(dec.non_mixed_indices())}")
    lines.append("A_B:")
    lines.append(dec.a_matrix.to_text().rstrip())
    return "\n".join(lines) + "\n"


def cmd_check_robust(args) -> str:
    A = _load(args)
    _graver_for(args, A)  # seed the memo through the persistent cache
    cert = is_strongly_robust(A, budget=_budget(args))
    payload = {
        "matrix_hash": cert.matrix_hash,
        "strongly_robust": cert.strongly_robust,
        "graver_size": cert.graver_size,
        "indispensable_size": cert.indispensable_size,
    }
    if cert.witness is not None:
        u, v, w = cert.witness
        payload["witness"] = {"u": list(u), "v": list(v), "w": list(w)}
    if args.format == "json":
        return json.dumps(payload, indent=2)
    lines = [f"strongly_robust: {str(cert.strongly_robust).lower()}",
             f"graver_size: {cert.graver_size}",
             f"indispensable_size: {cert.indispensable_size}"]
    if cert.witness is not None:
        u, v, w = cert.witness
        lines.append(f"witness: {list(u)} = {list(v)} +sc {list(w)}")
    return "\n".join(lines) + "\n"


def cmd_complex(args) -> str:
    rc = robust_complex(args.entries, verify=args.verify, budget=_budget(args))
    faces = rc.sorted_faces()
    payload = {
        "T": list(rc.T),
        "faces": faces,
        "cross_checked": rc.cross_checked,
    }
    if len(rc.T) == 3:
        cls = classify_curve3(rc.T)
        payload["classification"] = {
            "kind": cls.describe(),
            "c": list(cls.c),
            "betti_candidates": list(cls.betti_candidates),
        }
    if args.format == "json":
        return json.dumps(payload, indent=2)
    lines = [f"T: {' '.join(str(x) for x in rc.T)}",
             "faces: " + ", ".join(str(f) for f in faces)]
    if "classification" in payload:
        lines.append(f"classification: {payload['classification']['kind']}")
    return "\n".join(lines) + "\n"


def cmd_classify3(args) -> str:
    cls = classify_curve3(args.entries)
    if args.format == "json":
        return json.dumps(
            {"T": list(cls.T), "kind": cls.describe(), "on": cls.on,
             "c": list(cls.c), "betti_candidates": list(cls.betti_candidates)},
            indent=2,
        )
    degrees = ",".join(str(d) for d in cls.betti_candidates)
    return f"{cls.describe()}, degrees {degrees}\n"


def cmd_lambda(args) -> str:
    omega = [int(t) for t in args.omega.split(",") if t.strip()] if args.omega else []
    lam = lambda_matrix(args.entries, omega)
    if args.format == "json":
        return json.dumps(
            {"T": list(lam.T.rows[0]), "omega": sorted(lam.omega),
             "matrix": [list(r) for r in lam.matrix.rows]},
            indent=2,
        )
    return lam.matrix.to_text()


def cmd_genlaw(args) -> str:
    try:
        raw = json.loads(Path(args.spec).read_text())
        spec = GenLawrenceSpec(
            T=tuple(raw["T"]),
            c_vectors=tuple(tuple(c) for c in raw["c"]),
            lambda_vectors=tuple(tuple(l) for l in raw["lambda"]) if raw.get("lambda") else None,
        )
    except (OSError, ValueError, KeyError, TypeError) as exc:
        raise UsageError(f"cannot read spec from {args.spec}: {exc}") from exc
    built = build_gen_lawrence(spec, check_hypothesis=not args.skip_hypothesis,
                               budget=_budget(args))
    verdict = None
    if args.verify:
        verdict = is_strongly_robust(built.matrix, budget=_budget(args)).strongly_robust
    if args.format == "json":
        payload = {"matrix": [list(r) for r in built.matrix.rows],
                   "p": built.matrix.nrows, "q": built.matrix.ncols}
        if verdict is not None:
            payload["strongly_robust"] = verdict
        return json.dumps(payload, indent=2)
    text = built.matrix.to_text()
    if verdict is not None:
        text += f"strongly_robust: {str(verdict).lower()}\n"
    return text


def cmd_reconstruct(args) -> str:
    A = _load(args)
    rec = reconstruct_gen_lawrence(A, budget=_budget(args))
    if args.format == "json":
        return json.dumps(
            {
                "T": list(rec.spec.T),
                "c": [list(c) for c in rec.spec.c_vectors],
                "lambda": [list(l) for l in rec.spec.resolved_lambdas()],
                "matrix": [list(r) for r in rec.matrix.rows],
                "permutation": list(rec.column_permutation),
            },
            indent=2,
        )
    lines = [rec.matrix.to_text().rstrip(),
             "permutation: " + " ".join(str(p) for p in rec.column_permutation),
             "T: " + " ".join(str(x) for x in rec.spec.T)]
    return "\n".join(lines) + "\n"


def cmd_search(args) -> str:
    report = sullivant_search(
        args.s, args.bound, sample_budget=args.samples, seed=args.seed, budget=_budget(args)
    )
    if args.format == "json":
        return json.dumps(report.to_dict(), indent=2)
    d = report.to_dict()
    lines = [
        f"instances: {d['instances']}",
        f"empty_complex: {d['empty_complex']}",
        f"one_vertex: {d['one_vertex']}",
        f"violations: {len(d['violations'])}",
        f"skipped: {len(d['skipped'])}",
        f"ok: {str(d['ok']).lower()}",
    ]
    for v in d["violations"]:
        lines.append(f"VIOLATION: {v}")
    return "\n".join(lines) + "\n"


def cmd_oracle(args) -> str:
    A = _load(args)
    box = args.box
    if args.mode == "kernel":
        vectors = tuple(sorted(kernel_points_in_box(A, box)))
    elif args.mode == "graver":
        vectors = graver_by_enumeration(A, box)
    else:
        vectors = indispensable_by_enumeration(A, box, args.wbox or box)
    if args.format == "json":
        return json.dumps(
            {"n": A.ncols, "box": box, "mode": args.mode,
             "count": len(vectors), "elements": vectors_to_json(vectors)},
            indent=2,
        )
    return format_vectors(vectors, A.ncols)


# ---------------------------------------------------------------------------

def _emit(args, text: str) -> None:
    if getattr(args, "out", None):
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")


def _emit_error(args, exc: Exception) -> None:
    if getattr(args, "format", "text") == "json":
        sys.stdout.write(
            json.dumps({"error": {"type": type(exc).__name__, "message": str(exc)}}) + "\n"
        )
    else:
        print(f"error: {exc}", file=sys.stderr)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        output = args.func(args)
    except (UsageError, ValueError) as exc:
        _emit_error(args, exc)
        return 2
    except BudgetExceededError as exc:
        _emit_error(args, exc)
        return 4
    except PreconditionError as exc:
        _emit_error(args, exc)
        return 3
    except GraverKitError as exc:
        _emit_error(args, exc)
        return 1
    _emit(args, output)
    return 0


if __name__ == "__main__":
    sys.exit(main())
