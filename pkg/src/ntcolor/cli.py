"""Command-line driver: generate graphs, color them, verify, measure, stress.

Exit codes: 0 success, 1 verification or guarantee violation, 2 usage or
parse error, 3 precondition failure, 4 exploration-mode infeasibility.  Every
emitted coloring is re-verified through the coloring module before the
process exits 0.  Runs are replayable from (command, seed): the NT_SEED
environment variable overrides --seed when present, and reports embed
the command line and seed.  Timing numbers go to stderr; they are only
embedded in report files under --timings so that identical runs produce
byte-identical reports.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import random
import sys
import time
from pathlib import Path

from . import coloring as col
from . import generators, oracle, reducer
from .embedding import (
    MalformedEmbedding,
    PlanarEmbedding,
    boundary_stats,
    from_document,
    is_near_triangulation,
    to_document,
    to_dot,
)

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2
EXIT_PRECONDITION = 3
EXIT_INFEASIBLE = 4


def canonical_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


def sha256_of(obj) -> str:
    return hashlib.sha256(canonical_json(obj).encode()).hexdigest()


def _write(path: str, text: str) -> None:
    Path(path).write_text(text)


def _load_json(path: str):
    with open(path) as fh:
        return json.load(fh)


def _effective_seed(args) -> int:
    env = os.environ.get("NT_SEED")
    if env is not None:
        return int(env)
    return args.seed


def _write_report(args, report: dict) -> None:
    if getattr(args, "report", None):
        _write(args.report, canonical_json(report))


# -- gen -----------------------------------------------------------------------


def cmd_gen(args) -> int:
    seed = _effective_seed(args)
    seeded = args.family in ("stacked", "random_nt")
    spec = generators.GeneratorSpec(
        family=args.family,
        n=args.n,
        t=args.t if seeded else None,
        seed=seed if seeded else None,
        flips=args.flips if args.family == "random_nt" else None,
    )
    try:
        emb = generators.build(spec)
    except generators.InvalidParameter as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    doc = to_document(emb)
    _write(args.out, canonical_json(doc))
    if args.dot:
        _write(args.dot, to_dot(emb))
    if args.manifest:
        path = Path(args.manifest)
        entries = json.loads(path.read_text()) if path.exists() else []
        entries.append(generators.manifest_entry(spec, emb))
        _write(args.manifest, canonical_json(entries))
    print(f"wrote {args.out}: n={emb.n} sha256={sha256_of(doc)}")
    return EXIT_OK


# -- color ---------------------------------------------------------------------


def _resolve_lists(args, emb: PlanarEmbedding) -> col.ListAssignment:
    if args.lists:
        return col.lists_from_document(_load_json(args.lists), emb)
    if args.uniform:
        return col.uniform_lists(emb, args.uniform)
    rng = random.Random(_effective_seed(args))
    return col.random_lists(emb, args.random_lists, args.pool, rng)


def cmd_color(args) -> int:
    try:
        emb = from_document(_load_json(args.graph))
        lists = _resolve_lists(args, emb)
    except (OSError, json.JSONDecodeError, MalformedEmbedding, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE

    if not is_near_triangulation(emb):
        print("error: input graph is not a near-triangulation", file=sys.stderr)
        return EXIT_PRECONDITION
    if not args.explore and any(len(lists[v]) < 6 for v in emb.rotation):
        print("error: lists smaller than 6 need --explore", file=sys.stderr)
        return EXIT_PRECONDITION

    report = {
        "command": "color",
        "argv": args.raw_argv,
        "seed": _effective_seed(args),
        "input_digest": sha256_of(to_document(emb)),
        "r": args.r,
    }
    t0 = time.monotonic()
    engine_error = None
    try:
        phi, trace = reducer.color_near_triangulation(emb, lists, args.r, explore=args.explore)
    except reducer.ColoringFailed as exc:
        engine_error = str(exc)
        phi, trace = None, None
    elapsed = time.monotonic() - t0

    if phi is None:
        # exploration: ask the exhaustive solver for the ground truth
        budget = oracle.SearchBudget(node_limit=args.budget_nodes, time_limit=args.budget_seconds)
        try:
            found = oracle.solve_list_r_dynamic(emb, lists, args.r, budget)
        except oracle.BudgetExhausted:
            report.update(outcome="unknown", engine_error=engine_error, oracle="budget-exhausted")
            _write_report(args, report)
            print("engine failed; exhaustive search inconclusive", file=sys.stderr)
            return EXIT_INFEASIBLE
        if found is None:
            report.update(
                outcome="infeasible",
                engine_error=engine_error,
                oracle="proven-none",
                witness_lists=col.lists_to_document(emb, lists),
            )
            _write_report(args, report)
            print("no coloring exists for these lists (exhaustively proven)", file=sys.stderr)
            return EXIT_INFEASIBLE
        phi = found
        report["engine_error"] = engine_error
        report["oracle"] = "rescued"
        case_hist, max_forbidden = {}, None
    else:
        case_hist = trace.case_histogram()
        max_forbidden = max(trace.forbidden_counts, default=0)

    verdict = {
        "proper": col.is_proper(emb, phi),
        "r_dynamic": col.is_r_dynamic(emb, phi, args.r),
        "respects_lists": col.respects_lists(phi, lists),
        "distinct_colors": len(set(phi.values())),
    }
    if not all(verdict[k] for k in ("proper", "r_dynamic", "respects_lists")):
        print("error: produced coloring failed verification", file=sys.stderr)
        return EXIT_VIOLATION

    _write(args.out_coloring, canonical_json(col.coloring_to_document(emb, phi)))
    if args.out_trace:
        steps = reducer.trace_to_document(trace) if trace else []
        _write(args.out_trace, canonical_json(steps))
    report.update(
        outcome="success",
        verifier=verdict,
        statistics={
            "case_counts": case_hist,
            "max_forbidden": max_forbidden,
            "timings": {"color_seconds": elapsed} if args.timings else None,
        },
    )
    _write_report(args, report)
    print(
        f"colored n={emb.n} with {verdict['distinct_colors']} distinct colors; "
        f"verified proper, {args.r}-dynamic, lists respected",
    )
    print(f"engine time {elapsed:.3f}s", file=sys.stderr)
    return EXIT_OK


# -- verify --------------------------------------------------------------------


def cmd_verify(args) -> int:
    try:
        emb = from_document(_load_json(args.graph))
        phi = col.coloring_from_document(_load_json(args.coloring), emb)
        lists = (
            col.lists_from_document(_load_json(args.lists), emb) if args.lists else None
        )
    except (OSError, json.JSONDecodeError, MalformedEmbedding, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE

    bad_edge = col.find_proper_violation(emb, phi)
    if bad_edge is not None:
        print(f"NOT PROPER: edge {bad_edge[0]}-{bad_edge[1]} is monochromatic")
        return EXIT_VIOLATION
    bad_vertex = col.find_dynamic_violation(emb, phi, args.r)
    if bad_vertex is not None:
        seen = sorted({phi[u] for u in emb.rotation[bad_vertex]})
        print(
            f"NOT {args.r}-DYNAMIC: vertex {bad_vertex} sees colors {seen}, "
            f"needs {min(args.r, emb.degree(bad_vertex))}"
        )
        return EXIT_VIOLATION
    if lists is not None:
        bad = col.find_list_violation(phi, lists)
        if bad is not None:
            print(f"LIST VIOLATION: vertex {bad} colored {phi[bad]} outside its list")
            return EXIT_VIOLATION
    print(f"OK: proper, {args.r}-dynamic" + (", lists respected" if lists else ""))
    return EXIT_OK


# -- chi -----------------------------------------------------------------------


def cmd_chi(args) -> int:
    try:
        emb = from_document(_load_json(args.graph))
    except (OSError, json.JSONDecodeError, MalformedEmbedding) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if emb.n > args.cap:
        print(f"error: n={emb.n} exceeds cap {args.cap}", file=sys.stderr)
        return EXIT_USAGE
    budget = oracle.SearchBudget(node_limit=args.budget_nodes, time_limit=args.budget_seconds)
    try:
        value = oracle.chi_r_dynamic(emb, args.r, budget)
    except oracle.BudgetExhausted as exc:
        print(f"BudgetExhausted: {exc}")
        return EXIT_USAGE
    print(f"chi_{args.r}^d = {value}")
    return EXIT_OK


# -- stress --------------------------------------------------------------------


def cmd_stress(args) -> int:
    seed = _effective_seed(args)
    rng = random.Random(seed)
    failures = []
    case_hist: dict[str, int] = {}
    max_forbidden = 0
    t0 = time.monotonic()

    for i in range(args.count):
        t = rng.randint(args.min_t, args.max_t)
        n = rng.randint(max(t, 7), max(args.max_n, 7))
        flips = rng.randint(0, 3 * n)
        gseed = rng.getrandbits(32)
        lseed = rng.getrandbits(32)
        spec = {"t": t, "n": n, "flips": flips, "seed": gseed, "list_seed": lseed}
        try:
            emb = generators.random_near_triangulation(t, n, flips, gseed)
            lists = col.random_lists(emb, args.lists, args.pool, random.Random(lseed))
            phi, trace = reducer.color_near_triangulation(
                emb, lists, args.r, explore=args.explore
            )
            for step_emb in _intermediates(emb, trace):
                stats = boundary_stats(step_emb)  # raises unless near-triangulation
                if stats.edge_count != 2 * stats.boundary_len + 3 * stats.interior_count - 3:
                    raise AssertionError(f"edge formula broken: {stats}")
            if not (
                col.is_proper(emb, phi)
                and col.is_r_dynamic(emb, phi, args.r)
                and col.respects_lists(phi, lists)
            ):
                raise AssertionError("verifier rejected engine output")
            for case, cnt in trace.case_histogram().items():
                case_hist[case] = case_hist.get(case, 0) + cnt
            if trace.forbidden_counts:
                max_forbidden = max(max_forbidden, max(trace.forbidden_counts))
        except reducer.ColoringFailed as exc:
            failures.append({"spec": spec, "error": str(exc)})
            if not args.explore:
                break
        except Exception as exc:  # breakage is reported with its replay spec
            failures.append({"spec": spec, "error": f"{type(exc).__name__}: {exc}"})
            if not args.explore:
                break
    elapsed = time.monotonic() - t0

    report = {
        "command": "stress",
        "argv": args.raw_argv,
        "seed": seed,
        "count": args.count,
        "failures": failures,
        "statistics": {
            "case_counts": dict(sorted(case_hist.items())),
            "max_forbidden": max_forbidden,
            "timings": {"total_seconds": elapsed} if args.timings else None,
        },
    }
    _write_report(args, report)
    print(
        f"stress: {args.count} graphs, {len(failures)} failures, "
        f"max forbidden {max_forbidden}, cases {dict(sorted(case_hist.items()))}"
    )
    print(f"total time {elapsed:.2f}s", file=sys.stderr)
    if failures and not args.explore:
        print(f"first failing spec: {failures[0]['spec']}", file=sys.stderr)
        return EXIT_VIOLATION
    if max_forbidden > 5 and not args.explore:
        print("error: forbidden-color bound of 5 exceeded", file=sys.stderr)
        return EXIT_VIOLATION
    return EXIT_OK


def _intermediates(emb: PlanarEmbedding, trace: reducer.ReductionTrace):
    yield emb
    current = emb
    for step in trace.steps:
        current, _ = reducer.apply_reduction(current, step.config)
        yield current


# -- parser --------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="ntcolor", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="generate a graph document")
    g.add_argument("--family", required=True, choices=["wheel", "fan", "stacked", "random_nt"])
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--t", type=int, default=3)
    g.add_argument("--flips", type=int, default=0)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--out", default="graph.json")
    g.add_argument("--dot", default=None)
    g.add_argument("--manifest", default=None)
    g.set_defaults(func=cmd_gen)

    c = sub.add_parser("color", help="color a near-triangulation from lists")
    c.add_argument("graph")
    src = c.add_mutually_exclusive_group(required=True)
    src.add_argument("--lists", default=None, help="lists JSON file")
    src.add_argument("--uniform", type=int, default=None, help="uniform lists {1..k}")
    src.add_argument("--random-lists", type=int, default=None, help="random k-subsets")
    c.add_argument("--pool", type=int, default=40)
    c.add_argument("--seed", type=int, default=0)
    c.add_argument("--r", type=int, default=3)
    c.add_argument("--explore", action="store_true", help="allow lists smaller than 6")
    c.add_argument("--out-coloring", default="coloring.json")
    c.add_argument("--out-trace", default="trace.json")
    c.add_argument("--report", default=None)
    c.add_argument("--timings", action="store_true", help="embed timings in the report")
    c.add_argument("--budget-nodes", type=int, default=20_000_000)
    c.add_argument("--budget-seconds", type=float, default=120.0)
    c.set_defaults(func=cmd_color)

    v = sub.add_parser("verify", help="check a coloring against a graph")
    v.add_argument("graph")
    v.add_argument("coloring")
    v.add_argument("--r", type=int, default=3)
    v.add_argument("--lists", default=None)
    v.set_defaults(func=cmd_verify)

    x = sub.add_parser("chi", help="exact dynamic chromatic number (small graphs)")
    x.add_argument("graph")
    x.add_argument("--r", type=int, default=3)
    x.add_argument("--cap", type=int, default=12)
    x.add_argument("--budget-nodes", type=int, default=20_000_000)
    x.add_argument("--budget-seconds", type=float, default=300.0)
    x.set_defaults(func=cmd_chi)

    s = sub.add_parser("stress", help="batch color + verify random graphs")
    s.add_argument("--count", type=int, required=True)
    s.add_argument("--max-n", type=int, default=60)
    s.add_argument("--min-t", type=int, default=3)
    s.add_argument("--max-t", type=int, default=10)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--lists", type=int, default=6)
    s.add_argument("--pool", type=int, default=40)
    s.add_argument("--r", type=int, default=3)
    s.add_argument("--explore", action="store_true")
    s.add_argument("--report", default=None)
    s.add_argument("--timings", action="store_true")
    s.set_defaults(func=cmd_stress)

    return p


def main(argv=None) -> int:
    raw = list(argv) if argv is not None else sys.argv[1:]
    args = build_parser().parse_args(raw)
    args.raw_argv = raw
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
