"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with `pytest tests/test_acceptance.py -v -s` to see the lines live.
"""

import json
import random
import time

import pytest

from conftest import random_spec_stream
from ntcolor import cli
from ntcolor import coloring as col
from ntcolor import generators, oracle, reducer
from ntcolor.embedding import boundary_stats, to_document

MASTER_SEED = 20260808


def _criterion(name: str, ok: bool, detail: str = "") -> None:
    print(f"\n[ACCEPTANCE] {name}: {'PASS' if ok else 'FAIL'} {detail}".rstrip())
    assert ok, f"{name} failed: {detail}"


@pytest.fixture(scope="session")
def desk_run():
    """500 seeded random near-triangulations with fresh random 6-lists."""
    rng = random.Random(MASTER_SEED)
    results = []
    t0 = time.monotonic()
    for t, n, flips, seed in random_spec_stream(MASTER_SEED, count=500, max_n=200):
        emb = generators.random_near_triangulation(t, n, flips, seed)
        lists = col.random_lists(emb, 6, 40, random.Random(rng.getrandbits(32)))
        try:
            phi, trace = reducer.color_near_triangulation(emb, lists, 3)
            verified = (
                col.is_proper(emb, phi)
                and col.is_r_dynamic(emb, phi, 3)
                and col.respects_lists(phi, lists)
            )
        except Exception:
            verified, trace = False, None
        results.append(
            {
                "spec": (t, n, flips, seed),
                "verified": verified,
                "max_forbidden": max(trace.forbidden_counts, default=0) if trace else None,
            }
        )
    return {"elapsed": time.monotonic() - t0, "results": results}


def test_bulk_six_list_coloring(desk_run):
    failures = [r["spec"] for r in desk_run["results"] if not r["verified"]]
    elapsed = desk_run["elapsed"]
    _criterion(
        "bulk-six-list-coloring",
        not failures and elapsed < 60.0,
        f"500 graphs, {len(failures)} failures, {elapsed:.1f}s",
    )


def test_forbidden_set_bound(desk_run):
    worst = max(r["max_forbidden"] for r in desk_run["results"])
    violations = sum(
        1 for r in desk_run["results"] if r["max_forbidden"] is None or r["max_forbidden"] > 5
    )
    _criterion(
        "forbidden-set-bound",
        violations == 0,
        f"max forbidden colors observed = {worst} (bound 5)",
    )


def test_w5_needs_exactly_six_colors():
    w5 = generators.wheel(5)
    t0 = time.monotonic()
    value = oracle.chi_r_dynamic(w5, 3)
    refuted = oracle.solve_list_r_dynamic(w5, col.uniform_lists(w5, 5), 3) is None
    elapsed = time.monotonic() - t0
    _criterion(
        "w5-needs-exactly-six-colors",
        value == 6 and refuted and elapsed < 1.0,
        f"chi_3^d(W5)={value}, uniform-5 refuted={refuted}, {elapsed:.3f}s",
    )


def test_wheels_upper_bound():
    bad = []
    for n in range(3, 11):
        emb = generators.wheel(n)
        lists = col.uniform_lists(emb, 6)
        phi, _ = reducer.color_near_triangulation(emb, lists, 3)
        if not (
            col.is_proper(emb, phi)
            and col.is_r_dynamic(emb, phi, 3)
            and col.respects_lists(phi, lists)
        ):
            bad.append(n)
    _criterion("wheels-upper-bound", not bad, f"wheel sizes 3..10, failures: {bad}")


def test_counting_guarantee():
    checked = 0
    cases_seen = set()
    bad = []
    for t, n, flips, seed in random_spec_stream(MASTER_SEED + 1, count=10_000, max_n=26):
        emb = generators.random_near_triangulation(t, n, flips, seed)
        current = emb
        try:
            while True:
                stats = boundary_stats(current)
                checked += 1
                if stats.edge_count != 2 * stats.boundary_len + 3 * stats.interior_count - 3:
                    raise AssertionError(f"edge formula at n={current.n}")
                if current.n <= 6:
                    break
                cfg = reducer.find_reducible(current)
                cases_seen.add(cfg.case)
                current, _ = reducer.apply_reduction(current, cfg)
        except Exception as exc:
            bad.append(((t, n, flips, seed), str(exc)))
    coverage = cases_seen == set(reducer.ReductionCase)
    _criterion(
        "counting-guarantee",
        not bad and coverage,
        f"10000 graphs, {checked} graphs+intermediates checked, "
        f"{len(cases_seen)}/6 cases seen, failures: {bad[:3]}",
    )


def test_oracle_engine_agreement(corpus_small):
    rng = random.Random(MASTER_SEED + 2)
    graphs = 0
    bad = []
    for emb in corpus_small:
        graphs += 1
        for _ in range(20):
            lists = col.random_lists(emb, 6, 40, random.Random(rng.getrandbits(32)))
            phi_engine, _ = reducer.color_near_triangulation(emb, lists, 3)
            engine_ok = col.is_r_dynamic(emb, phi_engine, 3) and col.respects_lists(
                phi_engine, lists
            )
            oracle_phi = oracle.solve_list_r_dynamic(emb, lists, 3)
            if not engine_ok or oracle_phi is None:
                bad.append(to_document(emb))
    _criterion(
        "oracle-engine-agreement",
        graphs >= 200 and not bad,
        f"{graphs} graphs x 20 list assignments, disagreements: {len(bad)}",
    )


def test_full_triangulations_need_at_most_five(corpus_small):
    # graphs whose outer face is also a triangle: chi_3^d stays below the
    # six-list guarantee
    t0 = time.monotonic()
    seen = set()
    values = []
    for emb in corpus_small:
        if len(emb.outer_face) != 3:
            continue
        key = json.dumps(to_document(emb), sort_keys=True)
        if key in seen:
            continue
        seen.add(key)
        values.append(oracle.chi_r_dynamic(emb, 3))
    elapsed = time.monotonic() - t0
    _criterion(
        "triangulation-five-color-bound",
        bool(values) and max(values) <= 5 and elapsed < 300.0,
        f"{len(values)} distinct triangulations, max chi_3^d = {max(values)}, {elapsed:.1f}s",
    )


def test_chain_property(corpus_small):
    seen = set()
    bad = []
    graphs = 0
    for emb in corpus_small:
        key = json.dumps(to_document(emb), sort_keys=True)
        if key in seen:
            continue
        seen.add(key)
        graphs += 1
        delta = max(emb.degree(v) for v in emb.vertices)
        values = [oracle.chi_r_dynamic(emb, r) for r in range(1, delta + 1)]
        if values != sorted(values):
            bad.append(("not monotone", key))
        square_chi = oracle.proper_chromatic_number(col.square_adjacency(emb))
        if values[-1] != square_chi:
            bad.append(("square mismatch", key))
    _criterion(
        "chain-property",
        not bad,
        f"{graphs} distinct graphs, violations: {len(bad)}",
    )


def test_reproducibility(tmp_path, monkeypatch):
    blobs = []
    for tag in ("first", "second"):
        d = tmp_path / tag
        d.mkdir()
        monkeypatch.chdir(d)
        assert cli.main(
            ["gen", "--family", "random_nt", "--t", "6", "--n", "60", "--flips", "180",
             "--seed", "42", "--out", "g.json"]
        ) == 0
        assert cli.main(
            ["color", "g.json", "--random-lists", "6", "--pool", "40", "--seed", "9",
             "--out-coloring", "c.json", "--out-trace", "t.json", "--report", "cr.json"]
        ) == 0
        assert cli.main(
            ["stress", "--count", "20", "--max-n", "50", "--seed", "5", "--report", "sr.json"]
        ) == 0
        blobs.append(
            tuple((d / f).read_bytes() for f in ("g.json", "c.json", "t.json", "cr.json", "sr.json"))
        )
    _criterion(
        "reproducibility",
        blobs[0] == blobs[1],
        "graph, coloring, trace and reports byte-identical across two runs",
    )
