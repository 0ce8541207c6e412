#!/usr/bin/env python3
"""Census of reduction cases and forbidden-color counts over a seeded sweep.

Colors every graph from fresh random 6-lists, verifies each output, and
tallies which local configuration fired at every step.
"""

import argparse
import random
import time
from collections import Counter

from ntcolor import coloring as col
from ntcolor import generators, reducer


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--count", type=int, default=1000)
    ap.add_argument("--max-n", type=int, default=80)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--pool", type=int, default=40)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    cases = Counter()
    forbidden = Counter()
    t0 = time.monotonic()
    for _ in range(args.count):
        t = rng.randint(3, 10)
        n = rng.randint(max(t, 7), args.max_n)
        emb = generators.random_near_triangulation(t, n, rng.randint(0, 3 * n), rng.getrandbits(32))
        lists = col.random_lists(emb, 6, args.pool, random.Random(rng.getrandbits(32)))
        phi, trace = reducer.color_near_triangulation(emb, lists)
        assert col.is_r_dynamic(emb, phi, 3) and col.respects_lists(phi, lists)
        cases.update(step.config.case.value for step in trace.steps)
        forbidden.update(trace.forbidden_counts)
    elapsed = time.monotonic() - t0

    total = sum(cases.values())
    print(f"{args.count} graphs, {total} reduction steps, {elapsed:.1f}s\n")
    print(f"{'case':24} {'count':>8} {'share':>7}")
    for case, cnt in cases.most_common():
        print(f"{case:24} {cnt:>8} {cnt / total:>6.1%}")
    print("\nforbidden colors at extension (max allowed is 5):")
    for k in sorted(forbidden):
        print(f"  {k}: {forbidden[k]}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
