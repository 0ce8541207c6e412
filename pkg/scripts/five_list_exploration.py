#!/usr/bin/env python3
"""Probe how 5-color lists behave on full triangulations (outer face a
triangle).

Nothing here proves anything general: the engine only guarantees success
with 6-lists, so engine failures are retried exhaustively to sort real
infeasibility from mere greediness.  Prints a tally of colorable /
infeasible / engine-only-failure instances.
"""

import argparse
import random

from ntcolor import coloring as col
from ntcolor import generators, oracle, reducer


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--count", type=int, default=300)
    ap.add_argument("--max-n", type=int, default=12)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--pool", type=int, default=8)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    engine_ok = engine_rescued = infeasible = 0
    for _ in range(args.count):
        n = rng.randint(7, args.max_n)
        emb = generators.random_near_triangulation(3, n, rng.randint(0, 2 * n), rng.getrandbits(32))
        lists = col.random_lists(emb, 5, args.pool, random.Random(rng.getrandbits(32)))
        try:
            phi, _ = reducer.color_near_triangulation(emb, lists, explore=True)
            engine_ok += 1
            continue
        except reducer.ColoringFailed:
            pass
        if oracle.solve_list_r_dynamic(emb, lists, 3) is None:
            infeasible += 1
        else:
            engine_rescued += 1

    print(f"{args.count} triangulations, 5-lists from a pool of {args.pool}:")
    print(f"  engine succeeded        {engine_ok}")
    print(f"  solvable, engine missed {engine_rescued}")
    print(f"  proven infeasible       {infeasible}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
