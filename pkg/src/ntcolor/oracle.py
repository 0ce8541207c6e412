"""Exact brute-force solvers for small instances.

These searches are the ground truth the reduction engine is checked
against.  They are complete: a None answer (without BudgetExhausted)
means the whole search space was refuted.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from typing import AbstractSet, Mapping

from . import coloring as col
from .embedding import PlanarEmbedding


class BudgetExhausted(Exception):
    """Search ran out of nodes or time before finishing."""


class ListTooSmall(Exception):
    pass


@dataclass(frozen=True)
class SearchBudget:
    node_limit: int = 20_000_000
    time_limit: float = 120.0


DEFAULT_BUDGET = SearchBudget()


class _Search:
    """Backtracking over vertices, most-constrained-first.

    Pruning: a candidate color must be proper against colored neighbors,
    and after each assignment every affected vertex must still be able to
    reach min(r, deg) neighbor colors even if all its uncolored neighbors
    were to receive fresh colors.  The latter test is exact once a
    neighborhood is fully colored.
    """

    def __init__(self, emb, lists, r, budget):
        self.adj = {v: emb.rotation[v] for v in emb.vertices}
        self.lists = {v: sorted(lists[v]) for v in self.adj}
        self.r = r
        self.budget = budget
        self.phi: dict[int, int] = {}
        self.nodes = 0
        self.t0 = time.monotonic()

    def _feasible_at(self, u: int) -> bool:
        need = min(self.r, len(self.adj[u]))
        seen = set()
        free = 0
        for x in self.adj[u]:
            c = self.phi.get(x)
            if c is None:
                free += 1
            else:
                seen.add(c)
        return len(seen) + free >= need

    def _pick(self) -> int | None:
        best, best_count = None, None
        for v in self.adj:
            if v in self.phi:
                continue
            allowed = sum(
                1
                for c in self.lists[v]
                if all(self.phi.get(u) != c for u in self.adj[v])
            )
            if best_count is None or allowed < best_count:
                best, best_count = v, allowed
        return best

    def run(self) -> dict[int, int] | None:
        if len(self.phi) == len(self.adj):
            return dict(self.phi)
        v = self._pick()
        for c in self.lists[v]:
            if any(self.phi.get(u) == c for u in self.adj[v]):
                continue
            self.nodes += 1
            if self.nodes > self.budget.node_limit:
                raise BudgetExhausted(f"node limit {self.budget.node_limit} hit")
            if self.nodes % 1024 == 0 and time.monotonic() - self.t0 > self.budget.time_limit:
                raise BudgetExhausted(f"time limit {self.budget.time_limit}s hit")
            self.phi[v] = c
            if self._feasible_at(v) and all(self._feasible_at(u) for u in self.adj[v]):
                found = self.run()
                if found is not None:
                    return found
            del self.phi[v]
        return None


def solve_list_r_dynamic(
    emb: PlanarEmbedding,
    lists: Mapping[int, AbstractSet[int]],
    r: int,
    budget: SearchBudget = DEFAULT_BUDGET,
    stats: dict | None = None,
) -> col.Coloring | None:
    """Find an r-dynamic coloring drawing each color from its vertex list,
    or prove none exists.  Raises BudgetExhausted when inconclusive."""
    search = _Search(emb, lists, r, budget)
    t0 = time.monotonic()
    found = search.run()
    if stats is not None:
        stats["nodes"] = search.nodes
        stats["elapsed"] = time.monotonic() - t0
        stats["proven"] = True
    if found is not None:
        assert col.is_r_dynamic(emb, found, r) and col.respects_lists(found, lists)
    return found


def chi_r_dynamic(
    emb: PlanarEmbedding, r: int, budget: SearchBudget = DEFAULT_BUDGET
) -> int:
    """Least k admitting an r-dynamic coloring with colors {1..k}.

    Colors are interchangeable under uniform lists, so the first vertex is
    pinned to color 1 as a symmetry break.  A rainbow coloring always
    works at k = n, so the upward search terminates.
    """
    if emb.n == 0:
        return 0
    v0 = emb.vertices[0]
    for k in range(1, emb.n + 1):
        lists = col.uniform_lists(emb, k)
        lists[v0] = frozenset({1})
        if solve_list_r_dynamic(emb, lists, r, budget) is not None:
            return k
    raise AssertionError("unreachable: rainbow coloring exists at k = n")


def rainbow_greedy(
    emb: PlanarEmbedding, lists: Mapping[int, AbstractSet[int]]
) -> col.Coloring:
    """All-distinct list coloring, smallest color first.

    With every list at least as large as the graph, giving each vertex a
    globally unused color always succeeds, and the result is r-dynamic
    for every r since every neighborhood is rainbow.
    """
    n = emb.n
    short = [v for v in emb.vertices if len(lists[v]) < n]
    if short:
        raise ListTooSmall(f"lists at {short[:5]} smaller than n={n}")
    phi = {}
    used = set()
    for v in emb.vertices:
        c = min(lists[v] - used)
        phi[v] = c
        used.add(c)
    return phi


def adversarial_search(
    emb: PlanarEmbedding,
    k: int,
    r: int,
    budget: SearchBudget = DEFAULT_BUDGET,
    seed: int = 0,
) -> col.ListAssignment | None:
    """Look for a k-list assignment admitting no r-dynamic coloring.

    Tries the uniform assignment first, then seeded random k-subsets from
    small pools.  Incomplete by design: None proves nothing, while a
    returned assignment comes with a completed exhaustive refutation.
    """
    if k < 1:
        raise ValueError("k must be positive")
    rng = random.Random(seed)
    t0 = time.monotonic()

    def candidates():
        yield col.uniform_lists(emb, k)
        while True:
            pool = rng.randint(k, 2 * k)
            yield {
                v: frozenset(rng.sample(range(1, pool + 1), k))
                for v in sorted(emb.rotation)
            }

    for lists in candidates():
        if time.monotonic() - t0 > budget.time_limit:
            return None
        try:
            if solve_list_r_dynamic(emb, lists, r, budget) is None:
                return dict(lists)
        except BudgetExhausted:
            return None
    return None


def proper_chromatic_number(adj: Mapping[int, AbstractSet[int]]) -> int:
    """Chromatic number of an abstract graph by branch-and-bound.

    Used to compare against dynamic chromatic numbers of square graphs;
    intended for graphs of a dozen or so vertices.
    """
    order = sorted(adj, key=lambda v: -len(adj[v]))
    n = len(order)
    if n == 0:
        return 0

    def colorable(k: int) -> bool:
        phi: dict[int, int] = {}

        def step(i: int, used: int) -> bool:
            if i == n:
                return True
            v = order[i]
            taken = {phi[u] for u in adj[v] if u in phi}
            for c in range(1, min(used + 1, k) + 1):  # at most one fresh color
                if c in taken:
                    continue
                phi[v] = c
                if step(i + 1, max(used, c)):
                    return True
                del phi[v]
            return False

        return step(0, 0)

    for k in range(1, n + 1):
        if colorable(k):
            return k
    return n
