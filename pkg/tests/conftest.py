import random

import pytest
from hypothesis import settings

from ntcolor import generators
from ntcolor.embedding import PlanarEmbedding

settings.register_profile("ci", max_examples=40, deadline=None, derandomize=True)
settings.load_profile("ci")


def small_corpus() -> list[PlanarEmbedding]:
    """Near-triangulations with at most 8 vertices, >= 200 of them."""
    graphs = []
    for n in range(3, 8):
        graphs.append(generators.wheel(n))
    for n in range(2, 8):
        graphs.append(generators.fan(n))
    for t in range(3, 9):
        for n in range(t, 9):
            for seed in range(4):
                graphs.append(generators.stacked(t, n, seed))
    for t in range(3, 9):
        for n in range(t, 9):
            for seed in range(3):
                for flips in (1, 2 * n):
                    graphs.append(generators.random_near_triangulation(t, n, flips, seed))
    assert all(g.n <= 8 for g in graphs)
    return graphs


@pytest.fixture(scope="session")
def corpus_small():
    graphs = small_corpus()
    assert len(graphs) >= 200
    return graphs


def random_spec_stream(master_seed: int, count: int, max_n: int, max_t: int = 10):
    """Deterministic stream of (t, n, flips, seed) tuples."""
    rng = random.Random(master_seed)
    for _ in range(count):
        t = rng.randint(3, max_t)
        n = rng.randint(max(t, 7), max_n)
        flips = rng.randint(0, 3 * n)
        yield t, n, flips, rng.getrandbits(32)
