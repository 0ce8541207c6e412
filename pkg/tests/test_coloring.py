import pytest
from hypothesis import given
from hypothesis import strategies as st

from ntcolor import coloring as col
from ntcolor import generators, oracle
from ntcolor.embedding import PlanarEmbedding


W5 = generators.wheel(5)
K4 = generators.wheel(3)


class TestIsProper:
    def test_rainbow_k4(self):
        assert col.is_proper(K4, {0: 1, 1: 2, 2: 3, 3: 4})

    def test_monochromatic_edge(self):
        assert not col.is_proper(K4, {0: 1, 1: 1, 2: 3, 3: 4})

    def test_w5_hand_coloring(self):
        # hub 1, rim 2 3 2 3 4: all ten edges bichromatic
        assert col.is_proper(W5, {0: 2, 1: 3, 2: 2, 3: 3, 4: 4, 5: 1})

    def test_partial_coloring_rejected(self):
        with pytest.raises(col.PartialColoring):
            col.is_proper(K4, {0: 1, 1: 2})


class TestIsRDynamic:
    def test_rainbow_k4(self):
        assert col.is_r_dynamic(K4, {0: 1, 1: 2, 2: 3, 3: 4}, 3)

    def test_w5_hand_coloring_fails(self):
        # the rim vertex colored 3 sees only {hub 1, rim 2, rim 2}
        phi = {0: 2, 1: 3, 2: 2, 3: 3, 4: 4, 5: 1}
        assert not col.is_r_dynamic(W5, phi, 3)

    def test_rainbow_satisfies_any_r(self):
        emb = generators.fan(5)
        phi = {v: i + 1 for i, v in enumerate(emb.vertices)}
        for r in range(1, 8):
            assert col.is_r_dynamic(emb, phi, r)

    def test_improper_rejected(self):
        with pytest.raises(col.NotProper):
            col.is_r_dynamic(K4, {0: 1, 1: 1, 2: 2, 3: 3}, 2)

    @given(st.integers(3, 8), st.integers(0, 16), st.integers(0, 2**32 - 1), st.integers(2, 6))
    def test_monotone_in_r(self, t, extra, seed, r):
        emb = generators.random_near_triangulation(t, t + extra, extra, seed)
        phi = oracle.solve_list_r_dynamic(emb, col.uniform_lists(emb, 6), r)
        if phi is None:
            return
        for smaller in range(1, r):
            assert col.is_r_dynamic(emb, phi, smaller)


class TestRespectsLists:
    def test_uniform_ok(self):
        phi = {0: 1, 1: 2, 2: 3, 3: 4}
        assert col.respects_lists(phi, col.uniform_lists(K4, 6))

    def test_color_outside_list(self):
        lists = col.uniform_lists(K4, 6)
        assert not col.respects_lists({0: 7, 1: 2, 2: 3, 3: 4}, lists)

    def test_empty_graph_vacuous(self):
        assert col.respects_lists({}, {})


class TestValidExtensions:
    def test_k4_missing_vertex(self):
        lists = col.uniform_lists(K4, 6)
        assert col.valid_extensions(K4, {0: 1, 1: 2, 2: 3}, 3, lists, 3) == {4, 5, 6}

    def test_w5_hub_single_option(self):
        lists = col.uniform_lists(W5, 6)
        phi = {i: i + 1 for i in range(5)}
        assert col.valid_extensions(W5, phi, 5, lists, 3) == {6}

    def test_unblocked_vertex_gets_list_minus_neighbor_colors(self):
        emb = generators.fan(5)  # extend apex over a rainbow path
        phi = {i: i + 1 for i in range(5)}
        lists = col.uniform_lists(emb, 8)
        assert col.valid_extensions(emb, phi, 5, lists, 3) == {6, 7, 8}

    def test_empty_result_is_legal(self):
        lists = {v: frozenset({1, 2, 3}) for v in K4.vertices}
        assert col.valid_extensions(K4, {0: 1, 1: 2, 2: 3}, 3, lists, 3) == set()

    @given(st.integers(3, 7), st.integers(0, 10), st.integers(0, 2**32 - 1))
    def test_membership_matches_full_verification(self, t, extra, seed):
        emb = generators.random_near_triangulation(t, t + extra, extra, seed)
        lists = col.uniform_lists(emb, 6)
        phi = oracle.solve_list_r_dynamic(emb, lists, 3)
        assert phi is not None
        v = emb.vertices[seed % emb.n]
        partial = {u: c for u, c in phi.items() if u != v}
        options = col.valid_extensions(emb, partial, v, lists, 3)
        for c in lists[v]:
            full = dict(partial)
            full[v] = c
            ok = col.is_proper(emb, full) and col.find_dynamic_violation(emb, full, 3) is None
            assert (c in options) == ok


class TestSquareGraph:
    def test_square_of_c5_is_complete(self):
        c5 = PlanarEmbedding(
            {i: ((i + 1) % 5, (i - 1) % 5) for i in range(5)}, tuple(range(5))
        )
        adj = col.square_adjacency(c5)
        assert all(len(adj[v]) == 4 for v in adj)

    @given(st.integers(3, 7), st.integers(0, 8), st.integers(0, 2**32 - 1))
    def test_max_degree_dynamic_equals_square_proper(self, t, extra, seed):
        emb = generators.random_near_triangulation(t, t + extra, extra, seed)
        delta = max(emb.degree(v) for v in emb.vertices)
        phi = oracle.solve_list_r_dynamic(emb, col.uniform_lists(emb, emb.n), delta)
        assert phi is not None
        adj = col.square_adjacency(emb)
        square_proper = all(phi[v] != phi[u] for v in adj for u in adj[v])
        assert col.is_r_dynamic(emb, phi, delta) and square_proper


class TestListConstruction:
    def test_random_lists_are_seeded_subsets(self):
        import random

        a = col.random_lists(W5, 6, 40, random.Random(5))
        b = col.random_lists(W5, 6, 40, random.Random(5))
        assert a == b
        assert all(len(s) == 6 and max(s) <= 40 and min(s) >= 1 for s in a.values())

    def test_documents_roundtrip(self):
        import random

        lists = col.random_lists(W5, 6, 40, random.Random(1))
        doc = col.lists_to_document(W5, lists)
        assert col.lists_from_document(doc, W5) == lists
        phi = {v: min(lists[v]) for v in W5.vertices}
        assert col.coloring_from_document(col.coloring_to_document(W5, phi), W5) == phi
