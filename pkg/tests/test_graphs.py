"""Graph substrate: constructors, BFS distances, diameter, exports."""

from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gengraph.graphs import (
    UNREACHABLE,
    SimpleGraph,
    bfs_distances,
    bfs_from,
    complement,
    complete_graph,
    cycle_graph,
    diameter,
    from_edges,
    join,
    null_graph,
    random_graph,
    to_dot,
    to_edge_list,
)

from conftest import is_connected


class TestConstructors:
    def test_complete_graph(self):
        k5 = complete_graph(5)
        assert k5.vertex_count == 5
        assert k5.edge_count == 10
        assert k5.degrees().tolist() == [4] * 5

    def test_sizes_zero_and_one(self):
        assert complete_graph(0).edge_count == 0
        assert complete_graph(1).edge_count == 0
        assert null_graph(3).edge_count == 0

    def test_cycle(self):
        c5 = cycle_graph(5)
        assert c5.edge_count == 5
        assert c5.degrees().tolist() == [2] * 5
        with pytest.raises(ValueError):
            cycle_graph(2)

    def test_from_edges_validation(self):
        g = from_edges(3, [(0, 1), (1, 2)])
        assert g.edge_count == 2
        with pytest.raises(ValueError):
            from_edges(3, [(0, 0)])
        with pytest.raises(ValueError):
            from_edges(3, [(0, 3)])

    def test_adjacency_validation(self):
        with pytest.raises(ValueError):
            SimpleGraph(np.ones((2, 3), dtype=bool))
        with pytest.raises(ValueError):
            SimpleGraph(np.eye(3, dtype=bool))
        asym = np.zeros((2, 2), dtype=bool)
        asym[0, 1] = True
        with pytest.raises(ValueError):
            SimpleGraph(asym)

    def test_random_graph_probability_validation(self):
        rng = np.random.default_rng(0)
        with pytest.raises(ValueError):
            random_graph(4, 1.5, rng)


class TestJoin:
    def test_join_k2_null2_shape(self):
        g = join(complete_graph(2), null_graph(2))
        assert g.vertex_count == 4
        assert g.edge_count == 5

    def test_join_of_singletons_is_edge(self):
        assert join(null_graph(1), null_graph(1)) == complete_graph(2)

    def test_join_side_degree(self):
        g = join(complete_graph(2), null_graph(3))
        assert g.degree(0) == 4  # 1 inside K_2 plus 3 across

    @given(st.integers(min_value=0, max_value=50), st.integers(min_value=0, max_value=50),
           st.integers(min_value=0, max_value=2**32 - 1))
    @settings(max_examples=60)
    def test_join_counts(self, a, b, seed):
        rng = np.random.default_rng(seed)
        g1 = random_graph(a, 0.4, rng)
        g2 = random_graph(b, 0.4, rng)
        g = join(g1, g2)
        assert g.vertex_count == a + b
        assert g.edge_count == g1.edge_count + g2.edge_count + a * b

    def test_join_diameter_at_most_two(self, corpus):
        for g1, g2 in zip(corpus[:8], corpus[8:16]):
            assert diameter(join(g1, g2)) <= 2


class TestComplement:
    def test_involution(self, corpus):
        for g in corpus[:30]:
            assert complement(complement(g)) == g

    def test_c5_self_complementary_profile(self):
        comp = complement(cycle_graph(5))
        assert comp.vertex_count == 5
        assert comp.edge_count == 5
        assert comp.degrees().tolist() == [2] * 5
        assert diameter(comp) == 2


class TestBFS:
    def test_complete_distances(self):
        dm = bfs_distances(complete_graph(3))
        off = dm.entries[~np.eye(3, dtype=bool)]
        assert (off == 1).all()
        assert dm.entries.diagonal().tolist() == [0, 0, 0]

    def test_cycle_distances(self):
        dm = bfs_distances(cycle_graph(5))
        assert dm.distance(0, 1) == 1
        assert dm.distance(0, 2) == 2
        assert int(dm.entries.max()) == 2

    def test_unreachable_marker(self):
        dm = bfs_distances(null_graph(2))
        assert dm.distance(0, 1) == UNREACHABLE
        assert not dm.connected

    def test_single_source_matches_all_pairs(self, corpus):
        for g in corpus[:40]:
            dm = bfs_distances(g)
            for src in range(g.vertex_count):
                assert dm.entries[src].tolist() == bfs_from(g, src).tolist()

    def test_symmetry_and_triangle_inequality(self, connected_corpus):
        for g in connected_corpus[:25]:
            d = bfs_distances(g).entries
            assert (d == d.T).all()
            n = g.vertex_count
            for u in range(n):
                for v in range(n):
                    for w in range(n):
                        assert d[u, v] <= d[u, w] + d[w, v]

    def test_empty_graph(self):
        assert bfs_distances(null_graph(0)).entries.shape == (0, 0)


class TestDiameter:
    @pytest.mark.parametrize("n", [2, 3, 7])
    def test_complete(self, n):
        assert diameter(complete_graph(n)) == 1

    def test_cycle(self):
        assert diameter(cycle_graph(5)) == 2

    def test_disconnected_is_distinct_variant(self):
        assert diameter(null_graph(2)) is None
        assert diameter(null_graph(3)) is None

    def test_tiny(self):
        assert diameter(null_graph(1)) == 0
        assert diameter(null_graph(0)) == 0


class TestDegrees:
    def test_handshake(self, corpus):
        for g in corpus[:40]:
            assert int(g.degrees().sum()) == 2 * g.edge_count

    def test_degree_index_validation(self):
        g = complete_graph(3)
        with pytest.raises(ValueError):
            g.degree(3)
        with pytest.raises(ValueError):
            g.degree(-1)

    def test_max_degree(self):
        assert complete_graph(5).max_degree() == 4
        assert null_graph(0).max_degree() == 0


class TestExports:
    def test_edge_list_k3(self):
        assert to_edge_list(complete_graph(3)) == "0 1\n0 2\n1 2\n"

    def test_edge_list_empty(self):
        assert to_edge_list(null_graph(2)) == ""

    def test_edge_list_sorted(self, corpus):
        g = corpus[0]
        lines = to_edge_list(g).splitlines()
        pairs = [tuple(map(int, ln.split())) for ln in lines]
        assert pairs == sorted(pairs)
        assert all(u < v for u, v in pairs)

    def test_dot_structure(self):
        dot = to_dot(complete_graph(2), labels={0: "a", 1: "b"},
                     node_attrs={0: {"generator": "true"}})
        assert dot.startswith("graph G {")
        assert '0 [label="a" generator=true];' in dot
        assert "0 -- 1;" in dot
        assert dot == to_dot(complete_graph(2), labels={0: "a", 1: "b"},
                             node_attrs={0: {"generator": "true"}})


def test_connectivity_helper_consistency(corpus):
    for g in corpus[:30]:
        assert is_connected(g) == bfs_distances(g).connected
