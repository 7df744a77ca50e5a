"""Generator graph construction, join decomposition, faithfulness, degree laws."""

from __future__ import annotations

import pytest

from gengraph.cyclic import is_prime, totient
from gengraph.generator_graph import (
    build_generator_graph,
    check_degree_bounds,
    check_max_degree_bound,
    degree_by_formula,
    diameter_by_formula,
    generator_graph_dot,
    generator_graph_edge_list,
    is_faithful_edge,
    is_faithful_graph,
)
from gengraph.graphs import (
    bfs_distances,
    complete_graph,
    cycle_graph,
    diameter,
    from_edges,
    join,
    null_graph,
)


def triangle_with_pendant():
    # triangle 0-1-2 plus pendant edge 2-3; max degree 3 of 4 vertices
    return from_edges(4, [(0, 1), (1, 2), (0, 2), (2, 3)])


class TestBuild:
    def test_z4_structure(self):
        gg = build_generator_graph(4)
        assert gg.element_of == (1, 3, 0, 2)
        assert gg.graph.edge_count == 5
        assert sorted(gg.graph.edges()) == [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]
        assert [gg.index_of[e] for e in gg.element_of] == [0, 1, 2, 3]

    def test_prime_gives_complete(self):
        assert build_generator_graph(5).graph == complete_graph(5)
        assert build_generator_graph(2).graph == complete_graph(2)

    @pytest.mark.parametrize("n", [1, 0, -3])
    def test_trivial_rejected(self, n):
        with pytest.raises(ValueError, match="trivial group excluded"):
            build_generator_graph(n)

    def test_join_decomposition_structural_equality(self):
        for n in range(2, 101):
            gg = build_generator_graph(n)
            s = gg.group.generator_count
            assert gg.graph == join(complete_graph(s), null_graph(n - s)), n

    def test_labeling_blocks(self):
        gg = build_generator_graph(12)
        gens = {gg.element_of[v] for v in gg.generator_vertices}
        assert gens == {1, 5, 7, 11}
        non = [gg.element_of[v] for v in gg.non_generator_vertices]
        assert non == sorted(non)

    def test_edge_count_formula(self):
        for n in range(2, 101):
            gg = build_generator_graph(n)
            s = gg.group.generator_count
            assert gg.graph.edge_count == s * (s - 1) // 2 + s * (n - s), n

    def test_complete_iff_prime(self):
        for n in range(2, 101):
            g = build_generator_graph(n).graph
            complete = g.edge_count == n * (n - 1) // 2
            assert complete == is_prime(n), n


class TestDegrees:
    @pytest.mark.parametrize("n,element,expected", [(6, 5, 5), (6, 4, 2), (3, 0, 2), (4, 1, 3)])
    def test_formula_values(self, n, element, expected):
        assert degree_by_formula(build_generator_graph(n), element) == expected

    def test_out_of_range_rejected(self):
        gg = build_generator_graph(6)
        with pytest.raises(ValueError):
            degree_by_formula(gg, 6)
        with pytest.raises(ValueError):
            degree_by_formula(gg, -1)

    def test_formula_matches_graph_degree(self):
        for n in range(2, 61):
            gg = build_generator_graph(n)
            for element in range(n):
                assert degree_by_formula(gg, element) == gg.graph.degree(gg.index_of[element])

    def test_degree_multiset(self):
        for n in range(2, 101):
            gg = build_generator_graph(n)
            s = gg.group.generator_count
            assert sorted(gg.graph.degrees().tolist()) == sorted([n - 1] * s + [s] * (n - s))

    def test_max_degree_is_at_least_half(self):
        for n in range(2, 101):
            g = build_generator_graph(n).graph
            assert 2 * g.max_degree() >= n

    def test_check_degree_bounds(self):
        for n in (3, 4, 12, 30):
            assert check_degree_bounds(n)
        with pytest.raises(ValueError):
            check_degree_bounds(2)


class TestFaithfulness:
    def test_generator_graphs_are_faithful(self):
        for n in range(2, 101):
            report = is_faithful_graph(build_generator_graph(n).graph)
            assert report.is_faithful and not report.vacuous, n

    def test_complete_graph_every_edge_faithful(self):
        k4 = complete_graph(4)
        for u, v in k4.edges():
            assert is_faithful_edge(k4, u, v)

    def test_c5_not_faithful_no_faithful_edge(self):
        c5 = cycle_graph(5)
        report = is_faithful_graph(c5)
        assert not report.is_faithful
        assert report.witness_edge is not None
        for u, v in c5.edges():
            assert not is_faithful_edge(c5, u, v)

    def test_c5_witness_is_genuine(self):
        c5 = cycle_graph(5)
        report = is_faithful_graph(c5)
        x, y = report.witness_edge
        z = report.witness_missing_vertex
        assert c5.has_edge(x, y)
        assert z not in (x, y)
        assert not c5.has_edge(z, x) and not c5.has_edge(z, y)

    def test_triangle_with_pendant_counterexample(self):
        # passes both necessary conditions yet is not faithful
        g = triangle_with_pendant()
        assert check_max_degree_bound(g)
        assert diameter(g) == 2
        report = is_faithful_graph(g)
        assert not report.is_faithful
        assert report.witness_edge == (0, 1)
        assert report.witness_missing_vertex == 3
        assert is_faithful_edge(g, 1, 2)  # the other triangle edges do cover

    def test_edgeless_vacuous(self):
        report = is_faithful_graph(null_graph(3))
        assert report.is_faithful and report.vacuous
        assert report.witness_edge is None

    def test_non_edge_rejected(self):
        with pytest.raises(ValueError):
            is_faithful_edge(null_graph(2), 0, 1)

    def test_faithful_implies_small_diameter_on_corpus(self, corpus):
        faithful_count = 0
        for g in corpus:
            report = is_faithful_graph(g)
            assert not report.vacuous  # corpus excludes edgeless draws
            if report.is_faithful:
                faithful_count += 1
                assert diameter(g) in (1, 2)
                assert check_max_degree_bound(g)
        assert faithful_count > 0  # implication must not hold vacuously

    def test_witness_agrees_with_edge_check_on_corpus(self, corpus):
        for g in corpus[:40]:
            report = is_faithful_graph(g)
            edge_verdicts = [is_faithful_edge(g, u, v) for u, v in g.edges()]
            assert report.is_faithful == all(edge_verdicts)
            if not report.is_faithful:
                x, y = report.witness_edge
                assert not is_faithful_edge(g, x, y)


class TestDiameterFormula:
    @pytest.mark.parametrize("n,expected", [(2, 1), (4, 2), (7, 1), (9, 2)])
    def test_frozen_values(self, n, expected):
        assert diameter_by_formula(n) == expected

    def test_rejects_trivial(self):
        with pytest.raises(ValueError):
            diameter_by_formula(1)

    def test_matches_bfs(self):
        for n in range(2, 101):
            assert diameter(build_generator_graph(n).graph) == diameter_by_formula(n), n


class TestMaxDegreeBound:
    def test_generator_graph_passes(self):
        assert check_max_degree_bound(build_generator_graph(6).graph)

    def test_c5_fails(self):
        assert not check_max_degree_bound(cycle_graph(5))


class TestExports:
    def test_dot_marks_generators(self):
        dot = generator_graph_dot(build_generator_graph(3))
        assert dot.count("generator=true") == 2
        assert dot.count("generator=false") == 1

    def test_dot_labels_carry_elements(self):
        dot = generator_graph_dot(build_generator_graph(4))
        for element in range(4):
            assert f"label={element}" in dot or f'label="{element}"' in dot

    def test_edge_list_z4(self):
        text = generator_graph_edge_list(build_generator_graph(4))
        assert text == "0 1\n0 2\n0 3\n1 2\n1 3\n"

    def test_edge_list_z2(self):
        assert generator_graph_edge_list(build_generator_graph(2)) == "0 1\n"

    def test_exports_deterministic(self):
        assert generator_graph_dot(build_generator_graph(12)) == generator_graph_dot(
            build_generator_graph(12)
        )


def test_diameter_via_distances_matches_formula_spotcheck():
    gg = build_generator_graph(8)
    dm = bfs_distances(gg.graph)
    assert dm.connected
    assert int(dm.entries.max()) == 2
    assert totient(8) == 4
