import itertools

import pytest
from hypothesis import given, settings

from conftest import small_graphs
from pseudofactor.errors import CapacityError, FactorError
from pseudofactor.factor import (
    ComponentClass,
    PseudoFactor,
    factor_to_json_dict,
    factor_to_text,
    has_deg_range_spanning,
    is_2b_subgraph,
    spanning_in_range,
    validate_pseudo_factor,
)
from pseudofactor.generators import complete_graph, cycle_graph, gnp, path_graph
from pseudofactor.graph import Graph


def brute_force_feasible(g, s, b):
    """Degree-[2,b] spanning subgraph of G[s] by scanning all edge subsets."""
    verts = sorted(s)
    if len(verts) < 3:
        return False
    edges = [e for e in g.edges if e[0] in s and e[1] in s]
    assert len(edges) <= 18, "brute force oracle capped at 18 induced edges"
    for mask in range(1 << len(edges)):
        deg = dict.fromkeys(verts, 0)
        for i, (u, v) in enumerate(edges):
            if mask >> i & 1:
                deg[u] += 1
                deg[v] += 1
        if all(2 <= deg[v] <= b for v in verts):
            return True
    return False


def k1_join_3k2():
    """A hub joined to three disjoint edges."""
    edges = [(1, 2), (3, 4), (5, 6)] + [(0, v) for v in range(1, 7)]
    return Graph.build(7, edges)


class TestValidate:
    def test_cycle_is_one_large_component(self):
        g = cycle_graph(5)
        summary = validate_pseudo_factor(g, g.edges, 4)
        assert (summary.small_count, summary.large_count) == (0, 1)

    def test_edge_plus_vertex(self):
        g = path_graph(3)
        summary = validate_pseudo_factor(g, [(0, 1)], 4)
        assert summary.small_count == 2
        assert summary.large_count == 0

    def test_degree_one_in_large_component(self):
        g = path_graph(3)
        with pytest.raises(FactorError) as err:
            validate_pseudo_factor(g, [(0, 1), (1, 2)], 4)
        assert err.value.vertex in (0, 2)
        assert err.value.component == (0, 1, 2)

    def test_degree_above_b(self):
        g = Graph.build(5, [(0, v) for v in range(1, 5)] + [(1, 2), (3, 4)])
        with pytest.raises(FactorError, match="degree 4"):
            validate_pseudo_factor(g, g.edges, 3)

    def test_edge_not_in_graph(self):
        with pytest.raises(FactorError, match="not an edge"):
            validate_pseudo_factor(path_graph(3), [(0, 2)], 4)

    def test_b_below_two_rejected(self):
        with pytest.raises(ValueError):
            validate_pseudo_factor(path_graph(3), [], 1)

    def test_component_classification(self):
        g = Graph.build(6, [(0, 1), (1, 2), (0, 2), (3, 4)])
        pf = PseudoFactor.build(g, [(0, 1), (1, 2), (0, 2), (3, 4)], 4)
        kinds = [c.kind for c in pf.components]
        assert kinds == [ComponentClass.LARGE, ComponentClass.EDGE, ComponentClass.VERTEX]


class TestIs2bSubgraph:
    def test_cycle(self):
        g = cycle_graph(5)
        assert is_2b_subgraph(g, range(5), g.edges, 4)

    def test_single_edge(self):
        g = cycle_graph(5)
        assert not is_2b_subgraph(g, {0, 1}, [(0, 1)], 4)

    def test_k4_with_tight_window(self):
        g = complete_graph(4)
        assert not is_2b_subgraph(g, range(4), g.edges, 2)
        assert is_2b_subgraph(g, range(4), g.edges, 3)

    def test_empty_is_vacuously_true(self):
        assert is_2b_subgraph(cycle_graph(5), (), (), 4)

    def test_edge_outside_vertices(self):
        g = cycle_graph(5)
        assert not is_2b_subgraph(g, {0, 1}, [(1, 2)], 4)


class TestSpanning:
    def test_cycle_spans_itself(self):
        g = cycle_graph(5)
        assert has_deg_range_spanning(g, range(5), 4)

    def test_star_leaves_cannot_reach_two(self):
        star = Graph.build(4, [(0, 1), (0, 2), (0, 3)])
        assert not has_deg_range_spanning(star, range(4), 4)

    def test_hub_join_three_edges_infeasible(self):
        g = k1_join_3k2()
        assert not has_deg_range_spanning(g, range(7), 4)
        assert not brute_force_feasible(g, range(7), 4)

    def test_small_sets_false(self):
        g = cycle_graph(5)
        assert not has_deg_range_spanning(g, {0, 1}, 4)
        assert not has_deg_range_spanning(g, {0}, 4)

    def test_witness_edges_satisfy_window(self):
        g = complete_graph(6)
        chosen = spanning_in_range(g, range(6), 3)
        assert chosen is not None
        assert is_2b_subgraph(g, range(6), chosen, 3)

    def test_capacity(self):
        g = complete_graph(6)
        with pytest.raises(CapacityError):
            has_deg_range_spanning(g, range(6), 3, limit=5)

    @given(small_graphs(min_n=3, max_n=6))
    @settings(max_examples=60, deadline=None)
    def test_matches_brute_force(self, g):
        for b in (2, 4):
            if len(g.edges) <= 18:
                assert has_deg_range_spanning(g, range(g.n), b) == brute_force_feasible(
                    g, range(g.n), b
                )

    @given(small_graphs(min_n=3, max_n=7))
    @settings(max_examples=40, deadline=None)
    def test_monotone_in_b(self, g):
        feasible = [has_deg_range_spanning(g, range(g.n), b) for b in (2, 3, 4, 5)]
        for earlier, later in itertools.pairwise(feasible):
            assert not earlier or later

    def test_all_degrees_in_window_is_feasible(self):
        for seed in range(8):
            g = gnp(7, 0.5, seed)
            degs = [len(g.adj[v]) for v in range(g.n)]
            if min(degs) >= 2:
                assert has_deg_range_spanning(g, range(g.n), max(degs))


class TestSerialization:
    def test_text_block(self):
        g = Graph.build(6, [(0, 1), (1, 2), (0, 2), (3, 4)])
        pf = PseudoFactor.build(g, g.edges, 4)
        assert factor_to_text(pf) == (
            "component 0: class=large vertices=0,1,2 edges=0-1,0-2,1-2\n"
            "component 1: class=edge vertices=3,4 edges=3-4\n"
            "component 2: class=vertex vertices=5 edges="
        )

    def test_json_dict(self):
        g = path_graph(3)
        pf = PseudoFactor.build(g, [(0, 1)], 4)
        payload = factor_to_json_dict(pf)
        assert payload["small_count"] == 2
        assert payload["large_count"] == 0
        assert payload["components"][0] == {
            "class": "edge",
            "vertices": [0, 1],
            "edges": [[0, 1]],
        }
