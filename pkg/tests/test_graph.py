import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import brute_force_alpha, petersen, small_graphs
from pseudofactor.errors import CapacityError, GraphParseError
from pseudofactor.generators import complete_graph, cycle_graph
from pseudofactor.graph import (
    Graph,
    connected_components,
    endpoint_cycle,
    independence_number,
    load_dimacs,
    load_edge_list,
    load_graph_text,
    longest_path,
    maximum_independent_set,
    min_degree,
    to_edge_list,
)


class TestParsing:
    def test_path_on_three(self):
        g = load_edge_list("n 3\n0 1\n1 2")
        assert g.n == 3
        assert g.edges == ((0, 1), (1, 2))

    def test_c5(self):
        g = load_edge_list("n 5\n0 1\n1 2\n2 3\n3 4\n4 0")
        assert g.n == 5
        assert len(g.edges) == 5
        assert all(len(g.adj[v]) == 2 for v in range(5))

    def test_self_loop_rejected(self):
        with pytest.raises(GraphParseError, match="self-loop"):
            load_edge_list("n 2\n0 0")

    def test_malformed_line_reports_line_number(self):
        with pytest.raises(GraphParseError, match="line 3"):
            load_edge_list("n 3\n0 1\n1 two")

    def test_missing_header(self):
        with pytest.raises(GraphParseError, match="header"):
            load_edge_list("0 1")

    def test_duplicate_edges_collapse(self):
        g = load_edge_list("n 3\n0 1\n1 0\n0 1")
        assert g.edges == ((0, 1),)

    def test_comments_and_blanks(self):
        g = load_edge_list("# a path\nn 3\n\n0 1  # first\n1 2\n")
        assert g.edges == ((0, 1), (1, 2))

    def test_out_of_range(self):
        with pytest.raises(GraphParseError, match="range"):
            load_edge_list("n 2\n0 2")

    def test_empty_graph_accepted(self):
        g = load_edge_list("n 0")
        assert g.n == 0 and g.edges == ()

    def test_dimacs(self):
        g = load_dimacs("c a path\np edge 3 2\ne 1 2\ne 2 3\n")
        assert g.n == 3
        assert g.edges == ((0, 1), (1, 2))

    def test_dimacs_self_loop(self):
        with pytest.raises(GraphParseError, match="self-loop"):
            load_dimacs("p edge 2 1\ne 1 1")

    def test_dimacs_out_of_range(self):
        with pytest.raises(GraphParseError, match="range"):
            load_dimacs("p edge 2 1\ne 1 3")

    def test_autodetect(self):
        assert load_graph_text("p edge 2 1\ne 1 2").edges == ((0, 1),)
        assert load_graph_text("n 2\n0 1").edges == ((0, 1),)

    def test_edge_list_round_trip(self):
        g = petersen()
        assert load_edge_list(to_edge_list(g, comments=("petersen",))).edges == g.edges

    def test_build_rejects_bad_edges(self):
        with pytest.raises(ValueError):
            Graph.build(3, [(0, 3)])
        with pytest.raises(ValueError):
            Graph.build(3, [(1, 1)])


class TestMinDegree:
    def test_cycle_is_two_regular(self):
        assert min_degree(cycle_graph(5)) == 2

    def test_single_edge(self):
        assert min_degree(complete_graph(2)) == 1

    def test_star(self):
        star = Graph.build(4, [(0, 1), (0, 2), (0, 3)])
        assert min_degree(star) == 1

    def test_empty_graph_rejected(self):
        with pytest.raises(ValueError):
            min_degree(Graph.build(0, []))


class TestIndependence:
    @pytest.mark.parametrize("n", range(1, 7))
    def test_complete(self, n):
        assert independence_number(complete_graph(n)) == 1

    def test_c5(self):
        g = cycle_graph(5)
        assert independence_number(g) == 2
        assert brute_force_alpha(g) == 2

    def test_petersen(self):
        g = petersen()
        assert independence_number(g) == 4
        assert brute_force_alpha(g) == 4

    def test_witness_is_maximum_independent(self):
        g = petersen()
        witness = maximum_independent_set(g)
        assert len(witness) == 4
        for u in witness:
            assert not (g.adj[u] & witness)

    def test_within(self):
        g = cycle_graph(5)
        assert independence_number(g, within={0, 1, 2}) == 2
        assert independence_number(g, within=()) == 0

    def test_capacity(self):
        with pytest.raises(CapacityError):
            independence_number(petersen(), limit=9)

    @given(small_graphs())
    def test_matches_brute_force(self, g):
        assert independence_number(g) == brute_force_alpha(g)


def _assert_valid_path(g, path):
    assert len(set(path)) == len(path)
    for u, v in zip(path, path[1:]):
        assert g.has_edge(u, v)


class TestLongestPath:
    def test_c5_hamilton(self):
        path = longest_path(cycle_graph(5))
        assert len(path) == 5
        _assert_valid_path(cycle_graph(5), path)

    def test_star_three_vertices(self):
        star = Graph.build(4, [(0, 1), (0, 2), (0, 3)])
        path = longest_path(star)
        assert len(path) == 3
        _assert_valid_path(star, path)

    def test_two_disjoint_edges(self):
        g = Graph.build(4, [(0, 1), (2, 3)])
        assert len(longest_path(g)) == 2

    def test_capacity(self):
        with pytest.raises(CapacityError):
            longest_path(petersen(), limit=9)

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            longest_path(Graph.build(0, []))

    @given(small_graphs())
    @settings(max_examples=60)
    def test_endpoint_neighbors_lie_on_path(self, g):
        # this maximality is what makes the endpoint cycle sound
        path = longest_path(g)
        _assert_valid_path(g, path)
        on_path = set(path)
        for endpoint in (path[0], path[-1]):
            assert g.adj[endpoint] <= on_path


class TestEndpointCycle:
    def test_c5_gives_whole_cycle(self):
        g = cycle_graph(5)
        verts, edges = endpoint_cycle(g, longest_path(g))
        assert verts == frozenset(range(5))
        assert len(edges) == 5

    def test_k4_contains_closed_neighborhood(self):
        g = complete_graph(4)
        path = longest_path(g)
        verts, edges = endpoint_cycle(g, path)
        u = path[0]
        assert g.adj[u] | {u} <= verts
        assert len(verts) == len(edges)

    def test_degree_one_endpoint_signals_no_cycle(self):
        g = complete_graph(2)
        assert endpoint_cycle(g, (0, 1)) is None

    def test_non_maximal_path_rejected(self):
        g = cycle_graph(5)
        with pytest.raises(ValueError):
            endpoint_cycle(g, (0, 1, 2))

    @given(small_graphs(min_n=2))
    @settings(max_examples=60)
    def test_cycle_removal_lowers_alpha(self, g):
        path = longest_path(g)
        cyc = endpoint_cycle(g, path)
        if cyc is None:
            return
        verts, edges = cyc
        u = path[0]
        assert g.adj[u] | {u} <= verts
        rest = set(range(g.n)) - verts
        assert independence_number(g, within=rest) < independence_number(g)


class TestConnectedComponents:
    def test_whole_cycle(self):
        assert connected_components(cycle_graph(5)) == [frozenset(range(5))]

    def test_restricted(self):
        comps = connected_components(cycle_graph(5), within={0, 1, 3})
        assert comps == [frozenset({0, 1}), frozenset({3})]

    def test_empty(self):
        assert connected_components(cycle_graph(5), within=()) == []

    @given(small_graphs(), st.data())
    @settings(max_examples=60)
    def test_partition_properties(self, g, data):
        within = data.draw(st.sets(st.integers(0, g.n - 1))) if g.n else set()
        comps = connected_components(g, within=within)
        seen = set()
        for comp in comps:
            assert comp and not (comp & seen)
            seen |= comp
            # connected: reachable from its first vertex inside comp
            start = min(comp)
            frontier, reach = {start}, {start}
            while frontier:
                frontier = {w for v in frontier for w in g.adj[v] & comp} - reach
                reach |= frontier
            assert reach == comp
        assert seen == set(within)
        for a in comps:
            for b_ in comps:
                if a is not b_:
                    assert not any(g.adj[v] & b_ for v in a)
