import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import graphs
from qcliques import (
    build_graph,
    core_decomposition,
    degree_extremes,
    graph_density,
    induced_stats,
    neighbors,
)


class TestBuildGraph:
    def test_triangle(self, triangle):
        assert triangle.vertex_count == 3
        assert triangle.edge_count == 3
        assert triangle.adjacency == ((1, 2), (0, 2), (0, 1))

    def test_duplicates_and_reversals_collapse(self):
        g = build_graph(2, [(0, 1), (1, 0), (0, 1)])
        assert g.edge_count == 1
        assert g.adjacency == ((1,), (0,))

    def test_self_loop_rejected_with_pair(self):
        with pytest.raises(ValueError, match=r"self-loop.*\(0, 0\)"):
            build_graph(1, [(0, 0)])

    def test_endpoint_out_of_range(self):
        with pytest.raises(ValueError, match="out of range"):
            build_graph(2, [(0, 2)])
        with pytest.raises(ValueError, match="out of range"):
            build_graph(2, [(-1, 0)])

    def test_empty_graph(self):
        g = build_graph(0, [])
        assert g.vertex_count == 0 and g.edge_count == 0

    @given(graphs(max_n=12))
    def test_handshake_identity(self, g):
        assert sum(g.degrees) == 2 * g.edge_count

    @given(graphs(max_n=10), st.randoms(use_true_random=False))
    def test_edge_order_irrelevant(self, g, rnd):
        edges = [(v, w) for v in range(g.vertex_count) for w in g.adjacency[v] if w > v]
        shuffled = [(w, v) if rnd.random() < 0.5 else (v, w) for v, w in edges]
        rnd.shuffle(shuffled)
        assert build_graph(g.vertex_count, shuffled) == g


class TestNeighbors:
    def test_complete(self, triangle):
        assert neighbors(triangle, 0) == (1, 2)

    def test_path_interior(self, path3):
        assert neighbors(path3, 1) == (0, 2)

    def test_isolated(self):
        g = build_graph(2, [])
        assert neighbors(g, 0) == ()

    def test_out_of_range(self, triangle):
        with pytest.raises(ValueError):
            neighbors(triangle, 3)


class TestDegreeExtremes:
    def test_regular(self, triangle):
        assert degree_extremes(triangle) == (2, 2)

    def test_path(self, path3):
        assert degree_extremes(path3) == (1, 2)

    def test_star(self, star5):
        assert degree_extremes(star5) == (1, 5)

    def test_empty_graph_rejected(self):
        with pytest.raises(ValueError):
            degree_extremes(build_graph(0, []))


class TestGraphDensity:
    def test_complete(self, triangle):
        assert graph_density(triangle) == 1.0

    def test_five_cycle(self, five_cycle):
        assert graph_density(five_cycle) == 0.5

    def test_edgeless(self):
        assert graph_density(build_graph(4, [])) == 0.0

    def test_too_small(self):
        with pytest.raises(ValueError):
            graph_density(build_graph(1, []))


class TestInducedStats:
    def test_complete_subset(self, triangle):
        s = induced_stats(triangle, [0, 1, 2])
        assert (s.size, s.internal_edges, s.min_internal_degree) == (3, 3, 2)
        assert s.density == 1 and s.connected

    def test_five_cycle_full(self, five_cycle):
        s = induced_stats(five_cycle, range(5))
        assert s.internal_edges == 5
        assert s.min_internal_degree == s.max_internal_degree == 2
        assert s.density == Fraction(1, 2)
        assert s.connected

    def test_disconnected_pairs(self):
        g = build_graph(4, [(0, 1), (2, 3)])
        s = induced_stats(g, range(4))
        assert not s.connected

    def test_singleton_density_is_one(self, triangle):
        s = induced_stats(triangle, [1])
        assert s.size == 1 and s.density == 1 and s.connected

    def test_empty_subset(self, triangle):
        s = induced_stats(triangle, [])
        assert s.size == 0 and s.internal_edges == 0

    def test_invalid_subset(self, triangle):
        with pytest.raises(ValueError):
            induced_stats(triangle, [0, 7])

    @given(graphs(min_n=2, max_n=12))
    def test_full_subset_matches_graph_level_stats(self, g):
        s = induced_stats(g, range(g.vertex_count))
        assert (s.min_internal_degree, s.max_internal_degree) == degree_extremes(g)
        assert float(s.density) == graph_density(g)
        assert s.internal_edges == g.edge_count


def _peel_oracle(g):
    """Hand-executable peeling: repeatedly delete a minimum-degree vertex."""
    alive = set(range(g.vertex_count))
    deg = {v: g.degrees[v] for v in alive}
    core = {}
    level = 0
    while alive:
        v = min(alive, key=lambda u: (deg[u], u))
        level = max(level, deg[v])
        core[v] = level
        alive.remove(v)
        for w in g.neighbor_sets[v]:
            if w in alive:
                deg[w] -= 1
    return [core[v] for v in range(g.vertex_count)]


class TestCoreDecomposition:
    def test_complete_graph(self, k4):
        core, _ = core_decomposition(k4)
        assert core == (3, 3, 3, 3)

    def test_star_is_degeneracy_one(self, star5):
        core, _ = core_decomposition(star5)
        assert core == (1,) * 6

    def test_five_cycle_all_two(self, five_cycle):
        core, _ = core_decomposition(five_cycle)
        assert list(core) == _peel_oracle(five_cycle) == [2] * 5

    @given(graphs(max_n=12))
    @settings(max_examples=60)
    def test_matches_peel_oracle(self, g):
        core, order = core_decomposition(g)
        assert list(core) == _peel_oracle(g)
        assert sorted(order) == list(range(g.vertex_count))

    @given(graphs(max_n=12))
    def test_later_neighbor_bound(self, g):
        core, order = core_decomposition(g)
        degeneracy = max(core, default=0)
        pos = {v: i for i, v in enumerate(order)}
        for v in order:
            later = sum(1 for w in g.adjacency[v] if pos[w] > pos[v])
            assert later <= degeneracy

    def test_deterministic(self):
        rng = random.Random(5)
        edges = [(rng.randrange(30), rng.randrange(30)) for _ in range(80)]
        edges = [(a, b) for a, b in edges if a != b]
        g = build_graph(30, edges)
        assert core_decomposition(g) == core_decomposition(g)
