import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import graphs
from qcliques import (
    QuasiCliqueParams,
    brute_force_quasi_cliques,
    build_graph,
    enumerate_maximal_cliques,
    enumerate_maximal_quasi_cliques,
    gnp,
    is_locally_maximal,
    is_quasi_clique,
    planted_quasi_clique,
    sweep,
)

GRID = [
    QuasiCliqueParams(lam=lam, gamma=gam, min_size=3)
    for lam in ("0.5", "0.75", "1")
    for gam in ("0.5", "0.75", "1")
]


def naive_locally_maximal(g, members, params):
    """Definitional check: try every outside vertex, one at a time."""
    base = set(members)
    for v in range(g.vertex_count):
        if v not in base and is_quasi_clique(g, base | {v}, params)[0]:
            return False
    return True


class TestIsLocallyMaximal:
    def test_precondition_enforced(self, path3):
        params = QuasiCliqueParams(lam=1, gamma=1, min_size=3)
        with pytest.raises(ValueError):
            is_locally_maximal(path3, [0, 1, 2], params)

    def test_clique_case_reduces_to_maximal_clique(self, k4):
        params = QuasiCliqueParams(lam=1, gamma=1, min_size=2)
        assert is_locally_maximal(k4, [0, 1, 2, 3], params)
        assert not is_locally_maximal(k4, [0, 1], params)

    def test_whole_vertex_set(self, five_cycle):
        params = QuasiCliqueParams(lam="0.5", gamma="0.5", min_size=3)
        assert is_locally_maximal(five_cycle, range(5), params)

    def test_agrees_with_definitional_check(self):
        for seed in range(30):
            g = gnp(10, 0.45, seed=seed).graph
            for params in GRID:
                for s in brute_force_quasi_cliques(g, params):
                    assert is_locally_maximal(g, s, params)
                    assert naive_locally_maximal(g, s, params)

    @given(graphs(min_n=1, max_n=10), st.data())
    @settings(max_examples=80, deadline=None)
    def test_matches_naive_on_arbitrary_passing_sets(self, g, data):
        members = data.draw(
            st.sets(st.integers(0, g.vertex_count - 1), min_size=1), label="members"
        )
        params = QuasiCliqueParams(
            lam=data.draw(st.sampled_from(["0.5", "0.75", "1"])),
            gamma=data.draw(st.sampled_from(["0.5", "0.75", "1"])),
            min_size=1,
        )
        if is_quasi_clique(g, members, params)[0]:
            assert is_locally_maximal(g, members, params) == naive_locally_maximal(
                g, members, params
            )


class TestEnumerate:
    def test_five_cycle_includes_whole_cycle(self, five_cycle):
        params = QuasiCliqueParams(lam="0.5", gamma="0.5", min_size=3)
        cs = enumerate_maximal_quasi_cliques(five_cycle, params)
        assert (0, 1, 2, 3, 4) in cs

    def test_reduction_to_cliques(self):
        for seed in range(20):
            g = gnp(20, 0.45, seed=seed).graph
            params = QuasiCliqueParams(lam=1, gamma=1, min_size=1)
            assert enumerate_maximal_quasi_cliques(g, params) == enumerate_maximal_cliques(g)

    def test_oracle_equality_over_grid(self):
        for seed in range(25):
            g = gnp(9, 0.5, seed=100 + seed).graph
            for params in GRID:
                assert enumerate_maximal_quasi_cliques(g, params) == brute_force_quasi_cliques(
                    g, params
                )

    @given(graphs(max_n=10), st.data())
    @settings(max_examples=60, deadline=None)
    def test_oracle_equality_property(self, g, data):
        params = QuasiCliqueParams(
            lam=data.draw(st.sampled_from(["0.3", "0.5", "0.75", "1"])),
            gamma=data.draw(st.sampled_from(["0.3", "0.5", "0.75", "1"])),
            min_size=data.draw(st.sampled_from([1, 2, 3])),
            require_connected=data.draw(st.booleans()),
        )
        assert enumerate_maximal_quasi_cliques(g, params) == brute_force_quasi_cliques(g, params)

    def test_soundness_of_emissions(self):
        g = gnp(14, 0.4, seed=77).graph
        params = QuasiCliqueParams(lam="0.6", gamma="0.7", min_size=3)
        for s in enumerate_maximal_quasi_cliques(g, params):
            assert is_quasi_clique(g, s, params)[0]
            assert naive_locally_maximal(g, s, params)

    def test_disconnected_communities_allowed_by_default(self):
        # two disjoint triangles satisfy both bounds jointly at 0.4
        g = build_graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
        params = QuasiCliqueParams(lam="0.4", gamma="0.4", min_size=6)
        assert list(enumerate_maximal_quasi_cliques(g, params)) == [(0, 1, 2, 3, 4, 5)]
        connected_only = QuasiCliqueParams(
            lam="0.4", gamma="0.4", min_size=6, require_connected=True
        )
        assert len(enumerate_maximal_quasi_cliques(g, connected_only)) == 0

    def test_worker_count_invariance(self):
        g = gnp(400, 0.02, seed=5).graph
        params = QuasiCliqueParams(lam="0.8", gamma="0.8", min_size=3)
        base = enumerate_maximal_quasi_cliques(g, params, workers=1)
        for workers in (2, 4, 8):
            assert enumerate_maximal_quasi_cliques(g, params, workers=workers) == base

    def test_edge_permutation_invariance(self):
        g = gnp(20, 0.4, seed=16).graph
        edges = [(v, w) for v in range(20) for w in g.adjacency[v] if w > v]
        scrambled = build_graph(20, [(w, v) for v, w in reversed(edges)])
        params = QuasiCliqueParams(lam="0.7", gamma="0.7", min_size=3)
        assert enumerate_maximal_quasi_cliques(scrambled, params) == (
            enumerate_maximal_quasi_cliques(g, params)
        )

    def test_pass_family_monotone_in_parameters(self):
        # the family of passing subsets shrinks as the knobs tighten
        g = gnp(9, 0.5, seed=8).graph
        loose = QuasiCliqueParams(lam="0.5", gamma="0.5", min_size=3)
        tight = QuasiCliqueParams(lam="0.75", gamma="0.75", min_size=3)
        from itertools import combinations

        for size in range(3, 10):
            for members in combinations(range(9), size):
                if is_quasi_clique(g, members, tight)[0]:
                    assert is_quasi_clique(g, members, loose)[0]

    def test_empty_graph(self):
        g = build_graph(0, [])
        params = QuasiCliqueParams(lam=1, gamma=1, min_size=1)
        assert len(enumerate_maximal_quasi_cliques(g, params)) == 0


class TestBruteForce:
    def test_complete_dominates(self, triangle):
        params = QuasiCliqueParams(lam="0.5", gamma="0.5", min_size=3)
        assert list(brute_force_quasi_cliques(triangle, params)) == [(0, 1, 2)]

    def test_edgeless_at_full_density(self):
        g = build_graph(4, [])
        params = QuasiCliqueParams(lam=1, gamma=1, min_size=3)
        assert len(brute_force_quasi_cliques(g, params)) == 0

    def test_triangle_free_clique_case(self, five_cycle):
        params = QuasiCliqueParams(lam=1, gamma=1, min_size=2)
        cs = brute_force_quasi_cliques(five_cycle, params)
        assert all(len(c) == 2 for c in cs) and len(cs) == 5

    def test_scale_guard(self):
        params = QuasiCliqueParams(lam=1, gamma=1)
        with pytest.raises(ValueError):
            brute_force_quasi_cliques(build_graph(17, []), params)


class TestSweep:
    def test_clique_corner_matches_clique_enumeration(self):
        g = gnp(15, 0.4, seed=21).graph
        cells = sweep(g, [1], [1], min_size=2)
        assert len(cells) == 1
        assert cells[0].communities == enumerate_maximal_cliques(g, min_size=2)
        assert cells[0].community_count == len(cells[0].communities)

    def test_summary_fields(self):
        g = gnp(12, 0.5, seed=3).graph
        for cell in sweep(g, ["0.5", "1"], ["0.5", "1"], min_size=3):
            assert 0.0 <= cell.coverage <= 1.0
            assert sum(cell.size_histogram.values()) == cell.community_count
            if cell.community_count:
                assert cell.mean_overlap >= 1.0

    def test_grid_order_and_independence(self):
        g = gnp(10, 0.5, seed=4).graph
        cells = sweep(g, ["0.5", "1"], ["0.75"], min_size=3)
        assert [(str(c.lam), str(c.gamma)) for c in cells] == [("1/2", "3/4"), ("1", "3/4")]
        solo = sweep(g, ["1"], ["0.75"], min_size=3)
        assert cells[1].communities == solo[0].communities

    def test_empty_lists_rejected(self, triangle):
        with pytest.raises(ValueError):
            sweep(triangle, [], ["0.5"])

    def test_planted_instance_recovered(self):
        out = planted_quasi_clique(60, 0.03, [(8, "0.75", "0.8"), (6, "0.75", "0.8")], seed=13)
        cells = sweep(out.graph, ["0.75"], ["0.8"], min_size=4)
        cell = cells[0]
        for plant in out.ground_truth:
            pset = set(plant)
            assert any(pset <= set(c) for c in cell.communities), plant
