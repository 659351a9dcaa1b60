import numpy as np
import pytest

from hublink import barabasi_albert, build_graph, erdos_renyi, watts_strogatz


class TestErdosRenyi:
    def test_exact_edge_count(self):
        el = erdos_renyi(100, 300, seed=1)
        assert len(el) == 300
        g = build_graph(el)
        assert g.edge_count == 300  # all pairs distinct, no self-loops
        assert g.vertex_count == 100

    def test_reproducible(self):
        a = erdos_renyi(50, 100, seed=9)
        b = erdos_renyi(50, 100, seed=9)
        assert np.array_equal(a.pairs, b.pairs)

    def test_seed_changes_output(self):
        a = erdos_renyi(50, 100, seed=1)
        b = erdos_renyi(50, 100, seed=2)
        assert not np.array_equal(a.pairs, b.pairs)

    def test_infeasible(self):
        with pytest.raises(ValueError):
            erdos_renyi(5, 11, seed=0)

    def test_complete_graph(self):
        g = build_graph(erdos_renyi(6, 15, seed=0))
        assert g.edge_count == 15

    def test_rejection_path(self):
        # large pair space exercises the batched-sampling branch
        el = erdos_renyi(5000, 2000, seed=3)
        g = build_graph(el)
        assert g.edge_count == 2000


class TestBarabasiAlbert:
    def test_edge_count(self):
        el = barabasi_albert(200, 5, seed=4)
        g = build_graph(el)
        assert g.vertex_count == 200
        # clique on 6 + 194 * 5 attachments, all distinct by construction
        assert g.edge_count == 15 + 194 * 5

    def test_reproducible(self):
        a = barabasi_albert(100, 3, seed=7)
        b = barabasi_albert(100, 3, seed=7)
        assert np.array_equal(a.pairs, b.pairs)

    def test_hubs_emerge(self):
        g = build_graph(barabasi_albert(2000, 4, seed=11))
        assert g.max_degree() > 4 * np.mean(g.degrees())

    def test_invalid_attach(self):
        with pytest.raises(ValueError):
            barabasi_albert(10, 0, seed=0)
        with pytest.raises(ValueError):
            barabasi_albert(10, 10, seed=0)

    def test_triad_closure_adds_triangles(self):
        def triangles(g):
            count = 0
            for u in range(g.vertex_count):
                nbrs = g.neighbors(u).tolist()
                for i, a in enumerate(nbrs):
                    for b in nbrs[i + 1:]:
                        if g.has_edge(a, b):
                            count += 1
            return count // 3

        plain = build_graph(barabasi_albert(800, 4, seed=2, triad=0.0))
        clustered = build_graph(barabasi_albert(800, 4, seed=2, triad=0.8))
        assert triangles(clustered) > 2 * triangles(plain)


class TestWattsStrogatz:
    def test_zero_rewire_is_ring_lattice(self):
        g = build_graph(watts_strogatz(20, 4, 0.0, seed=0))
        assert np.all(g.degrees() == 4)
        assert g.has_edge(0, 1) and g.has_edge(0, 2)
        assert not g.has_edge(0, 3)

    def test_rewire_preserves_edge_count(self):
        g = build_graph(watts_strogatz(500, 10, 0.3, seed=5))
        assert g.edge_count == 500 * 10 // 2

    def test_reproducible(self):
        a = watts_strogatz(100, 6, 0.1, seed=13)
        b = watts_strogatz(100, 6, 0.1, seed=13)
        assert np.array_equal(a.pairs, b.pairs)

    def test_validation(self):
        with pytest.raises(ValueError):
            watts_strogatz(10, 3, 0.1, seed=0)  # odd k
        with pytest.raises(ValueError):
            watts_strogatz(10, 10, 0.1, seed=0)  # k >= n - 1
        with pytest.raises(ValueError):
            watts_strogatz(10, 4, 1.5, seed=0)
