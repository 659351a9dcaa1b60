import math

import numpy as np
import pytest

from hublink import Metric, brute_force_predict, build_graph, contribution, erdos_renyi, finalize


class TestContribution:
    def test_ra_half(self):
        assert contribution(Metric.RA, 2) == 0.5

    def test_aa_natural_log(self):
        assert contribution(Metric.AA, 2) == pytest.approx(1 / math.log(2), rel=1e-12)

    def test_count_metrics_unit(self):
        assert contribution(Metric.CN, 1000) == 1.0
        for m in (Metric.JC, Metric.SI, Metric.SC, Metric.HP, Metric.HD, Metric.LHN):
            assert contribution(m, 17) == 1.0

    def test_aa_degree_one_rejected(self):
        with pytest.raises(ValueError):
            contribution(Metric.AA, 1)

    def test_degree_zero_rejected(self):
        with pytest.raises(ValueError):
            contribution(Metric.CN, 0)


class TestFinalize:
    # acc=2, deg_a=2, deg_c=3 is the (0, 3) pair of the G1 fixture
    def test_jc(self):
        assert finalize(Metric.JC, 2, 2, 3) == pytest.approx(2 / 3, rel=1e-12)

    def test_hp(self):
        assert finalize(Metric.HP, 2, 2, 3) == 1.0

    def test_lhn(self):
        assert finalize(Metric.LHN, 2, 2, 3) == pytest.approx(1 / 3, rel=1e-12)

    @pytest.mark.parametrize("k", [1, 2, 5, 100])
    def test_sc_identical_neighborhoods(self, k):
        assert finalize(Metric.SC, k, k, k) == pytest.approx(1.0, rel=1e-12)

    def test_passthrough_metrics(self):
        for m in (Metric.CN, Metric.AA, Metric.RA):
            assert finalize(m, 2.75, 4, 9) == 2.75


def _random_valid_inputs(rng):
    deg_a = int(rng.integers(1, 50))
    deg_c = int(rng.integers(1, 50))
    acc = int(rng.integers(1, min(deg_a, deg_c) + 1))
    return acc, deg_a, deg_c


class TestProperties:
    def test_normalized_metrics_bounded(self):
        rng = np.random.default_rng(3)
        for _ in range(500):
            acc, da, dc = _random_valid_inputs(rng)
            for m in (Metric.JC, Metric.SI, Metric.SC, Metric.HP, Metric.HD):
                s = finalize(m, acc, da, dc)
                assert 0.0 < s <= 1.0 + 1e-12, (m, acc, da, dc)

    def test_hp_dominates_hd(self):
        rng = np.random.default_rng(4)
        for _ in range(500):
            acc, da, dc = _random_valid_inputs(rng)
            assert finalize(Metric.HP, acc, da, dc) >= finalize(Metric.HD, acc, da, dc)

    def test_si_jc_identity_equal_degrees(self):
        # SI(acc, d, d) == JC(acc, d, d) * (2d - acc) / (2d)
        rng = np.random.default_rng(5)
        for _ in range(500):
            d = int(rng.integers(1, 60))
            acc = int(rng.integers(1, d + 1))
            lhs = finalize(Metric.SI, acc, d, d)
            rhs = finalize(Metric.JC, acc, d, d) * (2 * d - acc) / (2 * d)
            assert lhs == pytest.approx(rhs, rel=1e-12)

    def test_scores_symmetric_in_endpoints(self):
        rng = np.random.default_rng(6)
        for _ in range(300):
            acc, da, dc = _random_valid_inputs(rng)
            for m in Metric:
                assert finalize(m, acc, da, dc) == pytest.approx(
                    finalize(m, acc, dc, da), rel=1e-12)

    def test_cn_counts_length_two_paths(self):
        # CN(u, v) equals the number of u-b-v paths, which A @ A exposes.
        for seed in range(5):
            g = build_graph(erdos_renyi(20, 40, seed))
            n = g.vertex_count
            a = np.zeros((n, n), dtype=np.int64)
            for u in range(n):
                a[u, g.neighbors(u)] = 1
            paths2 = a @ a
            preds = brute_force_predict(g, Metric.CN, n * n)
            for p in preds:
                assert p.score == paths2[p.u, p.v]
