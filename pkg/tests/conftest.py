import pytest

from hublink import EdgeList, Metric, PredictConfig, build_graph, predict_links

# Small fixed graph used throughout: a triangle 0-1-2 joined to a
# triangle-ish tail 1-3, 2-3, 3-4, 4-5. Degrees: [2, 3, 3, 3, 2, 1].
G1_PAIRS = [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (3, 4), (4, 5)]


@pytest.fixture
def g1():
    return build_graph(EdgeList.from_pairs(G1_PAIRS))


@pytest.fixture
def star5():
    # K_{1,4}: hub 0 with leaves 1..4
    return build_graph(EdgeList.from_pairs([(0, i) for i in range(1, 5)]))


@pytest.fixture(scope="session")
def warm_kernels():
    # One tiny run so JIT compilation never lands inside a timed section.
    g = build_graph(EdgeList.from_pairs([(0, 1), (1, 2)]))
    predict_links(g, PredictConfig(metric=Metric.CN, max_predictions=1))
    return True


def random_graph(n, m, seed):
    from hublink import erdos_renyi

    return build_graph(erdos_renyi(n, m, seed))
