"""Train/test edge splitting, quality measures, and the exhaustive oracle.

The evaluation protocol: remove a random subset of edges (the unobserved
set), predict the same number of edges on what remains, and compare.
Precision counts hits among predictions, recall counts hits among removed
edges, and F1 is their harmonic mean; when the prediction budget equals
the removal count the two coincide.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .graph import EdgeList, Graph, build_graph
from .metrics import Metric
from .topk import Prediction

RNG_ALGORITHM = "numpy.random.default_rng (PCG64)"

BRUTE_FORCE_VERTEX_GUARD = 4096

QUALITY_CSV_HEADER = "graph,metric,hub_limit,removed,predicted,correct,precision,recall,f1"


@dataclass
class EvalSplit:
    """An observed graph plus the edges removed from it."""

    observed: Graph
    unobserved: set[tuple[int, int]]
    seed: int
    rng_algorithm: str = RNG_ALGORITHM


@dataclass(frozen=True)
class QualityReport:
    correct: int
    predicted: int
    ground_truth: int
    precision: float
    recall: float
    f1: float

    def csv_row(self, graph: str, metric: str, hub_limit: str, removed: int) -> str:
        return (
            f"{graph},{metric},{hub_limit},{removed},"
            f"{self.predicted},{self.correct},{self.precision!r},{self.recall!r},{self.f1!r}"
        )


def split_edges(g: Graph, remove_count: int, seed: int) -> EvalSplit:
    """Move ``remove_count`` uniformly chosen edges into the unobserved set
    and rebuild the remainder (vertex count preserved)."""
    us, vs = g.unique_edges()
    m = us.size
    if remove_count < 0 or remove_count > m:
        raise ValueError(f"remove_count {remove_count} outside [0, {m}]")
    rng = np.random.default_rng(seed)
    removed_idx = rng.choice(m, size=remove_count, replace=False)
    keep = np.ones(m, dtype=bool)
    keep[removed_idx] = False
    observed = build_graph(EdgeList(
        pairs=np.column_stack([us[keep], vs[keep]]),
        vertex_count_hint=g.vertex_count,
    ))
    unobserved = {(int(us[i]), int(vs[i])) for i in removed_idx}
    return EvalSplit(observed=observed, unobserved=unobserved, seed=seed)


def score_predictions(predictions: list[Prediction], truth: set[tuple[int, int]]) -> QualityReport:
    """Precision/recall/F1 of canonical (u < v) predictions against the
    unobserved edge set. Empty denominators yield zero, not an error."""
    correct = sum(1 for p in predictions if (p[0], p[1]) in truth)
    predicted = len(predictions)
    ground_truth = len(truth)
    precision = correct / predicted if predicted else 0.0
    recall = correct / ground_truth if ground_truth else 0.0
    f1 = 2 * precision * recall / (precision + recall) if precision + recall > 0 else 0.0
    return QualityReport(correct, predicted, ground_truth, precision, recall, f1)


def random_guess_precision(n: int, observed_edges: int, predictions: int) -> float:
    """Expected precision of guessing uniformly among non-edges.

    Under the standard protocol the prediction budget equals the number of
    removed edges, so the per-guess hit probability is
    predictions / (n(n-1)/2 - observed_edges).
    """
    total_pairs = n * (n - 1) // 2
    if n < 0 or observed_edges < 0 or predictions < 0:
        raise ValueError("arguments must be non-negative")
    if observed_edges > total_pairs:
        raise ValueError(f"{observed_edges} observed edges impossible with {total_pairs} vertex pairs")
    available = total_pairs - observed_edges
    if predictions > available:
        raise ValueError(f"cannot guess {predictions} of {available} available non-edges")
    if predictions == 0:
        return 0.0
    return predictions / available


def perfect_guess_probability(n: int, observed_edges: int, predictions: int) -> float:
    """Probability that a uniform random guess of ``predictions`` non-edges
    is entirely correct: 1 / C(available, predictions). Astronomically
    small on any interesting graph; reported alongside the per-guess
    baseline for context."""
    total_pairs = n * (n - 1) // 2
    if observed_edges > total_pairs:
        raise ValueError(f"{observed_edges} observed edges impossible with {total_pairs} vertex pairs")
    available = total_pairs - observed_edges
    if predictions > available:
        raise ValueError(f"cannot guess {predictions} of {available} available non-edges")
    if predictions == 0:
        return 1.0
    log_comb = (
        math.lgamma(available + 1)
        - math.lgamma(predictions + 1)
        - math.lgamma(available - predictions + 1)
    )
    return math.exp(-log_comb)


def brute_force_predict(g: Graph, metric: Metric, n_p: int) -> list[Prediction]:
    """Reference predictor: score every non-adjacent pair directly from the
    neighbor-set intersection. Deliberately simple and independent of the
    scanning engine; guarded to small graphs since it is O(N^2 * D)."""
    n = g.vertex_count
    if n > BRUTE_FORCE_VERTEX_GUARD:
        raise ValueError(f"brute force refused for N={n} > {BRUTE_FORCE_VERTEX_GUARD} (test oracle only)")
    neighbor_sets = [frozenset(g.neighbors(v).tolist()) for v in range(n)]
    degs = [len(s) for s in neighbor_sets]
    scored: list[tuple[int, int, float]] = []
    for u in range(n):
        nu = neighbor_sets[u]
        du = degs[u]
        for v in range(u + 1, n):
            if v in nu:
                continue
            common = nu & neighbor_sets[v]
            if not common:
                continue
            dv = degs[v]
            k = len(common)
            if metric == Metric.CN:
                score = float(k)
            elif metric == Metric.JC:
                score = k / (du + dv - k)
            elif metric == Metric.SI:
                score = k / (du + dv)
            elif metric == Metric.SC:
                score = k / math.sqrt(du * dv)
            elif metric == Metric.HP:
                score = k / min(du, dv)
            elif metric == Metric.HD:
                score = k / max(du, dv)
            elif metric == Metric.LHN:
                score = k / (du * dv)
            elif metric == Metric.AA:
                score = sum(1.0 / math.log(degs[b]) for b in sorted(common))
            elif metric == Metric.RA:
                score = sum(1.0 / degs[b] for b in sorted(common))
            else:
                raise ValueError(f"unhandled metric {metric}")
            scored.append((u, v, score))
    scored.sort(key=lambda t: (-t[2], t[0], t[1]))
    return [Prediction(u, v, s) for u, v, s in scored[:n_p]]
