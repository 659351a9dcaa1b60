"""Parallel link prediction over second-order neighborhoods.

The run has two phases. In the scoring phase, worker threads claim
contiguous 2048-vertex chunks from a shared counter and score each source
vertex against its second-order neighbors, skipping exploration through
first-order neighbors whose degree exceeds the hub limit. Scores
accumulate in a per-worker dense table and survivors feed a per-worker
bounded prediction list. After a hard barrier, the merging phase runs
sequentially: per-worker lists are sorted and combined through a max-heap
of list heads into the global top-k.

Setting ``hub_limit`` to infinity scans every second-order neighbor; a
finite limit trades a little recall on hub-heavy graphs for a large cut
in scanned volume.
"""

from __future__ import annotations

import math
import threading
import time
from dataclasses import dataclass

import numpy as np

from ._kernels import merge_runs, score_range
from .graph import EdgeList, Graph
from .metrics import Metric
from .scoretable import ScoreTable
from .topk import Prediction, TieBreak

CHUNK_SIZE = 2048
_INF_HUB = 1 << 62  # larger than any degree; stands in for an infinite limit


@dataclass
class PredictConfig:
    metric: Metric
    max_predictions: int
    score_threshold: float = 0.0
    hub_limit: int | float = math.inf
    workers: int = 1
    tie_break: TieBreak = TieBreak.FAST

    def __post_init__(self) -> None:
        if self.max_predictions < 1:
            raise ValueError("max_predictions must be >= 1")
        if self.workers < 1:
            raise ValueError("workers must be >= 1")
        if self.hub_limit != math.inf and int(self.hub_limit) < 1:
            raise ValueError("hub_limit must be >= 1 or infinity")


@dataclass
class PredictStats:
    scoring_seconds: float = 0.0
    merging_seconds: float = 0.0
    total_seconds: float = 0.0
    candidates_scored: int = 0
    workers: int = 1


class ChunkScheduler:
    """Hands out contiguous vertex chunks to whichever worker asks next.

    The single shared counter is the only synchronization point of the
    scoring phase; a lock guards it since plain ints are not atomic in
    Python.
    """

    def __init__(self, total: int, chunk_size: int = CHUNK_SIZE):
        if total < 0:
            raise ValueError("total must be >= 0")
        self.total = total
        self.chunk_size = chunk_size
        self._next = 0
        self._lock = threading.Lock()

    def claim(self) -> tuple[int, int] | None:
        with self._lock:
            start = self._next
            self._next += self.chunk_size
        if start >= self.total:
            return None
        return start, min(start + self.chunk_size, self.total)


def partition_schedule(n: int, workers: int) -> ChunkScheduler:
    """Dynamic work assignment for n vertices: fixed-size chunks claimed
    on demand, no static pre-assignment, ragged last chunk."""
    if workers < 1:
        raise ValueError("workers must be >= 1")
    return ChunkScheduler(n)


class _WorkerState:
    """Everything one worker owns: a score table, a bounded prediction
    list (as parallel arrays) and a padded state cell. Allocated
    separately per worker so no two workers share cache lines."""

    def __init__(self, n: int, capacity: int):
        self.table = ScoreTable(n)
        self.pred_score = np.empty(capacity, dtype=np.float64)
        self.pred_u = np.empty(capacity, dtype=np.int64)
        self.pred_v = np.empty(capacity, dtype=np.int64)
        self.state = np.zeros(8, dtype=np.int64)  # [0]=len, [1]=candidates


def _effective_hub_limit(hub_limit: int | float) -> int:
    if hub_limit == math.inf:
        return _INF_HUB
    return int(hub_limit)


def _run_worker(g: Graph, ws: _WorkerState, sched: ChunkScheduler,
                metric_id: int, hub: int, threshold: float, deterministic: bool) -> None:
    offsets, adjacency = g.offsets, g.adjacency
    table = ws.table
    while True:
        span = sched.claim()
        if span is None:
            return
        score_range(offsets, adjacency, span[0], span[1], metric_id, hub, threshold,
                    table.values, table.keys, table.touched,
                    ws.pred_score, ws.pred_u, ws.pred_v, ws.state, deterministic)


def _run_worker_guarded(g, ws, sched, metric_id, hub, threshold, deterministic, failures):
    # A failure inside a worker thread must surface in the caller, not
    # silently truncate the output.
    try:
        _run_worker(g, ws, sched, metric_id, hub, threshold, deterministic)
    except BaseException as exc:  # noqa: BLE001 - transported to the main thread
        failures.append(exc)


def _sort_retained(ws: _WorkerState, deterministic: bool) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    n = int(ws.state[0])
    s = ws.pred_score[:n]
    u = ws.pred_u[:n]
    v = ws.pred_v[:n]
    if deterministic:
        order = np.lexsort((v, u, -s))
    else:
        order = np.argsort(-s, kind="stable")
    return s[order], u[order], v[order]


def predict_links_timed(g: Graph, cfg: PredictConfig) -> tuple[list[Prediction], PredictStats]:
    """Run both phases and report per-phase wall times."""
    t_begin = time.perf_counter()
    metric_id = int(cfg.metric)
    hub = _effective_hub_limit(cfg.hub_limit)
    deterministic = cfg.tie_break is TieBreak.DETERMINISTIC
    workers = cfg.workers
    states = [_WorkerState(g.vertex_count, cfg.max_predictions) for _ in range(workers)]
    sched = partition_schedule(g.vertex_count, workers)

    t0 = time.perf_counter()
    if workers == 1:
        _run_worker(g, states[0], sched, metric_id, hub, cfg.score_threshold, deterministic)
    else:
        failures: list[BaseException] = []
        threads = [
            threading.Thread(
                target=_run_worker_guarded,
                args=(g, ws, sched, metric_id, hub, cfg.score_threshold, deterministic, failures),
            )
            for ws in states
        ]
        for t in threads:
            t.start()
        for t in threads:
            t.join()
        if failures:
            raise failures[0]
    t1 = time.perf_counter()

    # Merging phase: sort each worker's list, then heap-merge the heads.
    runs = [_sort_retained(ws, deterministic) for ws in states]
    run_offsets = np.zeros(workers + 1, dtype=np.int64)
    np.cumsum([r[0].size for r in runs], out=run_offsets[1:])
    total = int(run_offsets[-1])
    run_score = np.concatenate([r[0] for r in runs]) if total else np.empty(0, dtype=np.float64)
    run_u = np.concatenate([r[1] for r in runs]) if total else np.empty(0, dtype=np.int64)
    run_v = np.concatenate([r[2] for r in runs]) if total else np.empty(0, dtype=np.int64)
    out_n = min(cfg.max_predictions, total)
    out_score = np.empty(out_n, dtype=np.float64)
    out_u = np.empty(out_n, dtype=np.int64)
    out_v = np.empty(out_n, dtype=np.int64)
    count = merge_runs(run_score, run_u, run_v, run_offsets, out_n, deterministic,
                       out_score, out_u, out_v)
    t2 = time.perf_counter()

    predictions = [
        Prediction(int(out_u[i]), int(out_v[i]), float(out_score[i])) for i in range(count)
    ]
    stats = PredictStats(
        scoring_seconds=t1 - t0,
        merging_seconds=t2 - t1,
        total_seconds=time.perf_counter() - t_begin,
        candidates_scored=int(sum(ws.state[1] for ws in states)),
        workers=workers,
    )
    return predictions, stats


def predict_links(g: Graph, cfg: PredictConfig) -> list[Prediction]:
    """Predict up to ``cfg.max_predictions`` non-edges, best score first.

    Every returned pair (u, v) satisfies u < v, is absent from the graph,
    shares at least one common neighbor within the hub limit, and scores
    strictly above the threshold.
    """
    predictions, _ = predict_links_timed(g, cfg)
    return predictions


def with_predicted_edges(g: Graph, predictions: list[Prediction]) -> EdgeList:
    """Append predicted edges to the graph's edge list, e.g. to build an
    augmented graph for downstream analysis."""
    us, vs = g.unique_edges()
    extra = np.array([(p.u, p.v) for p in predictions], dtype=np.int64).reshape(-1, 2)
    pairs = np.vstack([np.column_stack([us, vs]), extra])
    return EdgeList(pairs=pairs, vertex_count_hint=g.vertex_count)
