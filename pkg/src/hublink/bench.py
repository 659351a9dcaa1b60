"""Benchmark run records and their CSV round-trip.

Every CSV the command-line tools emit starts with a header row and a
config-echo column block so each data row stands alone; rows parse back
into RunRecord without loss. Command-specific extras (speedup, prediction
hashes) are appended after the core columns and ignored on parse.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, fields
from typing import Optional

from .evaluation import QualityReport
from .graph import Graph
from .predictor import PredictConfig, PredictStats, predict_links_timed
from .topk import Prediction


@dataclass
class RunRecord:
    graph: str
    metric: str
    hub_limit: str
    top: int
    threshold: float
    threads: int
    tie_break: str
    seed: Optional[int]
    removed: Optional[int]
    scoring_ms: float
    merging_ms: float
    total_ms: float
    scoring_ms_mean: float
    merging_ms_mean: float
    total_ms_mean: float
    candidates: int
    predicted: Optional[int] = None
    correct: Optional[int] = None
    ground_truth: Optional[int] = None
    precision: Optional[float] = None
    recall: Optional[float] = None
    f1: Optional[float] = None

    def to_row(self) -> list[str]:
        out = []
        for f in fields(self):
            value = getattr(self, f.name)
            if value is None:
                out.append("")
            elif isinstance(value, float):
                out.append(repr(value))
            else:
                out.append(str(value))
        return out

    @classmethod
    def from_row(cls, header: list[str], row: list[str]) -> "RunRecord":
        by_name = dict(zip(header, row))
        kwargs = {}
        for f in fields(cls):
            raw = by_name[f.name]
            if raw == "":
                kwargs[f.name] = None
            elif f.name in ("top", "threads", "seed", "removed", "candidates",
                            "predicted", "correct", "ground_truth"):
                kwargs[f.name] = int(raw)
            elif f.name in ("threshold", "scoring_ms", "merging_ms", "total_ms",
                            "scoring_ms_mean", "merging_ms_mean", "total_ms_mean",
                            "precision", "recall", "f1"):
                kwargs[f.name] = float(raw)
            else:
                kwargs[f.name] = raw
        return cls(**kwargs)


RUN_HEADER = [f.name for f in fields(RunRecord)]


def hub_limit_label(hub_limit) -> str:
    return "inf" if hub_limit == float("inf") else str(int(hub_limit))


def timed_predict(g: Graph, cfg: PredictConfig, repeat: int = 1,
                  ) -> tuple[list[Prediction], PredictStats, PredictStats]:
    """Run prediction ``repeat`` times; return the first run's predictions
    plus minimum and mean phase timings. The minimum is the steadier
    desk-scale statistic, the mean matches what sweep-style reports
    usually quote, so both are kept."""
    if repeat < 1:
        raise ValueError("repeat must be >= 1")
    predictions, stats = predict_links_timed(g, cfg)
    runs = [stats]
    for _ in range(repeat - 1):
        _, again = predict_links_timed(g, cfg)
        runs.append(again)
    minimum = PredictStats(
        scoring_seconds=min(r.scoring_seconds for r in runs),
        merging_seconds=min(r.merging_seconds for r in runs),
        total_seconds=min(r.total_seconds for r in runs),
        candidates_scored=stats.candidates_scored,
        workers=stats.workers,
    )
    mean = PredictStats(
        scoring_seconds=sum(r.scoring_seconds for r in runs) / len(runs),
        merging_seconds=sum(r.merging_seconds for r in runs) / len(runs),
        total_seconds=sum(r.total_seconds for r in runs) / len(runs),
        candidates_scored=stats.candidates_scored,
        workers=stats.workers,
    )
    return predictions, minimum, mean


def make_record(graph_label: str, cfg: PredictConfig, minimum: PredictStats,
                mean: PredictStats, seed: Optional[int] = None,
                removed: Optional[int] = None,
                quality: Optional[QualityReport] = None) -> RunRecord:
    return RunRecord(
        graph=graph_label,
        metric=cfg.metric.token,
        hub_limit=hub_limit_label(cfg.hub_limit),
        top=cfg.max_predictions,
        threshold=cfg.score_threshold,
        threads=cfg.workers,
        tie_break=cfg.tie_break.value,
        seed=seed,
        removed=removed,
        scoring_ms=minimum.scoring_seconds * 1e3,
        merging_ms=minimum.merging_seconds * 1e3,
        total_ms=minimum.total_seconds * 1e3,
        scoring_ms_mean=mean.scoring_seconds * 1e3,
        merging_ms_mean=mean.merging_seconds * 1e3,
        total_ms_mean=mean.total_seconds * 1e3,
        candidates=minimum.candidates_scored,
        predicted=quality.predicted if quality else None,
        correct=quality.correct if quality else None,
        ground_truth=quality.ground_truth if quality else None,
        precision=quality.precision if quality else None,
        recall=quality.recall if quality else None,
        f1=quality.f1 if quality else None,
    )


class PhaseTimer:
    """Context manager collecting one wall-time measurement."""

    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.seconds = time.perf_counter() - self.start
        return False
