"""hublink: parallel neighborhood-based link prediction for undirected graphs."""

from .evaluation import (
    EvalSplit,
    QualityReport,
    brute_force_predict,
    perfect_guess_probability,
    random_guess_precision,
    score_predictions,
    split_edges,
)
from .generators import barabasi_albert, erdos_renyi, watts_strogatz
from .graph import (
    EdgeList,
    Graph,
    GraphFormatError,
    build_graph,
    load_edge_list,
    load_matrix_market,
    read_graph,
    serialize,
    write_edge_list,
)
from .metrics import AUTO_HUB_LIMITS, Metric, contribution, finalize, metric_tokens, resolve_hub_limit
from .predictor import (
    CHUNK_SIZE,
    ChunkScheduler,
    PredictConfig,
    PredictStats,
    partition_schedule,
    predict_links,
    predict_links_timed,
    with_predicted_edges,
)
from .scoretable import ScoreTable
from .topk import Prediction, PredictionList, TieBreak, merge

__version__ = "0.1.0"

__all__ = [
    "AUTO_HUB_LIMITS",
    "CHUNK_SIZE",
    "ChunkScheduler",
    "EdgeList",
    "EvalSplit",
    "Graph",
    "GraphFormatError",
    "Metric",
    "PredictConfig",
    "PredictStats",
    "Prediction",
    "PredictionList",
    "QualityReport",
    "ScoreTable",
    "TieBreak",
    "barabasi_albert",
    "brute_force_predict",
    "build_graph",
    "contribution",
    "erdos_renyi",
    "finalize",
    "load_edge_list",
    "load_matrix_market",
    "merge",
    "metric_tokens",
    "partition_schedule",
    "perfect_guess_probability",
    "predict_links",
    "predict_links_timed",
    "random_guess_precision",
    "read_graph",
    "resolve_hub_limit",
    "score_predictions",
    "serialize",
    "split_edges",
    "watts_strogatz",
    "with_predicted_edges",
    "write_edge_list",
]
