"""Command-line interface: predict, evaluate, sweep, scale, gen.

Exit codes: 0 on success, 2 for usage/argument errors, 1 for runtime
failures. Prediction listings go to stdout as TSV; benchmark reports go
to stdout as CSV with a header row; timings and notes go to stderr.
The HUBLINK_THREADS environment variable supplies the default worker
count when --threads is not given.
"""

from __future__ import annotations

import argparse
import csv
import hashlib
import math
import os
import sys
from typing import Optional

from .bench import RUN_HEADER, hub_limit_label, make_record, timed_predict
from .evaluation import (
    perfect_guess_probability,
    random_guess_precision,
    score_predictions,
    split_edges,
)
from .generators import barabasi_albert, erdos_renyi, watts_strogatz
from .graph import Graph, GraphFormatError, read_graph
from .metrics import Metric, metric_tokens, resolve_hub_limit
from .predictor import PredictConfig
from .topk import TieBreak


class UsageError(Exception):
    """Invalid arguments or unreadable inputs; maps to exit code 2."""


def _resolve_threads(value: Optional[int]) -> int:
    if value is None:
        env = os.environ.get("HUBLINK_THREADS")
        if env is not None:
            try:
                value = int(env)
            except ValueError:
                raise UsageError(f"HUBLINK_THREADS={env!r} is not an integer") from None
        else:
            value = os.cpu_count() or 1
    if value < 1:
        raise UsageError("threads must be >= 1")
    return value


def _parse_metric(token: str) -> Metric:
    try:
        return Metric.from_token(token)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _load_graph(path: str, fmt: str) -> Graph:
    try:
        return read_graph(path, fmt)
    except OSError as exc:
        raise UsageError(f"cannot read graph file: {exc}") from None
    except GraphFormatError as exc:
        raise UsageError(f"bad graph file {path}: {exc}") from None


def _make_config(metric: Metric, top: int, hub_limit_token: str, threshold: float,
                 threads: Optional[int], deterministic: bool) -> PredictConfig:
    if top < 1:
        raise UsageError("top must be >= 1")
    try:
        hub = resolve_hub_limit(metric, hub_limit_token)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return PredictConfig(
        metric=metric,
        max_predictions=top,
        score_threshold=threshold,
        hub_limit=hub,
        workers=_resolve_threads(threads),
        tie_break=TieBreak.DETERMINISTIC if deterministic else TieBreak.FAST,
    )


def _csv_writer(stream):
    return csv.writer(stream, lineterminator="\n")


def parse_hub_limits(text: str) -> list:
    """Parse a hub-limit list: integers, "inf", "auto", and geometric
    ranges "A..BxS" (e.g. "2..1024x2"). Duplicates are dropped."""
    out: list = []
    seen = set()
    for token in text.split(","):
        token = token.strip().lower()
        if not token:
            continue
        values: list
        if ".." in token:
            lo_s, _, rest = token.partition("..")
            hi_s, _, step_s = rest.partition("x")
            try:
                lo, hi = int(lo_s), int(hi_s)
                step = int(step_s) if step_s else 2
            except ValueError:
                raise UsageError(f"bad hub-limit range {token!r}") from None
            if lo < 1 or hi < lo or step < 2:
                raise UsageError(f"bad hub-limit range {token!r}")
            values = []
            v = lo
            while v <= hi:
                values.append(v)
                v *= step
        elif token in ("inf", "infinity"):
            values = [math.inf]
        elif token == "auto":
            values = ["auto"]
        else:
            try:
                values = [int(token)]
            except ValueError:
                raise UsageError(f"bad hub limit {token!r}") from None
            if values[0] < 1:
                raise UsageError(f"hub limit must be >= 1, got {token}")
        for v in values:
            if v not in seen:
                seen.add(v)
                out.append(v)
    return out


def _parse_fracs(text: str) -> list[float]:
    out = []
    for token in text.split(","):
        token = token.strip()
        if not token:
            continue
        try:
            f = float(token)
        except ValueError:
            raise UsageError(f"bad removal fraction {token!r}") from None
        if not 0.0 < f <= 1.0:
            raise UsageError(f"removal fraction must be in (0, 1], got {f}")
        out.append(f)
    return out


def _removal_count(g: Graph, frac: float) -> int:
    count = int(round(frac * g.edge_count))
    if count < 1:
        raise UsageError(f"removal fraction {frac} of {g.edge_count} edges leaves an empty truth set")
    return count


def _evaluate_once(graph_path: str, g: Graph, metric: Metric, hub_token, frac: float,
                   seed: int, top: Optional[int], threshold: float, threads: Optional[int],
                   deterministic: bool, repeat: int):
    remove_count = _removal_count(g, frac)
    split = split_edges(g, remove_count, seed)
    cfg = _make_config(metric, remove_count if top is None else top,
                       hub_token if isinstance(hub_token, str) else hub_limit_label(hub_token),
                       threshold, threads, deterministic)
    predictions, minimum, mean = timed_predict(split.observed, cfg, repeat)
    quality = score_predictions(predictions, split.unobserved)
    record = make_record(graph_path, cfg, minimum, mean,
                         seed=seed, removed=remove_count, quality=quality)
    return record, split, predictions


def cmd_predict(args) -> int:
    metric = _parse_metric(args.metric)
    g = _load_graph(args.graph, args.format)
    cfg = _make_config(metric, args.top, args.hub_limit, args.threshold,
                       args.threads, args.deterministic)
    predictions, minimum, _ = timed_predict(g, cfg, args.repeat)
    out = sys.stdout
    for p in predictions:
        out.write(f"{p.u}\t{p.v}\t{p.score:.9g}\n")
    print(
        f"scoring {minimum.scoring_seconds * 1e3:.3f} ms, "
        f"merging {minimum.merging_seconds * 1e3:.3f} ms, "
        f"total {minimum.total_seconds * 1e3:.3f} ms, "
        f"candidates {minimum.candidates_scored}, threads {cfg.workers}",
        file=sys.stderr,
    )
    return 0


def cmd_evaluate(args) -> int:
    metric = _parse_metric(args.metric)
    if not 0.0 < args.remove_frac <= 1.0:
        raise UsageError(f"remove-frac must be in (0, 1], got {args.remove_frac}")
    g = _load_graph(args.graph, args.format)
    record, split, _ = _evaluate_once(
        args.graph, g, metric, args.hub_limit, args.remove_frac, args.seed,
        args.top, args.threshold, args.threads, args.deterministic, args.repeat)
    n = g.vertex_count
    baseline = random_guess_precision(n, split.observed.edge_count, record.top)
    perfect = perfect_guess_probability(n, split.observed.edge_count, record.top)
    writer = _csv_writer(sys.stdout)
    writer.writerow(RUN_HEADER + ["random_baseline", "perfect_guess"])
    writer.writerow(record.to_row() + [repr(baseline), repr(perfect)])
    print(
        f"scoring {record.scoring_ms:.3f} ms, merging {record.merging_ms:.3f} ms, "
        f"total {record.total_ms:.3f} ms; f1 {record.f1!r} "
        f"(random per-guess baseline {baseline:.3g}, perfect-guess {perfect:.3g})",
        file=sys.stderr,
    )
    return 0


def cmd_sweep(args) -> int:
    metrics = [_parse_metric(tok) for tok in args.metrics.split(",") if tok.strip()]
    hub_limits = parse_hub_limits(args.hub_limits)
    fracs = _parse_fracs(args.remove_frac)
    if not metrics or not hub_limits or not fracs:
        raise UsageError("sweep grid is empty (need at least one metric, hub limit, and fraction)")
    g = _load_graph(args.graph, args.format)
    writer = _csv_writer(sys.stdout)
    writer.writerow(RUN_HEADER)
    for frac in fracs:
        for metric in metrics:
            for hub in hub_limits:
                record, _, _ = _evaluate_once(
                    args.graph, g, metric, hub, frac, args.seed,
                    args.top, args.threshold, args.threads, args.deterministic, args.repeat)
                writer.writerow(record.to_row())
    return 0


def cmd_scale(args) -> int:
    metric = _parse_metric(args.metric)
    if not 0.0 < args.remove_frac <= 1.0:
        raise UsageError(f"remove-frac must be in (0, 1], got {args.remove_frac}")
    try:
        threads_list = [int(t) for t in args.threads_list.split(",") if t.strip()]
    except ValueError:
        raise UsageError(f"bad threads list {args.threads_list!r}") from None
    if not threads_list or any(t < 1 for t in threads_list):
        raise UsageError("thread counts must be >= 1")
    g = _load_graph(args.graph, args.format)
    rows = []
    for t in threads_list:
        record, _, predictions = _evaluate_once(
            args.graph, g, metric, args.hub_limit, args.remove_frac, args.seed,
            args.top, args.threshold, t, args.deterministic, args.repeat)
        digest = hashlib.sha256(
            "".join(f"{p.u},{p.v};" for p in sorted(predictions)).encode()
        ).hexdigest()[:12]
        rows.append((record, digest))
    base = next((r for r, _ in rows if r.threads == 1), rows[0][0])
    writer = _csv_writer(sys.stdout)
    writer.writerow(RUN_HEADER + ["speedup", "prediction_hash"])
    for record, digest in rows:
        speedup = base.total_ms / record.total_ms if record.total_ms > 0 else float("nan")
        writer.writerow(record.to_row() + [repr(speedup), digest])
    return 0


def cmd_gen(args) -> int:
    n, m = args.n, args.m
    if n < 1 or m < 0:
        raise UsageError("need n >= 1 and m >= 0")
    if m > n * (n - 1) // 2:
        raise UsageError(f"{m} edges infeasible on {n} vertices")
    if args.model == "er":
        edges = erdos_renyi(n, m, args.seed)
    elif args.model == "ba":
        attach = max(1, round(m / n))
        if attach >= n:
            raise UsageError(f"{m} edges infeasible for preferential attachment on {n} vertices")
        edges = barabasi_albert(n, attach, args.seed)
    elif args.model == "ws":
        k = max(2, int(round(2 * m / n)) & ~1)
        try:
            edges = watts_strogatz(n, k, args.rewire, args.seed)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    else:  # pragma: no cover - argparse choices guard this
        raise UsageError(f"unknown model {args.model!r}")
    try:
        with open(args.out, "wt", buffering=1 << 20) as fh:
            for u, v in edges.pairs.tolist():
                fh.write(f"{u} {v}\n")
    except OSError as exc:
        raise UsageError(f"cannot write {args.out}: {exc}") from None
    print(f"wrote {len(edges)} edges on {edges.vertex_count_hint} vertices to {args.out}",
          file=sys.stderr)
    return 0


def _add_common_predict_flags(p: argparse.ArgumentParser, with_hub: bool = True) -> None:
    p.add_argument("--graph", required=True, help="path to the input graph file")
    p.add_argument("--format", choices=["auto", "edgelist", "mtx"], default="auto",
                   help="input format (default: by extension)")
    if with_hub:
        p.add_argument("--hub-limit", default="inf",
                       help="degree cap for explored intermediates: integer, 'inf', or 'auto'")
    p.add_argument("--threshold", type=float, default=0.0,
                   help="emit only scores strictly above this value")
    p.add_argument("--threads", type=int, default=None,
                   help="worker threads (default: HUBLINK_THREADS or CPU count)")
    p.add_argument("--deterministic", action="store_true",
                   help="order tied scores by (u, v) for reproducible output")
    p.add_argument("--repeat", type=int, default=1,
                   help="timing repetitions; minimum and mean are both reported")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hublink",
        description="Neighborhood-based link prediction on undirected graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("predict", help="print the top-k predicted edges as TSV")
    _add_common_predict_flags(p)
    p.add_argument("--metric", required=True, help=f"one of {', '.join(metric_tokens())}")
    p.add_argument("--top", type=int, required=True, help="maximum number of edges to predict")
    p.set_defaults(func=cmd_predict)

    p = sub.add_parser("evaluate", help="split, predict, and score one configuration")
    _add_common_predict_flags(p)
    p.add_argument("--metric", required=True)
    p.add_argument("--remove-frac", type=float, required=True,
                   help="fraction of edges to remove as ground truth, in (0, 1]")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--top", type=int, default=None,
                   help="prediction budget (default: the removal count)")
    p.set_defaults(func=cmd_evaluate)

    p = sub.add_parser("sweep", help="grid of metric x hub limit x removal fraction")
    _add_common_predict_flags(p, with_hub=False)
    p.add_argument("--metrics", required=True, help="comma-separated metric list")
    p.add_argument("--hub-limits", required=True,
                   help="comma list of limits; ranges like 2..1024x2; 'inf'; 'auto'")
    p.add_argument("--remove-frac", required=True, help="comma-separated fractions in (0, 1]")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--top", type=int, default=None)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("scale", help="strong-scaling rows across thread counts")
    _add_common_predict_flags(p)
    p.add_argument("--metric", required=True)
    p.add_argument("--threads-list", required=True, help="comma-separated thread counts")
    p.add_argument("--remove-frac", type=float, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--top", type=int, default=None)
    p.set_defaults(func=cmd_scale)

    p = sub.add_parser("gen", help="write a seeded synthetic graph as an edge list")
    p.add_argument("--model", choices=["er", "ba", "ws"], required=True)
    p.add_argument("--n", type=int, required=True, help="vertex count")
    p.add_argument("--m", type=int, required=True, help="(approximate) edge count")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--out", required=True, help="output path")
    p.add_argument("--rewire", type=float, default=0.05,
                   help="rewiring probability for the ws model")
    p.set_defaults(func=cmd_gen)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BrokenPipeError:
        return 1
    except Exception as exc:  # runtime failure
        print(f"runtime failure: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
