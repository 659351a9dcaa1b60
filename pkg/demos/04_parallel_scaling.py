"""
Worker scaling and the two phases
=================================

Prediction runs in two phases: a parallel scoring phase (worker threads
claim 2048-vertex chunks from a shared counter, each with a private
score table and top-k list) and a sequential merging phase (sorted
per-worker lists combined through a max-heap of their heads).

Scoring scales with workers; merging does not, so its share grows as
threads are added. Deterministic mode also shows that the output is
independent of the worker count.
"""

import os

import hublink as hl

print("generating ...")
g = hl.build_graph(hl.erdos_renyi(100_000, 1_000_000, seed=7))
print(g, f"(machine has {os.cpu_count()} cpus)")

# Warm the compiled kernels before timing.
hl.predict_links(hl.build_graph(hl.EdgeList.from_pairs([(0, 1), (1, 2)])),
                 hl.PredictConfig(metric=hl.Metric.RA, max_predictions=1))

baseline = None
reference = None
print(f"\n{'workers':>8} {'scoring s':>10} {'merging s':>10} {'speedup':>8} {'same output':>12}")
for workers in (1, 2, 4, 8):
    cfg = hl.PredictConfig(
        metric=hl.Metric.RA,
        max_predictions=5000,
        workers=workers,
        tie_break=hl.TieBreak.DETERMINISTIC,
    )
    predictions, stats = hl.predict_links_timed(g, cfg)
    if baseline is None:
        baseline = stats.total_seconds
        reference = predictions
    print(f"{workers:>8} {stats.scoring_seconds:>10.3f} {stats.merging_seconds:>10.4f} "
          f"{baseline / stats.total_seconds:>8.2f} {str(predictions == reference):>12}")

print("\nthe same run through the scheduler's eyes: chunks are claimed")
print("dynamically, so a slow worker simply claims fewer of them.")
sched = hl.partition_schedule(10_000, workers=2)
spans = []
while (span := sched.claim()) is not None:
    spans.append(span)
print("chunks for 10k vertices:", spans)
