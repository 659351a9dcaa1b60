"""
Evaluating prediction quality
=============================

The standard protocol: hide a random slice of edges, predict the same
number back on what remains, and score the overlap. Precision and recall
coincide when the budget equals the number of hidden edges, so F1 tells
the whole story with one number.
"""

import hublink as hl

g = hl.build_graph(hl.watts_strogatz(5_000, 10, 0.05, seed=11))
print(g)

# Hide 10% of the edges.
hidden = round(0.1 * g.edge_count)
split = hl.split_edges(g, hidden, seed=3)
print(f"hidden {len(split.unobserved)} edges; observed graph has "
      f"{split.observed.edge_count} (rng: {split.rng_algorithm})")

# How hard is this? A uniform random guesser hits with probability:
baseline = hl.random_guess_precision(
    g.vertex_count, split.observed.edge_count, hidden)
perfect = hl.perfect_guess_probability(
    g.vertex_count, split.observed.edge_count, hidden)
print(f"random per-guess baseline: {baseline:.2e}")
print(f"probability of guessing everything right: {perfect:.2e}")

print(f"\n{'metric':>6} {'precision':>10} {'recall':>8} {'f1':>8} {'vs random':>10}")
for metric in hl.Metric:
    cfg = hl.PredictConfig(
        metric=metric,
        max_predictions=hidden,
        hub_limit=hl.resolve_hub_limit(metric, "auto"),
        workers=2,
    )
    predictions = hl.predict_links(split.observed, cfg)
    report = hl.score_predictions(predictions, split.unobserved)
    lift = report.precision / baseline if baseline else float("nan")
    print(f"{metric.token:>6} {report.precision:>10.4f} {report.recall:>8.4f} "
          f"{report.f1:>8.4f} {lift:>9.0f}x")

# A report also serializes to a one-line CSV row for spreadsheets:
from hublink.evaluation import QUALITY_CSV_HEADER

print("\n" + QUALITY_CSV_HEADER)
print(report.csv_row("demo-graph", "ra", "256", hidden))
