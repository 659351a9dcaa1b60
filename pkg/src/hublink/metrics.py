"""Neighborhood similarity metrics.

Every metric scores a vertex pair (a, c) from the vertices b adjacent to
both. Scanning accumulates one contribution per common neighbor
(1 for count-type metrics, 1/ln(deg_b) for AA, 1/deg_b for RA);
finalization turns the accumulated value into the metric score using only
the endpoint degrees.
"""

from __future__ import annotations

import math
from enum import IntEnum


class Metric(IntEnum):
    CN = 0    # common neighbor count
    JC = 1    # Jaccard coefficient
    SI = 2    # Sorensen index
    SC = 3    # Salton cosine
    HP = 4    # hub promoted
    HD = 5    # hub depressed
    LHN = 6   # Leicht-Holme-Newman
    AA = 7    # Adamic-Adar
    RA = 8    # resource allocation

    @classmethod
    def from_token(cls, token: str) -> "Metric":
        try:
            return cls[token.strip().upper()]
        except KeyError:
            raise ValueError(f"unknown metric {token!r}; choose from {metric_tokens()}") from None

    @property
    def token(self) -> str:
        return self.name.lower()


def metric_tokens() -> list[str]:
    return [m.token for m in Metric]


def contribution(metric: Metric, deg_b: int) -> float:
    """Per-common-neighbor increment for a shared neighbor b of degree deg_b."""
    if deg_b < 1:
        raise ValueError(f"degree must be >= 1, got {deg_b}")
    if metric == Metric.AA:
        if deg_b < 2:
            raise ValueError("AA contribution undefined for degree-1 neighbor (log 1 = 0)")
        return 1.0 / math.log(deg_b)
    if metric == Metric.RA:
        return 1.0 / deg_b
    return 1.0


def finalize(metric: Metric, acc: float, deg_a: int, deg_c: int) -> float:
    """Turn an accumulated value into the metric score for endpoints of the
    given degrees. Callers only finalize positive accumulators, so every
    denominator is strictly positive."""
    if metric == Metric.JC:
        return acc / (deg_a + deg_c - acc)
    if metric == Metric.SI:
        return acc / (deg_a + deg_c)
    if metric == Metric.SC:
        return acc / math.sqrt(deg_a * deg_c)
    if metric == Metric.HP:
        return acc / min(deg_a, deg_c)
    if metric == Metric.HD:
        return acc / max(deg_a, deg_c)
    if metric == Metric.LHN:
        return acc / (deg_a * deg_c)
    return acc  # CN, AA, RA: the accumulator already is the score


# Degree thresholds that work well per metric when the caller asks for an
# automatic hub limit: tight for HP/LHN, moderate for CN/AA, loose otherwise.
AUTO_HUB_LIMITS: dict[Metric, int] = {
    Metric.HP: 4,
    Metric.LHN: 4,
    Metric.CN: 32,
    Metric.AA: 32,
    Metric.JC: 256,
    Metric.SI: 256,
    Metric.SC: 256,
    Metric.HD: 256,
    Metric.RA: 256,
}


def resolve_hub_limit(metric: Metric, hub_limit: int | float | str) -> int | float:
    """Resolve a user-facing hub limit ("auto", "inf", or a number)."""
    if isinstance(hub_limit, str):
        token = hub_limit.strip().lower()
        if token == "auto":
            return AUTO_HUB_LIMITS[metric]
        if token in ("inf", "infinity"):
            return math.inf
        try:
            hub_limit = int(token)
        except ValueError:
            raise ValueError(f"invalid hub limit {hub_limit!r}") from None
    if hub_limit != math.inf:
        hub_limit = int(hub_limit)
        if hub_limit < 1:
            raise ValueError(f"hub limit must be >= 1 or inf, got {hub_limit}")
    return hub_limit
