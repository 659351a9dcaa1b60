"""Bounded per-worker prediction lists and the cross-worker merge.

Each worker keeps at most ``capacity`` predictions. The list is a plain
append buffer until it fills, then becomes a min-heap on score so the
weakest retained entry can be evicted in O(log k). Merging consumes the
per-worker lists in sorted order through a max-heap of list heads; the
lists are never concatenated, which keeps peak memory at O(k * workers)
instead of the union size.
"""

from __future__ import annotations

import heapq
from enum import Enum
from typing import Iterable, NamedTuple, Sequence


class Prediction(NamedTuple):
    u: int
    v: int
    score: float


class TieBreak(Enum):
    """How score ties are resolved.

    FAST leaves tied-edge identity to chance (the retained score multiset
    is still exact); DETERMINISTIC orders ties by (u, v) ascending
    everywhere, making runs reproducible at any worker count.
    """

    FAST = "fast"
    DETERMINISTIC = "deterministic"


def _rank_key(p: Prediction, tie_break: TieBreak):
    # Larger key = better. Under DETERMINISTIC, ties favor small (u, v).
    if tie_break is TieBreak.DETERMINISTIC:
        return (p.score, -p.u, -p.v)
    return p.score


class PredictionList:
    """Bounded buffer retaining the top-``capacity`` predictions offered."""

    __slots__ = ("capacity", "tie_break", "_heap", "heapified")

    def __init__(self, capacity: int, tie_break: TieBreak = TieBreak.FAST):
        if capacity < 1:
            raise ValueError("capacity must be >= 1")
        self.capacity = capacity
        self.tie_break = tie_break
        self._heap: list[tuple] = []  # (rank_key, Prediction)
        self.heapified = False

    def __len__(self) -> int:
        return len(self._heap)

    @property
    def items(self) -> list[Prediction]:
        return [entry[1] for entry in self._heap]

    def offer(self, p: Prediction) -> None:
        entry = (_rank_key(p, self.tie_break), p)
        if len(self._heap) < self.capacity:
            self._heap.append(entry)
            if len(self._heap) == self.capacity:
                heapq.heapify(self._heap)
                self.heapified = True
            return
        # Full: a newcomer at least as good as the weakest entry replaces it.
        if entry[0] >= self._heap[0][0]:
            heapq.heapreplace(self._heap, entry)

    def sorted_items(self) -> list[Prediction]:
        """Retained predictions, best first."""
        return [e[1] for e in sorted(self._heap, key=lambda e: e[0], reverse=True)]


def merge(lists: Sequence[PredictionList] | Iterable[Sequence[Prediction]],
          n_p: int,
          tie_break: TieBreak = TieBreak.FAST) -> list[Prediction]:
    """Combine finalized per-worker lists into the global top-``n_p``.

    Each list is sorted best-first, then a max-heap over the list heads
    yields predictions in non-increasing order until ``n_p`` are taken or
    every list is exhausted.
    """
    runs: list[list[Prediction]] = []
    for lst in lists:
        if isinstance(lst, PredictionList):
            runs.append(lst.sorted_items())
        else:
            runs.append(sorted(lst, key=lambda p: _rank_key(p, tie_break), reverse=True))

    def heap_key(p: Prediction):
        # heapq is a min-heap; negate the rank so the best head pops first.
        if tie_break is TieBreak.DETERMINISTIC:
            return (-p.score, p.u, p.v)
        return -p.score

    heads = [(heap_key(run[0]), t, 0) for t, run in enumerate(runs) if run]
    heapq.heapify(heads)
    out: list[Prediction] = []
    while heads and len(out) < n_p:
        _, t, i = heapq.heappop(heads)
        out.append(runs[t][i])
        if i + 1 < len(runs[t]):
            heapq.heappush(heads, (heap_key(runs[t][i + 1]), t, i + 1))
    return out
