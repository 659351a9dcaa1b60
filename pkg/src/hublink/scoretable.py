"""Collision-free per-worker score accumulator.

A dense float array indexed directly by vertex id plus a compact list of
touched keys. Accumulation is O(1) with no hashing; reset walks only the
touched keys, never the full array. Zero doubles as the "absent" value:
metric contributions are strictly positive, and erasure writes zero, so
iteration can skip dead entries by value alone.
"""

from __future__ import annotations

import numpy as np


class ScoreTable:
    """Per-worker accumulator over vertex ids [0, size).

    Never shared: each worker owns exactly one table for the lifetime of a
    prediction run and drains it once per source vertex.
    """

    __slots__ = ("size", "values", "keys", "touched", "key_count", "last_drain_writes")

    def __init__(self, size: int):
        self.size = int(size)
        self.values = np.zeros(self.size, dtype=np.float64)
        self.keys = np.empty(self.size, dtype=np.int64)
        # Membership flags keep each key listed exactly once even when a
        # key is erased and later re-accumulated before the next drain.
        self.touched = np.zeros(self.size, dtype=np.bool_)
        self.key_count = 0
        self.last_drain_writes = 0

    def accumulate(self, c: int, delta: float) -> None:
        if not 0 <= c < self.size:
            raise IndexError(f"key {c} out of range [0, {self.size})")
        self.values[c] += delta
        if not self.touched[c]:
            self.touched[c] = True
            self.keys[self.key_count] = c
            self.key_count += 1

    def erase(self, c: int) -> None:
        """Zero an entry; its key (if listed) stays until the next drain."""
        if not 0 <= c < self.size:
            raise IndexError(f"key {c} out of range [0, {self.size})")
        self.values[c] = 0.0

    def drain(self) -> list[tuple[int, float]]:
        """Return every live (key, value) pair and reset the table.

        Cost is proportional to the number of touched keys (two writes per
        key), independent of the table size.
        """
        out = []
        writes = 0
        for i in range(self.key_count):
            c = int(self.keys[i])
            value = self.values[c]
            if value > 0.0:
                out.append((c, float(value)))
                self.values[c] = 0.0
                writes += 1
            self.touched[c] = False
            writes += 1
        self.key_count = 0
        self.last_drain_writes = writes
        return out

    def __len__(self) -> int:
        return self.key_count
