"""Compiled inner loops for the scoring and merging phases.

These kernels release the GIL so plain Python threads scale across cores.
Each worker passes in its own dense value/key/flag arrays (the score
table) and its own bounded prediction arrays (score/u/v plus a state
cell); nothing here is shared between workers.

Metric ids and formulas mirror hublink.metrics; they are duplicated here
because numba compiles plain scalar code, not the enum-based Python API.
"""

from __future__ import annotations

import numpy as np
from numba import njit

# Metric ids (must match hublink.metrics.Metric values).
_CN, _JC, _SI, _SC, _HP, _HD, _LHN, _AA, _RA = range(9)

# state cells (int64[8], one per worker, padded to its own cache line)
_ST_LEN = 0     # current prediction-list length
_ST_CAND = 1    # candidate pairs scored so far


@njit(nogil=True, cache=True, inline="always")
def _worse(s1, u1, v1, s2, u2, v2, deterministic):
    # True when entry 1 ranks strictly below entry 2.
    if s1 != s2:
        return s1 < s2
    if not deterministic:
        return False
    if u1 != u2:
        return u1 > u2
    return v1 > v2


@njit(nogil=True, cache=True)
def _sift_down(ps, pu, pv, n, i, deterministic):
    # Min-heap on rank: the root is the weakest retained prediction.
    while True:
        left = 2 * i + 1
        right = left + 1
        worst = i
        if left < n and _worse(ps[left], pu[left], pv[left], ps[worst], pu[worst], pv[worst], deterministic):
            worst = left
        if right < n and _worse(ps[right], pu[right], pv[right], ps[worst], pu[worst], pv[worst], deterministic):
            worst = right
        if worst == i:
            return
        ps[i], ps[worst] = ps[worst], ps[i]
        pu[i], pu[worst] = pu[worst], pu[i]
        pv[i], pv[worst] = pv[worst], pv[i]
        i = worst


@njit(nogil=True, cache=True)
def _offer(ps, pu, pv, length, s, u, v, deterministic):
    cap = ps.shape[0]
    if length < cap:
        ps[length] = s
        pu[length] = u
        pv[length] = v
        length += 1
        if length == cap:
            # Lazy heapification: only once the list is full.
            for i in range(cap // 2 - 1, -1, -1):
                _sift_down(ps, pu, pv, cap, i, deterministic)
        return length
    if not _worse(s, u, v, ps[0], pu[0], pv[0], deterministic):
        ps[0] = s
        pu[0] = u
        pv[0] = v
        _sift_down(ps, pu, pv, cap, 0, deterministic)
    return length


@njit(nogil=True, cache=True)
def score_range(offsets, adjacency, a_start, a_stop, metric, hub_limit, threshold,
                values, keys, touched, pred_score, pred_u, pred_v, state, deterministic):
    """Score every source vertex in [a_start, a_stop).

    For each vertex a: walk neighbors b (skipping those above the hub
    limit), accumulate one contribution per reachable second-order vertex
    c > a, zero out first-order neighbors, then finalize each surviving
    accumulator and offer it to the worker's bounded prediction list.
    """
    length = state[_ST_LEN]
    candidates = state[_ST_CAND]
    for a in range(a_start, a_stop):
        kc = 0
        for bi in range(offsets[a], offsets[a + 1]):
            b = adjacency[bi]
            deg_b = offsets[b + 1] - offsets[b]
            # A degree-1 intermediate only leads back to a itself; skipping
            # it also keeps AA's log(deg_b) away from log(1) = 0.
            if deg_b > hub_limit or deg_b < 2:
                continue
            if metric == _AA:
                w = 1.0 / np.log(np.float64(deg_b))
            elif metric == _RA:
                w = 1.0 / np.float64(deg_b)
            else:
                w = 1.0
            for ci in range(offsets[b], offsets[b + 1]):
                c = adjacency[ci]
                if c <= a:
                    continue
                if not touched[c]:
                    touched[c] = True
                    keys[kc] = c
                    kc += 1
                values[c] += w
        # First-order neighbors are not candidates: zero their entries.
        for bi in range(offsets[a], offsets[a + 1]):
            values[adjacency[bi]] = 0.0
        deg_a = offsets[a + 1] - offsets[a]
        for ki in range(kc):
            c = keys[ki]
            acc = values[c]
            values[c] = 0.0
            touched[c] = False
            if acc <= 0.0:
                continue
            candidates += 1
            deg_c = offsets[c + 1] - offsets[c]
            if metric == _JC:
                score = acc / np.float64(deg_a + deg_c - acc)
            elif metric == _SI:
                score = acc / np.float64(deg_a + deg_c)
            elif metric == _SC:
                score = acc / np.sqrt(np.float64(deg_a) * np.float64(deg_c))
            elif metric == _HP:
                score = acc / np.float64(min(deg_a, deg_c))
            elif metric == _HD:
                score = acc / np.float64(max(deg_a, deg_c))
            elif metric == _LHN:
                score = acc / np.float64(deg_a * deg_c)
            else:
                score = acc  # CN, AA, RA
            if score <= threshold:
                continue
            length = _offer(pred_score, pred_u, pred_v, length, score, a, c, deterministic)
    state[_ST_LEN] = length
    state[_ST_CAND] = candidates


@njit(nogil=True, cache=True, inline="always")
def _head_better(p1, p2, run_score, run_u, run_v, deterministic):
    s1 = run_score[p1]
    s2 = run_score[p2]
    if s1 != s2:
        return s1 > s2
    if not deterministic:
        return False
    if run_u[p1] != run_u[p2]:
        return run_u[p1] < run_u[p2]
    return run_v[p1] < run_v[p2]


@njit(nogil=True, cache=True)
def _sift_heads(heap, pos, hn, i, run_score, run_u, run_v, deterministic):
    while True:
        left = 2 * i + 1
        right = left + 1
        best = i
        if left < hn and _head_better(pos[heap[left]], pos[heap[best]], run_score, run_u, run_v, deterministic):
            best = left
        if right < hn and _head_better(pos[heap[right]], pos[heap[best]], run_score, run_u, run_v, deterministic):
            best = right
        if best == i:
            return
        heap[i], heap[best] = heap[best], heap[i]
        i = best


@njit(nogil=True, cache=True)
def merge_runs(run_score, run_u, run_v, run_offsets, n_p, deterministic,
               out_score, out_u, out_v):
    """Merge best-first sorted runs into the global top-n_p via a max-heap
    of run heads. Returns the number of predictions written."""
    runs = run_offsets.shape[0] - 1
    heap = np.empty(runs, dtype=np.int64)
    pos = np.empty(runs, dtype=np.int64)
    hn = 0
    for t in range(runs):
        pos[t] = run_offsets[t]
        if run_offsets[t] < run_offsets[t + 1]:
            heap[hn] = t
            hn += 1
    for i in range(hn // 2 - 1, -1, -1):
        _sift_heads(heap, pos, hn, i, run_score, run_u, run_v, deterministic)
    count = 0
    while hn > 0 and count < n_p:
        t = heap[0]
        p = pos[t]
        out_score[count] = run_score[p]
        out_u[count] = run_u[p]
        out_v[count] = run_v[p]
        count += 1
        pos[t] = p + 1
        if pos[t] == run_offsets[t + 1]:
            heap[0] = heap[hn - 1]
            hn -= 1
        _sift_heads(heap, pos, hn, 0, run_score, run_u, run_v, deterministic)
    return count


def warm_up() -> None:
    """Force JIT compilation of all kernels on a two-vertex graph."""
    offsets = np.array([0, 1, 2], dtype=np.int64)
    adjacency = np.array([1, 0], dtype=np.int32)
    values = np.zeros(2, dtype=np.float64)
    keys = np.empty(2, dtype=np.int64)
    touched = np.zeros(2, dtype=np.bool_)
    ps = np.empty(1, dtype=np.float64)
    pu = np.empty(1, dtype=np.int64)
    pv = np.empty(1, dtype=np.int64)
    state = np.zeros(8, dtype=np.int64)
    for det in (False, True):
        state[:] = 0
        score_range(offsets, adjacency, 0, 2, _CN, 2**62, 0.0,
                    values, keys, touched, ps, pu, pv, state, det)
        merge_runs(np.zeros(1), np.zeros(1, np.int64), np.zeros(1, np.int64),
                   np.array([0, 1], dtype=np.int64), 1, det,
                   ps, pu, pv)
