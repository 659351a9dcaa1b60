"""Seeded synthetic graph generators for tests and benchmark runs.

All three return an EdgeList of distinct undirected edges and are fully
reproducible from their seed.
"""

from __future__ import annotations

import numpy as np

from .graph import EdgeList

# Above this many candidate pairs, uniform edge sampling switches from an
# exact without-replacement draw to batched rejection sampling.
_DENSE_PAIR_LIMIT = 4_000_000


def erdos_renyi(n: int, m: int, seed: int) -> EdgeList:
    """G(n, m): exactly m distinct edges chosen uniformly among all pairs."""
    total = n * (n - 1) // 2
    if m < 0 or m > total:
        raise ValueError(f"cannot place {m} edges among {total} possible pairs")
    rng = np.random.default_rng(seed)
    if m == 0:
        return EdgeList(pairs=np.empty((0, 2), dtype=np.int64), vertex_count_hint=n)
    if total <= _DENSE_PAIR_LIMIT:
        codes = np.sort(rng.choice(total, size=m, replace=False).astype(np.int64))
        # Decode rank -> (u, v): cum[u] pairs precede first coordinate u.
        u_ids = np.arange(n, dtype=np.int64)
        cum = u_ids * (n - 1) - (u_ids * (u_ids - 1)) // 2
        us = np.searchsorted(cum, codes, side="right") - 1
        vs = codes - cum[us] + us + 1
    else:
        chosen = np.empty(0, dtype=np.int64)
        while chosen.size < m:
            need = m - chosen.size
            batch = rng.integers(0, n, size=(int(need * 1.3) + 16, 2), dtype=np.int64)
            batch = batch[batch[:, 0] != batch[:, 1]]
            lo = np.minimum(batch[:, 0], batch[:, 1])
            hi = np.maximum(batch[:, 0], batch[:, 1])
            codes = np.concatenate([chosen, lo * n + hi])
            _, first = np.unique(codes, return_index=True)
            first.sort()
            chosen = codes[first]
        chosen = chosen[:m]
        us = chosen // n
        vs = chosen % n
    return EdgeList(pairs=np.column_stack([us, vs]), vertex_count_hint=n)


def barabasi_albert(n: int, attach: int, seed: int, triad: float = 0.0) -> EdgeList:
    """Preferential attachment: start from a clique on attach+1 vertices,
    then each new vertex links to ``attach`` distinct existing vertices
    chosen proportionally to degree.

    ``triad`` sets the probability that each follow-up target is drawn
    from the previous target's neighbors instead (triad closure), which
    adds the local clustering real scale-free networks show; 0 keeps the
    classic model.
    """
    if attach < 1 or attach >= n:
        raise ValueError(f"attachment count {attach} must be in [1, n)")
    if not 0.0 <= triad <= 1.0:
        raise ValueError("triad probability must be in [0, 1]")
    rng = np.random.default_rng(seed)
    core = attach + 1
    core_edges = [(i, j) for i in range(core) for j in range(i + 1, core)]
    total_edges = len(core_edges) + (n - core) * attach
    pairs = np.empty((total_edges, 2), dtype=np.int64)
    # Every edge endpoint lands in ``rep``; sampling an index of ``rep``
    # uniformly realizes degree-proportional target selection.
    rep = np.empty(2 * total_edges, dtype=np.int64)
    adj: list[list[int]] = [[] for _ in range(n)] if triad > 0.0 else []
    e = 0
    fill = 0
    for i, j in core_edges:
        pairs[e, 0], pairs[e, 1] = i, j
        rep[fill], rep[fill + 1] = i, j
        if triad > 0.0:
            adj[i].append(j)
            adj[j].append(i)
        e += 1
        fill += 2
    for t in range(core, n):
        targets: set[int] = set()
        last = -1
        while len(targets) < attach:
            tgt = -1
            if triad > 0.0 and last >= 0 and rng.random() < triad:
                nbrs = adj[last]
                cand = int(nbrs[rng.integers(0, len(nbrs))])
                if cand != t and cand not in targets:
                    tgt = cand
            if tgt < 0:
                cand = int(rep[rng.integers(0, fill)])
                if cand in targets:
                    continue
                tgt = cand
            targets.add(tgt)
            last = tgt
        for tgt in sorted(targets):
            pairs[e, 0], pairs[e, 1] = t, tgt
            rep[fill], rep[fill + 1] = t, tgt
            if triad > 0.0:
                adj[t].append(tgt)
                adj[tgt].append(t)
            e += 1
            fill += 2
    return EdgeList(pairs=pairs, vertex_count_hint=n)


def watts_strogatz(n: int, k: int, rewire: float, seed: int) -> EdgeList:
    """Ring lattice (each vertex tied to its k nearest) with each edge
    rewired to a random target with the given probability."""
    if k < 2 or k % 2 != 0:
        raise ValueError(f"lattice degree k={k} must be even and >= 2")
    if k >= n - 1:
        raise ValueError(f"lattice degree k={k} must be < n-1")
    if not 0.0 <= rewire <= 1.0:
        raise ValueError("rewire probability must be in [0, 1]")
    rng = np.random.default_rng(seed)
    adj: list[set[int]] = [set() for _ in range(n)]
    edges: list[tuple[int, int]] = []
    for j in range(1, k // 2 + 1):
        for i in range(n):
            w = (i + j) % n
            edges.append((i, w))
            adj[i].add(w)
            adj[w].add(i)
    flips = rng.random(len(edges))
    for idx, (i, w) in enumerate(edges):
        if flips[idx] >= rewire:
            continue
        for _ in range(100):  # give up on pathological density
            cand = int(rng.integers(0, n))
            if cand != i and cand not in adj[i]:
                adj[i].discard(w)
                adj[w].discard(i)
                adj[i].add(cand)
                adj[cand].add(i)
                edges[idx] = (i, cand)
                break
    return EdgeList(pairs=np.asarray(edges, dtype=np.int64), vertex_count_hint=n)
