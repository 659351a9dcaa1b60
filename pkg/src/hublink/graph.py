"""Compact undirected graph storage and file ingestion.

Graphs are kept in compressed sparse row (CSR) form: an ``offsets`` array of
length N+1 and a flat ``adjacency`` array holding every neighbor list
back-to-back, sorted ascending. Each undirected edge is stored in both
directions, so ``offsets[N] == 2 * edge_count``. The structure is frozen
after construction and safe to share across worker threads.
"""

from __future__ import annotations

import io
from dataclasses import dataclass
from pathlib import Path
from typing import IO, Iterable, Iterator, Union

import numpy as np

MAX_VERTEX_ID = 2**31 - 1  # vertex ids must be representable in 32 bits

Source = Union[str, Path, bytes, IO]


class GraphFormatError(ValueError):
    """Raised when an input file cannot be parsed into an edge list."""


@dataclass
class EdgeList:
    """Raw (u, v) pairs staged for graph construction.

    ``pairs`` is an (m, 2) int64 array in input order; duplicates,
    self-loops and reverse edges are tolerated here and resolved by
    :func:`build_graph`.
    """

    pairs: np.ndarray
    vertex_count_hint: int = 0

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[int, int]], vertex_count_hint: int | None = None) -> "EdgeList":
        arr = np.asarray(list(pairs), dtype=np.int64).reshape(-1, 2)
        if vertex_count_hint is None:
            vertex_count_hint = int(arr.max()) + 1 if arr.size else 0
        return cls(pairs=arr, vertex_count_hint=vertex_count_hint)

    def __len__(self) -> int:
        return self.pairs.shape[0]

    def __iter__(self) -> Iterator[tuple[int, int]]:
        for u, v in self.pairs:
            yield int(u), int(v)


class Graph:
    """Immutable undirected graph in CSR form.

    Invariants (established by :func:`build_graph`):
      * no self-loops, no duplicate neighbors;
      * symmetric: u in neighbors(v) iff v in neighbors(u);
      * every neighbor list sorted ascending;
      * offsets non-decreasing with offsets[-1] == 2 * edge_count.
    """

    __slots__ = ("vertex_count", "edge_count", "offsets", "adjacency")

    def __init__(self, vertex_count: int, edge_count: int, offsets: np.ndarray, adjacency: np.ndarray):
        self.vertex_count = int(vertex_count)
        self.edge_count = int(edge_count)
        self.offsets = offsets
        self.adjacency = adjacency
        offsets.setflags(write=False)
        adjacency.setflags(write=False)

    def degree(self, v: int) -> int:
        if not 0 <= v < self.vertex_count:
            raise IndexError(f"vertex {v} out of range [0, {self.vertex_count})")
        return int(self.offsets[v + 1] - self.offsets[v])

    def neighbors(self, v: int) -> np.ndarray:
        if not 0 <= v < self.vertex_count:
            raise IndexError(f"vertex {v} out of range [0, {self.vertex_count})")
        return self.adjacency[self.offsets[v]:self.offsets[v + 1]]

    def has_edge(self, u: int, v: int) -> bool:
        nbrs = self.neighbors(u)
        i = np.searchsorted(nbrs, v)
        return bool(i < len(nbrs) and nbrs[i] == v)

    def degrees(self) -> np.ndarray:
        return np.diff(self.offsets)

    def max_degree(self) -> int:
        if self.vertex_count == 0:
            return 0
        return int(self.degrees().max())

    def unique_edges(self) -> tuple[np.ndarray, np.ndarray]:
        """All undirected edges once each, as parallel (us, vs) arrays with u < v."""
        row = np.repeat(np.arange(self.vertex_count, dtype=np.int64), np.diff(self.offsets))
        mask = self.adjacency > row
        return row[mask], self.adjacency[mask].astype(np.int64)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return (
            self.vertex_count == other.vertex_count
            and self.edge_count == other.edge_count
            and np.array_equal(self.offsets, other.offsets)
            and np.array_equal(self.adjacency, other.adjacency)
        )

    def __repr__(self) -> str:
        return f"Graph(vertices={self.vertex_count}, edges={self.edge_count})"


def _line_iter(source: Source) -> Iterator[str]:
    if isinstance(source, (str, Path)):
        with open(source, "rt") as fh:
            yield from fh
        return
    if isinstance(source, bytes):
        yield from io.StringIO(source.decode("utf-8"))
        return
    for line in source:
        yield line.decode("utf-8") if isinstance(line, bytes) else line


def load_edge_list(source: Source, comment_prefixes: frozenset[str] = frozenset("#%")) -> EdgeList:
    """Parse whitespace-separated "u v" lines into an EdgeList.

    Lines starting with a comment prefix and blank lines are skipped; an
    optional third (weight) column is parsed and discarded. Malformed
    tokens raise :class:`GraphFormatError` with the offending line number.
    """
    us: list[int] = []
    vs: list[int] = []
    for lineno, raw in enumerate(_line_iter(source), start=1):
        line = raw.strip()
        if not line or line[0] in comment_prefixes:
            continue
        parts = line.split()
        if len(parts) not in (2, 3):
            raise GraphFormatError(f"line {lineno}: expected 'u v [weight]', got {len(parts)} tokens")
        try:
            u = int(parts[0])
            v = int(parts[1])
            if len(parts) == 3:
                float(parts[2])  # weight: validated, ignored
        except ValueError:
            raise GraphFormatError(f"line {lineno}: malformed token in {line!r}") from None
        if u < 0 or v < 0:
            raise GraphFormatError(f"line {lineno}: negative vertex id")
        us.append(u)
        vs.append(v)
    if not us:
        return EdgeList(pairs=np.empty((0, 2), dtype=np.int64), vertex_count_hint=0)
    pairs = np.column_stack([np.asarray(us, dtype=np.int64), np.asarray(vs, dtype=np.int64)])
    return EdgeList(pairs=pairs, vertex_count_hint=int(pairs.max()) + 1)


def load_matrix_market(source: Source) -> EdgeList:
    """Parse a MatrixMarket coordinate file into an EdgeList.

    Only the stored triangle is emitted for symmetric banners; the build
    step symmetrizes either way. Entries are converted to 0-based ids.
    """
    lines = _line_iter(source)
    try:
        banner = next(lines)
    except StopIteration:
        raise GraphFormatError("empty input: missing MatrixMarket banner") from None
    tokens = banner.strip().split()
    if len(tokens) < 4 or tokens[0] != "%%MatrixMarket" or tokens[1].lower() != "matrix":
        raise GraphFormatError("missing '%%MatrixMarket matrix ...' banner")
    fmt = tokens[2].lower()
    if fmt != "coordinate":
        raise GraphFormatError(f"unsupported MatrixMarket format {fmt!r} (need 'coordinate')")
    symmetry = tokens[-1].lower()
    if symmetry not in ("general", "symmetric", "skew-symmetric", "hermitian"):
        raise GraphFormatError(f"unsupported MatrixMarket symmetry {symmetry!r}")

    rows = cols = nnz = -1
    lineno = 1
    for raw in lines:
        lineno += 1
        line = raw.strip()
        if not line or line.startswith("%"):
            continue
        parts = line.split()
        if rows < 0:
            if len(parts) != 3:
                raise GraphFormatError(f"line {lineno}: expected 'rows cols nnz' dimensions")
            try:
                rows, cols, nnz = int(parts[0]), int(parts[1]), int(parts[2])
            except ValueError:
                raise GraphFormatError(f"line {lineno}: malformed dimensions line") from None
            us = np.empty(nnz, dtype=np.int64)
            vs = np.empty(nnz, dtype=np.int64)
            count = 0
            continue
        if count >= nnz:
            raise GraphFormatError(f"line {lineno}: more entries than declared nnz={nnz}")
        try:
            i, j = int(parts[0]), int(parts[1])
        except (ValueError, IndexError):
            raise GraphFormatError(f"line {lineno}: malformed coordinate entry") from None
        if not (1 <= i <= rows and 1 <= j <= cols):
            raise GraphFormatError(f"line {lineno}: entry ({i}, {j}) outside declared {rows}x{cols} bounds")
        us[count] = i - 1
        vs[count] = j - 1
        count += 1
    if rows < 0:
        raise GraphFormatError("missing dimensions line")
    if count != nnz:
        raise GraphFormatError(f"expected {nnz} entries, found {count}")
    return EdgeList(pairs=np.column_stack([us, vs]), vertex_count_hint=max(rows, cols))


def build_graph(edges: EdgeList) -> Graph:
    """Normalize an edge list into a Graph.

    Self-loops are dropped, duplicates collapsed, every surviving edge
    stored in both directions, and neighbor lists sorted ascending.
    """
    pairs = edges.pairs
    hint = int(edges.vertex_count_hint)
    if pairs.shape[0] == 0:
        n = max(hint, 0)
        return Graph(n, 0, np.zeros(n + 1, dtype=np.int64), np.empty(0, dtype=np.int32))

    if pairs.min() < 0:
        raise ValueError("vertex ids must be non-negative")
    max_id = int(pairs.max())
    if max_id > MAX_VERTEX_ID:
        raise ValueError(f"vertex id {max_id} exceeds 32-bit range")
    n = max(hint, max_id + 1)

    keep = pairs[:, 0] != pairs[:, 1]
    p = pairs[keep]
    src = np.concatenate([p[:, 0], p[:, 1]])
    dst = np.concatenate([p[:, 1], p[:, 0]])
    order = np.lexsort((dst, src))
    src = src[order]
    dst = dst[order]
    if src.size:
        uniq = np.empty(src.size, dtype=bool)
        uniq[0] = True
        np.logical_or(src[1:] != src[:-1], dst[1:] != dst[:-1], out=uniq[1:])
        src = src[uniq]
        dst = dst[uniq]

    offsets = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(np.bincount(src, minlength=n), out=offsets[1:])
    return Graph(n, src.size // 2, offsets, dst.astype(np.int32))


def serialize(g: Graph) -> str:
    """Emit "u v" lines, one per undirected edge, u < v, lexicographic order."""
    us, vs = g.unique_edges()
    return "".join(f"{u} {v}\n" for u, v in zip(us.tolist(), vs.tolist()))


def write_edge_list(g: Graph, path: str | Path) -> None:
    us, vs = g.unique_edges()
    with open(path, "wt", buffering=1 << 20) as fh:
        for u, v in zip(us.tolist(), vs.tolist()):
            fh.write(f"{u} {v}\n")


def read_graph(path: str | Path, fmt: str = "auto") -> Graph:
    """Load a graph file as edge-list or MatrixMarket, then build."""
    if fmt == "auto":
        fmt = "mtx" if str(path).endswith(".mtx") else "edgelist"
    if fmt == "mtx":
        return build_graph(load_matrix_market(path))
    if fmt == "edgelist":
        return build_graph(load_edge_list(path))
    raise ValueError(f"unknown graph format {fmt!r}")
