"""Immutable simple-graph representation, BFS distances, and file I/O.

Graphs are finite, simple, undirected, and unweighted. Vertices are the
integers 0..n-1. Distances are hop counts; -1 marks unreachable pairs.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Optional, Sequence

UNREACHABLE = -1

# Full all-pairs matrices are only built below this vertex count; larger
# graphs fall back to per-root BFS on demand.
FULL_MATRIX_BOUND = 4096


class GraphError(ValueError):
    """Invalid graph construction or input."""


class ParseError(GraphError):
    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class DisconnectedGraphError(GraphError):
    """Operation requires a connected graph."""


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[frozenset[int], ...]
    labels: Optional[tuple[str, ...]] = field(default=None, compare=False)

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adj[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    @cached_property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return tuple(
            (u, v) for u in range(self.n) for v in sorted(self.adj[u]) if u < v
        )

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @cached_property
    def sorted_adj(self) -> tuple[tuple[int, ...], ...]:
        """Neighbor lists in ascending order, for deterministic traversals."""
        return tuple(tuple(sorted(s)) for s in self.adj)

    @cached_property
    def distance_matrix(self) -> "DistanceMatrix":
        return all_pairs_distances(self)

    def label_index(self, label: str) -> int:
        if self.labels is None:
            raise KeyError(label)
        return self.labels.index(label)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count})"


@dataclass(frozen=True)
class DistanceMatrix:
    """Hop-count table for one graph; row(v) is the BFS distance vector."""

    n: int
    rows: tuple[tuple[int, ...], ...]

    def dist(self, u: int, v: int) -> int:
        return self.rows[u][v]

    def row(self, v: int) -> tuple[int, ...]:
        return self.rows[v]

    def set_distance(self, xs: Iterable[int], ys: Iterable[int]) -> int:
        """Minimum distance between two vertex sets (-1 if unreachable)."""
        ys = list(ys)
        best = UNREACHABLE
        for x in xs:
            rx = self.rows[x]
            for y in ys:
                d = rx[y]
                if d != UNREACHABLE and (best == UNREACHABLE or d < best):
                    best = d
        return best


def bfs_distances(g: Graph, source: int) -> tuple[int, ...]:
    dist = [UNREACHABLE] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        x = queue.popleft()
        dx = dist[x]
        for y in g.adj[x]:
            if dist[y] == UNREACHABLE:
                dist[y] = dx + 1
                queue.append(y)
    return tuple(dist)


def all_pairs_distances(g: Graph) -> DistanceMatrix:
    if g.n > FULL_MATRIX_BOUND:
        raise GraphError(
            f"graph with {g.n} vertices exceeds the full-matrix bound "
            f"({FULL_MATRIX_BOUND}); use bfs_distances per root"
        )
    return DistanceMatrix(g.n, tuple(bfs_distances(g, v) for v in range(g.n)))


def build_graph(
    edges: Iterable[tuple[int, int]],
    n: int,
    labels: Optional[Sequence[str]] = None,
) -> Graph:
    """Validate and build a Graph from an edge list on vertices 0..n-1.

    Duplicate edges (in either orientation) are collapsed; self-loops are
    rejected.
    """
    if n < 0:
        raise GraphError(f"negative vertex count {n}")
    adj: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        if not (0 <= u < n) or not (0 <= v < n):
            raise IndexError(f"edge ({u},{v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        adj[u].add(v)
        adj[v].add(u)
    lab = None
    if labels is not None:
        if len(labels) != n:
            raise GraphError(f"{len(labels)} labels for {n} vertices")
        lab = tuple(labels)
    return Graph(n, tuple(frozenset(s) for s in adj), lab)


def is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    return UNREACHABLE not in bfs_distances(g, 0)


def require_connected(g: Graph) -> None:
    if not is_connected(g):
        raise DisconnectedGraphError("graph is not connected")


# --- file formats ---------------------------------------------------------
#
# Edge-list text: first non-comment line is the vertex count, then one edge
# "u v" per line; '#' starts a comment.
# JSON: {"n": int, "edges": [[u, v], ...], "labels": [...] (optional)}.


def parse_edge_list(text: str) -> Graph:
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if n is None:
            if len(parts) != 1:
                raise ParseError("expected a single vertex count", lineno)
            try:
                n = int(parts[0])
            except ValueError:
                raise ParseError(f"bad vertex count {parts[0]!r}", lineno) from None
            continue
        if len(parts) != 2:
            raise ParseError(f"expected 'u v', got {line!r}", lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"non-integer endpoint in {line!r}", lineno) from None
        edges.append((u, v))
    if n is None:
        raise ParseError("empty input: missing vertex count")
    try:
        return build_graph(edges, n)
    except (GraphError, IndexError) as exc:
        raise ParseError(str(exc)) from exc


def format_edge_list(g: Graph) -> str:
    lines = [str(g.n)]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def parse_graph_json(text: str) -> Graph:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"bad JSON: {exc}") from exc
    if not isinstance(obj, dict) or "n" not in obj or "edges" not in obj:
        raise ParseError('JSON graph needs "n" and "edges" fields')
    edges = [tuple(e) for e in obj["edges"]]
    try:
        return build_graph(edges, int(obj["n"]), obj.get("labels"))
    except (GraphError, IndexError, TypeError) as exc:
        raise ParseError(str(exc)) from exc


def format_graph_json(g: Graph) -> str:
    obj: dict = {"n": g.n, "edges": [list(e) for e in g.edges]}
    if g.labels is not None:
        obj["labels"] = list(g.labels)
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


def read_graph(path_or_text, fmt: str = "edge-list") -> Graph:
    """Read a graph from a path, file object, or raw text."""
    text = _slurp(path_or_text)
    if fmt == "edge-list":
        return parse_edge_list(text)
    if fmt == "json":
        return parse_graph_json(text)
    raise GraphError(f"unknown format {fmt!r}")


def write_graph(g: Graph, fmt: str = "edge-list") -> str:
    if fmt == "edge-list":
        return format_edge_list(g)
    if fmt == "json":
        return format_graph_json(g)
    raise GraphError(f"unknown format {fmt!r}")


def _slurp(src) -> str:
    if hasattr(src, "read"):
        return src.read()
    text = str(src)
    if "\n" not in text:
        try:
            with open(text, "r", encoding="utf-8") as fh:
                return fh.read()
        except OSError:
            pass
    return text
