"""Root-oriented acyclic graph and its comparability (poset) queries.

For a connected graph and a root r, drop every edge joining two vertices at
equal distance from r and orient the remaining edges toward r. Two vertices
are comparable when a directed path joins them; an antichain is a set of
pairwise-incomparable vertices.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .graph import Graph, GraphError, bfs_distances, require_connected


@dataclass(frozen=True)
class RootedDag:
    graph: Graph
    root: int
    level: tuple[int, ...]
    # down[v] = neighbors of v one level closer to the root, ascending.
    down: tuple[tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return self.graph.n

    @cached_property
    def up(self) -> tuple[tuple[int, ...], ...]:
        res: list[list[int]] = [[] for _ in range(self.n)]
        for v in range(self.n):
            for w in self.down[v]:
                res[w].append(v)
        return tuple(tuple(sorted(s)) for s in res)

    @cached_property
    def reach(self) -> tuple[int, ...]:
        """reach[v] is a bitmask of vertices reachable from v (v included).

        Directed edges strictly decrease the level, so processing vertices in
        level order makes every down-neighbor's mask final before it is used.
        """
        order = sorted(range(self.n), key=lambda v: (self.level[v], v))
        masks = [0] * self.n
        for v in order:
            m = 1 << v
            for w in self.down[v]:
                m |= masks[w]
            masks[v] = m
        return tuple(masks)

    def topological_order(self) -> tuple[int, ...]:
        """Vertices in a valid topological order of the oriented edges."""
        return tuple(
            sorted(range(self.n), key=lambda v: (-self.level[v], v))
        )


def build_rooted_dag(g: Graph, r: int) -> RootedDag:
    if not (0 <= r < g.n):
        raise IndexError(f"root {r} out of range for {g.n} vertices")
    require_connected(g)
    level = bfs_distances(g, r)
    down = tuple(
        tuple(w for w in g.sorted_adj[v] if level[w] == level[v] - 1)
        for v in range(g.n)
    )
    return RootedDag(g, r, level, down)


def comparable(dag: RootedDag, x: int, y: int) -> bool:
    """True iff a directed path joins x and y (in either direction); x == y
    counts as comparable."""
    return bool((dag.reach[x] >> y) & 1) or bool((dag.reach[y] >> x) & 1)


def antichain_check(dag: RootedDag, vertices) -> bool:
    vs = list(vertices)
    for i, x in enumerate(vs):
        for y in vs[i + 1 :]:
            if comparable(dag, x, y):
                return False
    return True


def directed_path(dag: RootedDag, x: int, y: int) -> tuple[int, ...]:
    """A deterministic directed x -> y path (levels strictly decreasing).

    Each hop lowers the level by exactly one, so the result is an isometric
    path of the underlying graph of length level(x) - level(y).
    """
    if not ((dag.reach[x] >> y) & 1):
        raise GraphError(f"no directed path from {x} to {y}")
    path = [x]
    cur = x
    while cur != y:
        cur = next(w for w in dag.down[cur] if (dag.reach[w] >> y) & 1)
        path.append(cur)
    return tuple(path)


def descent_to_root(dag: RootedDag, x: int) -> tuple[int, ...]:
    """The deterministic directed path from x all the way down to the root."""
    return directed_path(dag, x, dag.root)
