"""Isometric (shortest) paths: validation, enumeration, and counting.

Enumeration walks the pair shortest-path DAG depth-first with neighbors in
ascending index order, so output order is deterministic. Budgets cap the
number of paths materialized; tripping a cap clears the completeness flag
but never yields wrong paths.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field

from .graph import Graph, GraphError

DEFAULT_MAX_PATHS_PER_PAIR = 10**6
DEFAULT_MAX_TOTAL_PATHS = 10**7

BUDGET_ENV_VAR = "IPCLAB_BUDGET"


@dataclass
class EnumerationBudget:
    """Caps on path enumeration. `complete` drops to False when a cap trips."""

    max_paths_per_pair: int = DEFAULT_MAX_PATHS_PER_PAIR
    max_total_paths: int = DEFAULT_MAX_TOTAL_PATHS
    complete: bool = True
    total_used: int = field(default=0, repr=False)

    def __post_init__(self):
        if self.max_paths_per_pair <= 0 or self.max_total_paths <= 0:
            raise ValueError("budget caps must be strictly positive")

    def pair_cap(self) -> int:
        return min(
            self.max_paths_per_pair, self.max_total_paths - self.total_used
        )

    def charge(self, n_paths: int, pair_complete: bool) -> None:
        self.total_used += n_paths
        if not pair_complete:
            self.complete = False


def default_budget() -> EnumerationBudget:
    """Fresh budget, honoring the IPCLAB_BUDGET env var.

    The variable holds either one integer (per-pair cap) or two
    comma-separated integers (per-pair cap, total cap).
    """
    raw = os.environ.get(BUDGET_ENV_VAR)
    if not raw:
        return EnumerationBudget()
    parts = [p.strip() for p in raw.split(",")]
    try:
        nums = [int(p) for p in parts if p]
    except ValueError:
        raise ValueError(f"bad {BUDGET_ENV_VAR} value {raw!r}") from None
    if len(nums) == 1:
        return EnumerationBudget(max_paths_per_pair=nums[0])
    if len(nums) == 2:
        return EnumerationBudget(
            max_paths_per_pair=nums[0], max_total_paths=nums[1]
        )
    raise ValueError(f"bad {BUDGET_ENV_VAR} value {raw!r}")


def is_path(g: Graph, p) -> bool:
    p = tuple(p)
    if not p:
        return False
    if any(not (0 <= v < g.n) for v in p):
        return False
    if len(set(p)) != len(p):
        return False
    return all(g.has_edge(p[i], p[i + 1]) for i in range(len(p) - 1))


def is_isometric(g: Graph, p) -> bool:
    """True iff p is a path of g whose length equals the distance between
    its end-vertices."""
    p = tuple(p)
    if not is_path(g, p):
        return False
    return len(p) - 1 == g.distance_matrix.dist(p[0], p[-1])


def enumerate_isometric_paths(
    g: Graph, u: int, v: int, budget: EnumerationBudget | None = None
) -> tuple[tuple[tuple[int, ...], ...], bool]:
    """All isometric u->v paths, with a completeness flag.

    Returns (paths, complete). When complete is False the list is a prefix of
    the full deterministic enumeration.
    """
    if budget is None:
        budget = EnumerationBudget()
    du = g.distance_matrix.row(u)
    dv = g.distance_matrix.row(v)
    d = du[v]
    if d < 0:
        raise GraphError(f"vertices {u} and {v} are disconnected")
    cap = budget.pair_cap()
    out: list[tuple[int, ...]] = []
    complete = True
    if u == v:
        out.append((u,))
    else:
        stack: list[int] = [u]

        def dfs(cur: int) -> bool:
            nonlocal complete
            if cur == v:
                if len(out) >= cap:
                    complete = False
                    return False
                out.append(tuple(stack))
                return True
            step = du[cur] + 1
            for w in g.sorted_adj[cur]:
                if du[w] == step and dv[w] == d - step:
                    stack.append(w)
                    ok = dfs(w)
                    stack.pop()
                    if not ok:
                        return False
            return True

        dfs(u)
    budget.charge(len(out), complete)
    return tuple(out), complete


def count_isometric_paths(g: Graph, u: int, v: int) -> int:
    """Exact number of isometric u->v paths via additive DP on the pair
    shortest-path DAG."""
    du = g.distance_matrix.row(u)
    dv = g.distance_matrix.row(v)
    d = du[v]
    if d < 0:
        raise GraphError(f"vertices {u} and {v} are disconnected")
    on_dag = [w for w in range(g.n) if du[w] >= 0 and du[w] + dv[w] == d]
    counts = {u: 1}
    for w in sorted(on_dag, key=lambda w: du[w]):
        if w == u:
            continue
        counts[w] = sum(
            counts.get(x, 0)
            for x in g.adj[w]
            if du[x] == du[w] - 1 and dv[x] == d - du[x]
        )
    return counts.get(v, 0)


class PathCache:
    """Per-graph memo of enumerated pair paths, shared across roots.

    Keys are unordered pairs; paths are stored oriented from min(u,v).
    """

    def __init__(self, g: Graph, budget: EnumerationBudget | None = None):
        self.g = g
        self.budget = budget if budget is not None else EnumerationBudget()
        self._memo: dict[
            tuple[int, int], tuple[tuple[tuple[int, ...], ...], bool]
        ] = {}

    def pair_paths(
        self, u: int, v: int
    ) -> tuple[tuple[tuple[int, ...], ...], bool]:
        a, b = (u, v) if u <= v else (v, u)
        key = (a, b)
        if key not in self._memo:
            self._memo[key] = enumerate_isometric_paths(
                self.g, a, b, self.budget
            )
        return self._memo[key]


def all_pairs_counts(g: Graph) -> dict[tuple[int, int], int]:
    """Isometric-path counts for every unordered pair (pre-flight for
    budgets)."""
    res = {}
    for u in range(g.n):
        for v in range(u + 1, g.n):
            res[(u, v)] = count_isometric_paths(g, u, v)
    return res


def subpaths_are_isometric(g: Graph, p) -> bool:
    """Check the subpath-closure property explicitly (used by tests)."""
    p = tuple(p)
    dm = g.distance_matrix
    for i in range(len(p)):
        for j in range(i, len(p)):
            if dm.dist(p[i], p[j]) != j - i:
                return False
    return True
