"""Graph operations: r-th power, line graph, and clique-sum.

Each operation keeps enough bookkeeping (edge colors, edge-vertex maps,
projection maps) for the accompanying structural checks:

- power graphs: every isometric path has at most one original edge; a path
  of new edges forces a long distance in the base; such paths are covered
  by few base isometric paths, and base paths by few rooted power paths.
- line graphs: interior vertices of an isometric path correspond to an
  isometric path of the base; the image of a base isometric path is
  isometric; any such image extends to a two-path rooted cover.
- clique-sums: parts embed isometrically, and each part meets any
  isometric path of the sum in a contiguous stretch.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .graph import Graph, GraphError, build_graph, is_connected
from .paths import (
    EnumerationBudget,
    enumerate_isometric_paths,
    is_isometric,
)

BLACK = "black"
RED = "red"


# ---------------------------------------------------------------------------
# Powers
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PoweredGraph:
    base: Graph
    r: int
    result: Graph
    # Keyed by sorted endpoint pair; black edges are edges of the base.
    edge_color: dict[tuple[int, int], str]


def power(g: Graph, r: int) -> PoweredGraph:
    if r < 1:
        raise GraphError(f"power exponent must be >= 1, got {r}")
    dm = g.distance_matrix
    edges = []
    colors = {}
    for u in range(g.n):
        for v in range(u + 1, g.n):
            d = dm.dist(u, v)
            if 1 <= d <= r:
                edges.append((u, v))
                colors[(u, v)] = BLACK if d == 1 else RED
    result = build_graph(edges, g.n, g.labels)
    return PoweredGraph(g, r, result, colors)


def _count_black(pg: PoweredGraph, path: tuple[int, ...]) -> int:
    total = 0
    for a, b in zip(path, path[1:]):
        key = (a, b) if a < b else (b, a)
        if pg.edge_color[key] == BLACK:
            total += 1
    return total


def _greedy_isometric_pieces(
    g: Graph, walk: list[int]
) -> list[tuple[int, ...]]:
    """Split a walk into consecutive maximal pieces, each an isometric path.

    Adjacent pieces share their boundary vertex, so the pieces jointly
    cover every vertex of the walk.
    """
    pieces = []
    i = 0
    while i < len(walk) - 1:
        j = i + 1
        while j + 1 <= len(walk) - 1 and is_isometric(g, walk[i : j + 2]):
            j += 1
        piece = tuple(walk[i : j + 1])
        if not is_isometric(g, piece):
            raise GraphError("walk step is not an edge of the graph")
        pieces.append(piece)
        i = j
    if not pieces:
        pieces.append((walk[0],))
    return pieces


def red_path_base_cover(
    pg: PoweredGraph, path: tuple[int, ...]
) -> list[tuple[int, ...]]:
    """Base isometric paths jointly containing every vertex of a power-graph
    path, built by stitching per-hop base shortest paths and splitting the
    resulting walk greedily into maximal isometric pieces."""
    g = pg.base
    walk = [path[0]]
    for a, b in zip(path, path[1:]):
        hop, _ = enumerate_isometric_paths(
            g, a, b, EnumerationBudget(max_paths_per_pair=1)
        )
        walk.extend(hop[0][1:])
    return _greedy_isometric_pieces(g, walk)


def rooted_power_cover(
    pg: PoweredGraph, base_path: tuple[int, ...]
) -> list[tuple[int, ...]]:
    """Covers a base isometric path rooted at its first vertex by at most r
    isometric paths of the power graph, each rooted at the same vertex.

    The i-th cover path takes every r-th vertex starting from offset i+1,
    prefixed with the root.
    """
    r = pg.r
    v = base_path[0]
    covers = []
    for i in range(r):
        picks = [base_path[j] for j in range(i + 1, len(base_path), r)]
        if not picks:
            continue
        covers.append((v, *picks))
    if not covers:
        covers.append((v,))
    return covers


def check_power_structure(
    pg: PoweredGraph, budget: EnumerationBudget | None = None
) -> dict:
    """Exhaustively verifies the power-graph path structure.

    For every enumerated isometric path of the power graph: at most one
    black edge; if all edges are red and the path has length ell, the base
    distance of its endpoints is at least r*(ell-1)+1 and the path is
    covered by at most 2r-1 base isometric paths. For every base isometric
    path, at most r rooted power-graph isometric paths cover it.
    """
    if budget is None:
        budget = EnumerationBudget()
    g, h, r = pg.base, pg.result, pg.r
    dm = g.distance_matrix
    violations: list[dict] = []
    paths_checked = 0
    complete = True
    for u in range(h.n):
        for v in range(u + 1, h.n):
            paths, ok = enumerate_isometric_paths(h, u, v, budget)
            complete = complete and ok
            for p in paths:
                paths_checked += 1
                if _count_black(pg, p) > 1:
                    violations.append(
                        {"check": "single-black-edge", "path": list(p)}
                    )
                ell = len(p) - 1
                if ell >= 1 and _count_black(pg, p) == 0:
                    need = r * (ell - 1) + 1
                    if dm.dist(p[0], p[-1]) < need:
                        violations.append(
                            {
                                "check": "red-path-distance",
                                "path": list(p),
                                "required": need,
                                "observed": dm.dist(p[0], p[-1]),
                            }
                        )
                    pieces = red_path_base_cover(pg, p)
                    covered = set().union(*(set(q) for q in pieces))
                    if len(pieces) > 2 * r - 1 or not set(p) <= covered:
                        violations.append(
                            {
                                "check": "red-path-base-cover",
                                "path": list(p),
                                "pieces": len(pieces),
                                "allowed": 2 * r - 1,
                            }
                        )
    base_paths_checked = 0
    for u in range(g.n):
        for v in range(u + 1, g.n):
            paths, ok = enumerate_isometric_paths(g, u, v, budget)
            complete = complete and ok
            for p in paths:
                base_paths_checked += 1
                covers = rooted_power_cover(pg, p)
                good = len(covers) <= r
                covered: set[int] = set()
                for q in covers:
                    if q[0] != p[0] or not is_isometric(h, q):
                        good = False
                    covered |= set(q)
                if not set(p) <= covered:
                    good = False
                if not good:
                    violations.append(
                        {
                            "check": "rooted-power-cover",
                            "base_path": list(p),
                            "covers": [list(q) for q in covers],
                        }
                    )
    return {
        "r": r,
        "power_paths_checked": paths_checked,
        "base_paths_checked": base_paths_checked,
        "violations": violations,
        "complete": complete,
    }


# ---------------------------------------------------------------------------
# Line graphs
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class LineGraph:
    base: Graph
    result: Graph
    # vertex_of_edge[(u,v)] with u < v -> vertex index of the result.
    vertex_of_edge: dict[tuple[int, int], int]
    edge_of_vertex: tuple[tuple[int, int], ...]


def line_graph(g: Graph) -> LineGraph:
    base_edges = g.edges
    if not base_edges:
        raise GraphError("line graph of an edgeless graph is undefined here")
    vertex_of_edge = {e: i for i, e in enumerate(base_edges)}
    edges = []
    for i, (a, b) in enumerate(base_edges):
        for j in range(i + 1, len(base_edges)):
            c, d = base_edges[j]
            if len({a, b} & {c, d}) >= 1:
                edges.append((i, j))
    labels = [f"{a}-{b}" for a, b in base_edges]
    result = build_graph(edges, len(base_edges), labels)
    return LineGraph(g, result, vertex_of_edge, base_edges)


def edge_sequence_as_path(g: Graph, edges: list[tuple[int, int]]):
    """Orders a sequence of pairwise-chained edges into the vertex path they
    trace, or returns None when they do not trace a simple path."""
    if not edges:
        return None
    if len(edges) == 1:
        a, b = edges[0]
        return (a, b)
    first_shared = set(edges[0]) & set(edges[1])
    if len(first_shared) != 1:
        return None
    start = (set(edges[0]) - first_shared).pop()
    path = [start]
    cur = start
    for e in edges:
        if cur not in e:
            return None
        cur = e[0] if e[1] == cur else e[1]
        path.append(cur)
    if len(set(path)) != len(path):
        return None
    return tuple(path)


def base_path_image(lg: LineGraph, base_path: tuple[int, ...]) -> tuple[int, ...]:
    """The line-graph vertex sequence corresponding to a base path's edges."""
    out = []
    for a, b in zip(base_path, base_path[1:]):
        key = (a, b) if a < b else (b, a)
        out.append(lg.vertex_of_edge[key])
    return tuple(out)


def two_path_rooted_cover(
    lg: LineGraph, root: int, seq: tuple[int, ...]
) -> list[tuple[int, ...]] | None:
    """Covers {root} ∪ seq by at most two root-rooted isometric paths of the
    line graph, where seq is the image of a base isometric path and root is
    adjacent to (or equal to) its first vertex.

    Walks the concatenated sequence until isometry first fails, then routes
    the remainder through any shortest connection from the root.
    """
    h = lg.result
    full = (root, *seq) if seq and seq[0] != root else tuple(seq) or (root,)
    if is_isometric(h, full):
        return [full]
    # Minimal prefix that fails: keep the last good prefix as path one.
    i = 2
    while i <= len(full) and is_isometric(h, full[:i]):
        i += 1
    first = full[: i - 1]
    rest = full[i - 1 :]
    connectors, _ = enumerate_isometric_paths(
        h, root, rest[0], EnumerationBudget()
    )
    for conn in connectors:
        cand = conn + rest[1:]
        if is_isometric(h, cand):
            return [first, cand]
    return None


def check_line_structure(
    lg: LineGraph, budget: EnumerationBudget | None = None
) -> dict:
    """Exhaustive line-graph path checks.

    Interior vertices of every isometric path of the line graph trace an
    isometric path of the base; the image of every base isometric path is
    isometric in the line graph; every such image together with an adjacent
    root vertex has a two-path rooted cover.
    """
    if budget is None:
        budget = EnumerationBudget()
    g, h = lg.base, lg.result
    violations: list[dict] = []
    complete = True
    line_paths_checked = 0
    for u in range(h.n):
        for v in range(u + 1, h.n):
            paths, ok = enumerate_isometric_paths(h, u, v, budget)
            complete = complete and ok
            for p in paths:
                line_paths_checked += 1
                interior = [lg.edge_of_vertex[x] for x in p[1:-1]]
                if not interior:
                    continue
                traced = edge_sequence_as_path(g, interior)
                if traced is None or not is_isometric(g, traced):
                    violations.append(
                        {"check": "interior-induces-isometric", "path": list(p)}
                    )
    base_paths_checked = 0
    cover_cases = 0
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if u == v or g.distance_matrix.dist(u, v) < 1:
                continue
            paths, ok = enumerate_isometric_paths(g, u, v, budget)
            complete = complete and ok
            for p in paths:
                base_paths_checked += 1
                seq = base_path_image(lg, p)
                if not is_isometric(h, seq):
                    violations.append(
                        {"check": "image-isometric", "base_path": list(p)}
                    )
                    continue
                # Root candidates: every base edge incident to the path's
                # first vertex (a root at the far endpoint of the first
                # edge may shortcut to later edges, voiding the claim).
                first = p[0]
                roots = sorted(
                    lg.vertex_of_edge[
                        (first, w) if first < w else (w, first)
                    ]
                    for w in g.adj[first]
                )
                for root in roots:
                    if root in seq and root != seq[0]:
                        continue
                    cover_cases += 1
                    cover = two_path_rooted_cover(lg, root, seq)
                    good = cover is not None and len(cover) <= 2
                    if good:
                        covered = set().union(*(set(q) for q in cover))
                        need = set(seq) | {root}
                        good = need <= covered and all(
                            q[0] == root and is_isometric(h, q)
                            for q in cover
                        )
                    if not good:
                        violations.append(
                            {
                                "check": "two-path-rooted-cover",
                                "base_path": list(p),
                                "root": root,
                            }
                        )
    return {
        "line_paths_checked": line_paths_checked,
        "base_paths_checked": base_paths_checked,
        "cover_cases": cover_cases,
        "violations": violations,
        "complete": complete,
    }


# ---------------------------------------------------------------------------
# Clique-sums
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CliqueSumPlan:
    parts: tuple[Graph, ...]
    # (part index, vertex list, part index, vertex list); the two lists are
    # identified position-by-position.
    gluings: tuple[tuple[int, tuple[int, ...], int, tuple[int, ...]], ...]


@dataclass(frozen=True)
class CliqueSumResult:
    graph: Graph
    # projections[i][v] = vertex of the sum that part i's vertex v maps to.
    projections: tuple[tuple[int, ...], ...]


def _require_clique(g: Graph, part_idx: int, vs: tuple[int, ...]) -> None:
    for k, a in enumerate(vs):
        if not (0 <= a < g.n):
            raise IndexError(f"gluing vertex {a} out of range in part {part_idx}")
        for b in vs[k + 1 :]:
            if a == b:
                raise GraphError(
                    f"gluing list for part {part_idx} repeats vertex {a}"
                )
            if not g.has_edge(a, b):
                raise GraphError(
                    f"gluing set in part {part_idx} is not a clique: "
                    f"missing edge {a}-{b}"
                )


def clique_sum(plan: CliqueSumPlan) -> CliqueSumResult:
    parts = plan.parts
    if not parts:
        raise GraphError("clique-sum needs at least one part")
    offsets = []
    total = 0
    for g in parts:
        offsets.append(total)
        total += g.n
    parent = list(range(total))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x: int, y: int) -> None:
        rx, ry = find(x), find(y)
        if rx != ry:
            if rx > ry:
                rx, ry = ry, rx
            parent[ry] = rx

    for gi, vs_i, gj, vs_j in plan.gluings:
        if not (0 <= gi < len(parts) and 0 <= gj < len(parts)):
            raise IndexError("gluing references a part index out of range")
        if len(vs_i) != len(vs_j):
            raise GraphError(
                f"gluing size mismatch: {len(vs_i)} vs {len(vs_j)} vertices"
            )
        _require_clique(parts[gi], gi, tuple(vs_i))
        _require_clique(parts[gj], gj, tuple(vs_j))
        for a, b in zip(vs_i, vs_j):
            union(offsets[gi] + a, offsets[gj] + b)

    # Fresh contiguous numbering ordered by smallest pre-merge id.
    reps = sorted({find(x) for x in range(total)})
    new_id = {rep: i for i, rep in enumerate(reps)}
    projections = tuple(
        tuple(new_id[find(offsets[i] + v)] for v in range(g.n))
        for i, g in enumerate(parts)
    )
    edges = set()
    for i, g in enumerate(parts):
        for a, b in g.edges:
            x, y = projections[i][a], projections[i][b]
            if x == y:
                raise GraphError(
                    f"gluing merges the endpoints of edge {a}-{b} of part {i}"
                )
            edges.add((min(x, y), max(x, y)))
    result = build_graph(sorted(edges), len(reps))
    if not is_connected(result):
        raise GraphError("clique-sum result is disconnected")
    return CliqueSumResult(result, projections)


def check_cliquesum_structure(
    plan: CliqueSumPlan,
    summed: CliqueSumResult,
    budget: EnumerationBudget | None = None,
) -> dict:
    """Checks that each part sits isometrically inside the sum and that every
    isometric path of the sum meets each part in a contiguous stretch."""
    if budget is None:
        budget = EnumerationBudget()
    g = summed.graph
    dm = g.distance_matrix
    violations: list[dict] = []
    for i, part in enumerate(plan.parts):
        pdm = part.distance_matrix
        proj = summed.projections[i]
        for a in range(part.n):
            for b in range(a + 1, part.n):
                if pdm.dist(a, b) != dm.dist(proj[a], proj[b]):
                    violations.append(
                        {
                            "check": "part-isometric",
                            "part": i,
                            "pair": [a, b],
                            "part_dist": pdm.dist(a, b),
                            "sum_dist": dm.dist(proj[a], proj[b]),
                        }
                    )
    part_images = [set(p) for p in summed.projections]
    paths_checked = 0
    complete = True
    for u in range(g.n):
        for v in range(u + 1, g.n):
            paths, ok = enumerate_isometric_paths(g, u, v, budget)
            complete = complete and ok
            for p in paths:
                paths_checked += 1
                for i, image in enumerate(part_images):
                    hits = [k for k, x in enumerate(p) if x in image]
                    if hits and hits != list(range(hits[0], hits[-1] + 1)):
                        violations.append(
                            {
                                "check": "part-contiguous",
                                "part": i,
                                "path": list(p),
                            }
                        )
    return {
        "paths_checked": paths_checked,
        "violations": violations,
        "complete": complete,
    }
