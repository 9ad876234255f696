"""Fat minor models: validation, transformation, and pillar construction.

A K-fat minor model of a pattern H inside a host G assigns each pattern
vertex a connected branch set and each pattern edge a branch path touching
both end branch sets, such that any two parts not excused by incidence
(a branch set with a branch path of an incident edge) lie at host distance
at least K.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations, permutations, product

from .graph import Graph, GraphError, build_graph, parse_graph_json
from .graph import format_graph_json
from .paths import EnumerationBudget, enumerate_isometric_paths, is_path
from .paths import is_isometric


@dataclass(frozen=True)
class FatMinorModel:
    pattern: Graph
    K: int
    branch_sets: dict[int, tuple[int, ...]]
    branch_paths: dict[tuple[int, int], tuple[int, ...]]


def _edge_key(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


def model_to_json(model: FatMinorModel) -> str:
    doc = {
        "K": model.K,
        "pattern": json.loads(format_graph_json(model.pattern)),
        "branch_sets": {
            str(v): list(vs) for v, vs in sorted(model.branch_sets.items())
        },
        "branch_paths": {
            f"{u}-{v}": list(p)
            for (u, v), p in sorted(model.branch_paths.items())
        },
    }
    return json.dumps(doc, sort_keys=True, separators=(",", ":"))


def model_from_json(text: str) -> FatMinorModel:
    doc = json.loads(text)
    pattern = parse_graph_json(json.dumps(doc["pattern"]))
    branch_sets = {
        int(v): tuple(vs) for v, vs in doc["branch_sets"].items()
    }
    branch_paths = {}
    for key, p in doc["branch_paths"].items():
        u, v = key.split("-")
        branch_paths[_edge_key(int(u), int(v))] = tuple(p)
    return FatMinorModel(pattern, int(doc["K"]), branch_sets, branch_paths)


def _set_distance(host: Graph, xs, ys) -> int:
    dm = host.distance_matrix
    return min(dm.dist(x, y) for x in xs for y in ys)


def _induces_connected(host: Graph, vs) -> bool:
    inside = set(vs)
    if not inside:
        return False
    start = next(iter(vs))
    seen = {start}
    frontier = [start]
    while frontier:
        x = frontier.pop()
        for w in host.adj[x]:
            if w in inside and w not in seen:
                seen.add(w)
                frontier.append(w)
    return len(seen) == len(inside)


def check_fat_minor_model(
    host: Graph, model: FatMinorModel
) -> tuple[bool, dict | None]:
    """Accepts iff the model's invariants all hold; on rejection returns the
    first violation (deterministic order) with the offending pair."""
    pat = model.pattern
    if model.K < 1:
        return False, {"kind": "bad-fatness", "K": model.K}
    for v in range(pat.n):
        if v not in model.branch_sets:
            return False, {"kind": "missing-branch-set", "vertex": v}
    for v, vs in sorted(model.branch_sets.items()):
        for x in vs:
            if not (0 <= x < host.n):
                raise IndexError(f"branch set {v} vertex {x} out of range")
        if not _induces_connected(host, vs):
            return False, {"kind": "branch-set-disconnected", "vertex": v}
    for u, v in pat.edges:
        key = _edge_key(u, v)
        if key not in model.branch_paths:
            return False, {"kind": "missing-branch-path", "edge": list(key)}
        p = model.branch_paths[key]
        for x in p:
            if not (0 <= x < host.n):
                raise IndexError(f"branch path {key} vertex {x} out of range")
        if not is_path(host, p):
            return False, {"kind": "branch-path-not-a-path", "edge": list(key)}
        for end in key:
            if not set(p) & set(model.branch_sets[end]):
                return False, {
                    "kind": "branch-path-misses-set",
                    "edge": list(key),
                    "vertex": end,
                }
    # Parts in deterministic order: branch sets by vertex, then paths by edge.
    parts: list[tuple[str, object, tuple[int, ...]]] = []
    for v in range(pat.n):
        parts.append(("set", v, tuple(model.branch_sets[v])))
    path_keys = sorted(model.branch_paths)
    for key in path_keys:
        parts.append(("path", key, model.branch_paths[key]))

    def excused(p1, p2) -> bool:
        (k1, id1, _), (k2, id2, _) = p1, p2
        if {k1, k2} != {"set", "path"}:
            return False
        v = id1 if k1 == "set" else id2
        e = id1 if k1 == "path" else id2
        return v in e

    for p1, p2 in combinations(parts, 2):
        if excused(p1, p2):
            continue
        d = _set_distance(host, p1[2], p2[2])
        if d < model.K:
            return False, {
                "kind": "parts-too-close",
                "first": [p1[0], p1[1] if p1[0] == "set" else list(p1[1])],
                "second": [p2[0], p2[1] if p2[0] == "set" else list(p2[1])],
                "distance": d,
                "required": model.K,
            }
    return True, None


# ---------------------------------------------------------------------------
# Transformation: path-plus-universal-vertex pattern -> complete bipartite
# ---------------------------------------------------------------------------


def _trim_between(
    path: tuple[int, ...], from_set, to_set
) -> tuple[int, ...]:
    """Subpath oriented from the last from_set hit to the first to_set hit
    after it; raises when the hits interleave."""
    hits_from = [i for i, x in enumerate(path) if x in from_set]
    hits_to = [i for i, x in enumerate(path) if x in to_set]
    if not hits_from or not hits_to:
        raise GraphError("branch path misses a branch set")
    if max(hits_from) < min(hits_to):
        return path[max(hits_from) : min(hits_to) + 1]
    if max(hits_to) < min(hits_from):
        return tuple(reversed(path[max(hits_to) : min(hits_from) + 1]))
    raise GraphError("branch path hits on the two branch sets interleave")


def transform_Ut_to_K2t(host: Graph, model: FatMinorModel) -> FatMinorModel:
    """Turns a model of the path-plus-universal-vertex pattern at fatness
    K >= 12 into a model of the complete bipartite pattern K_{2,t} at
    fatness floor(K/4).

    Convention: the universal vertex is the last pattern vertex (index t).
    One hub keeps the universal branch set; the other hub absorbs the whole
    path side (its branch sets and the path-edge branch paths). Each wing is
    a short middle segment cut from the spoke branch path, flanked by the
    two remaining pieces which become the hub-to-wing branch paths.
    """
    if model.K < 12:
        raise GraphError(f"transformation needs fatness >= 12, got {model.K}")
    ok, why = check_fat_minor_model(host, model)
    if not ok:
        raise GraphError(f"input model invalid: {why}")
    pat = model.pattern
    t = pat.n - 1
    hub = t
    if any(not pat.has_edge(hub, v) for v in range(t)):
        raise GraphError("last pattern vertex is not universal")
    kp = model.K // 4
    seg_len = kp + 3  # wing segment length, kept clear of both spoke ends
    from .generators import gen_K2t

    new_pattern = gen_K2t(t)
    branch_sets: dict[int, tuple[int, ...]] = {0: model.branch_sets[hub]}
    side: set[int] = set()
    for v in range(t):
        side |= set(model.branch_sets[v])
    for u, v in pat.edges:
        if hub not in (u, v):
            side |= set(model.branch_paths[_edge_key(u, v)])
    branch_paths: dict[tuple[int, int], tuple[int, ...]] = {}
    for v in range(t):
        q = _trim_between(
            model.branch_paths[_edge_key(v, hub)],
            set(model.branch_sets[hub]),
            set(model.branch_sets[v]),
        )
        length = len(q) - 1
        if length < 3 * kp + 3:
            raise GraphError(
                f"spoke branch path too short ({length}) for fatness {model.K}"
            )
        s = (length - seg_len) // 2
        wing = q[s : s + seg_len + 1]
        branch_sets[2 + v] = wing
        branch_paths[(0, 2 + v)] = q[: s + 1]
        branch_paths[(1, 2 + v)] = tuple(reversed(q[s + seg_len :]))
    branch_sets[1] = tuple(sorted(side))
    return FatMinorModel(new_pattern, kp, branch_sets, branch_paths)


# ---------------------------------------------------------------------------
# Engineered hosts for the transformation corpus
# ---------------------------------------------------------------------------


def build_Ut_host(t: int, K: int) -> tuple[Graph, FatMinorModel]:
    """Host carrying a K-fat model of the path-plus-universal pattern.

    The universal branch set is a star with t arms of length K; each path
    branch set is a star with three arms of length ceil(K/2); branch paths
    run tip-to-tip with length 3K.
    """
    if t < 1 or K < 1:
        raise GraphError("need t >= 1 and K >= 1")
    from .generators import gen_U

    edges: list[tuple[int, int]] = []
    counter = 0

    def fresh() -> int:
        nonlocal counter
        counter += 1
        return counter - 1

    def arm(center: int, length: int) -> tuple[list[int], int]:
        vs = [center]
        cur = center
        for _ in range(length):
            nxt = fresh()
            edges.append((cur, nxt))
            vs.append(nxt)
            cur = nxt
        return vs, cur

    def star(n_arms: int, length: int) -> tuple[list[int], list[int]]:
        center = fresh()
        vs = [center]
        tips = []
        for _ in range(n_arms):
            avs, tip = arm(center, length)
            vs.extend(avs[1:])
            tips.append(tip)
        return vs, tips

    def link(a: int, b: int, length: int) -> list[int]:
        vs = [a]
        cur = a
        for _ in range(length - 1):
            nxt = fresh()
            edges.append((cur, nxt))
            vs.append(nxt)
            cur = nxt
        edges.append((cur, b))
        vs.append(b)
        return vs

    hub_vs, hub_tips = star(t, K)
    half = -(-K // 2)
    path_sets = []
    path_tips = []
    for _ in range(t):
        vs, tips = star(3, half)
        path_sets.append(vs)
        path_tips.append(tips)

    branch_sets = {v: tuple(sorted(path_sets[v])) for v in range(t)}
    branch_sets[t] = tuple(sorted(hub_vs))
    branch_paths = {}
    for v in range(t):
        branch_paths[_edge_key(v, t)] = tuple(
            link(hub_tips[v], path_tips[v][0], 3 * K)
        )
    for v in range(t - 1):
        branch_paths[_edge_key(v, v + 1)] = tuple(
            link(path_tips[v][2], path_tips[v + 1][1], 3 * K)
        )
    host = build_graph(edges, counter)
    model = FatMinorModel(gen_U(t), K, branch_sets, branch_paths)
    return host, model


def search_singleton_fat_minor(
    host: Graph, pattern: Graph, K: int, max_combos: int = 1000
) -> FatMinorModel | None:
    """Exhaustive search over singleton-branch-set models (small hosts only).

    Tries every injective placement of pattern vertices and, per placement,
    a bounded product of isometric branch-path choices.
    """
    if host.n > 12:
        raise GraphError("singleton fat-minor search supports n <= 12 only")
    budget = EnumerationBudget(max_paths_per_pair=max_combos)
    pat_edges = pattern.edges
    for placement in permutations(range(host.n), pattern.n):
        choices = []
        feasible = True
        for u, v in pat_edges:
            paths, _ = enumerate_isometric_paths(
                host, placement[u], placement[v], budget
            )
            budget.total_used = 0
            if not paths:
                feasible = False
                break
            choices.append(paths[:max_combos])
        if not feasible:
            continue
        combos = 1
        for c in choices:
            combos *= len(c)
            if combos > max_combos:
                break
        if combos > max_combos:
            choices = [c[:1] for c in choices]
        for combo in product(*choices):
            model = FatMinorModel(
                pattern,
                K,
                {v: (placement[v],) for v in range(pattern.n)},
                {
                    _edge_key(*e): p
                    for e, p in zip(pat_edges, combo)
                },
            )
            ok, _ = check_fat_minor_model(host, model)
            if ok:
                return model
    return None


# ---------------------------------------------------------------------------
# Pillar procedure
# ---------------------------------------------------------------------------


def connect_procedure(
    g: Graph,
    r: int,
    p: tuple[int, ...],
    a: int,
    u: int,
    q: tuple[int, ...] | None = None,
) -> tuple[int, ...]:
    """Builds a pillar from r to the path p aimed at its vertex a.

    Walks an (r,a)-shortest path Q and stops at the first vertex that lies
    on p or has a neighbor on p other than its own successor on Q. If the
    stop vertex is on p it is returned as the pillar's foot; otherwise the
    foot is the first p-vertex adjacent to it when scanning p from the end
    u, which guarantees no earlier p-vertex neighbors the second-to-last
    pillar vertex.

    q optionally overrides the (r,a)-shortest path used (it must be one);
    by default the first path in deterministic enumeration order is taken.
    """
    p = tuple(p)
    if not is_isometric(g, p):
        raise GraphError("p must be an isometric path")
    if a not in p:
        raise GraphError("a must lie on p")
    if u not in (p[0], p[-1]):
        raise GraphError("u must be an end-vertex of p")
    if r in p:
        raise GraphError("r must not lie on p")
    if q is None:
        paths, _ = enumerate_isometric_paths(
            g, r, a, EnumerationBudget(max_paths_per_pair=1)
        )
        q = paths[0]
    else:
        q = tuple(q)
        if q[0] != r or q[-1] != a or not is_isometric(g, q):
            raise GraphError("q must be an (r,a)-isometric path")
    on_p = set(p)
    scan = p if p[0] == u else tuple(reversed(p))
    for i in range(1, len(q)):
        x = q[i]
        if x in on_p:
            return q[: i + 1]
        successor = q[i + 1] if i + 1 < len(q) else None
        if any(w in on_p and w != successor for w in g.adj[x]):
            foot = next(w for w in scan if w in g.adj[x])
            return q[: i + 1] + (foot,)
    raise GraphError("walk reached a without stopping")  # unreachable


def check_connect_claims(
    g: Graph, r: int, p: tuple[int, ...], pillar: tuple[int, ...], a: int
) -> dict:
    """Validates the three pillar properties: induced; p-neighbors confined
    to the last two vertices; the prefix before the foot extends to an
    (r,a)-shortest path."""
    dm = g.distance_matrix
    on_p = set(p)
    induced = is_path(g, pillar) and all(
        not g.has_edge(pillar[i], pillar[j])
        for i in range(len(pillar))
        for j in range(i + 2, len(pillar))
    )
    body_clear = all(
        not (set(g.adj[x]) & on_p) for x in pillar[:-2]
    )
    prefix = pillar[:-1]
    end = prefix[-1]
    prefix_ok = (
        is_isometric(g, prefix)
        and dm.dist(r, end) + dm.dist(end, a) == dm.dist(r, a)
    )
    foot_on_p = pillar[-1] in on_p
    return {
        "induced": induced,
        "body_clear_of_p": body_clear,
        "prefix_extends_to_root_path": prefix_ok,
        "foot_on_p": foot_on_p,
        "ok": induced and body_clear and prefix_ok and foot_on_p,
    }


def build_pillar_example() -> tuple[Graph, dict]:
    """Rebuilds the worked pillar example: a horizontal target path with a
    distant root and two aim points whose pillars exercise both exit
    branches of the procedure.

    Returns the graph plus a dict naming the key vertices.
    """
    # Horizontal path p0..p8; root below; a diagonal lattice of shortest
    # routes so that the first pillar stops early next to the path (its
    # stop vertex sees two path vertices) and the second runs all the way
    # onto the path.
    edges = []
    p = list(range(9))  # 0..8 horizontal
    for i in range(8):
        edges.append((i, i + 1))
    r = 9
    # Column under p2 of height 3: r-10-11-(stop) with the stop vertex 11
    # adjacent to both p1 and p2 (line-8 exit: foot chosen by scanning
    # from u).
    edges += [(r, 10), (10, 11), (11, 1), (11, 2)]
    # Diagonal route to p6 touching nothing until it lands on the path
    # (line-4 exit).
    edges += [(r, 12), (12, 13), (13, 14), (14, 6)]
    g = build_graph(edges, 15)
    return g, {"p": tuple(p), "r": r, "a1": 2, "a2": 6, "u": 0}
