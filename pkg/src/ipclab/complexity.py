"""Exact rooted path-cover complexity with dual certificates.

For a root r, the complexity value ipcor(r, G) is the minimum k such that
every isometric path of G is covered by k many r-rooted isometric paths.
It equals the maximum, over isometric paths P, of the largest antichain of
V(P) in the root-oriented DAG. Both quantities are computed here through a
single minimum chain partition (Dilworth via bipartite matching), yielding
two independently checkable witnesses of equal size:

  * an AntichainCertificate: pairwise-incomparable vertices on one path;
  * a CoverCertificate: r-rooted isometric paths covering that path.

ipco(G) minimizes ipcor over roots, sipco(G) maximizes it.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .graph import Graph, GraphError, require_connected
from .paths import (
    EnumerationBudget,
    PathCache,
    enumerate_isometric_paths,
    is_isometric,
)
from .rooted_dag import (
    RootedDag,
    antichain_check,
    build_rooted_dag,
    descent_to_root,
    directed_path,
)


@dataclass(frozen=True)
class AntichainCertificate:
    root: int
    path: tuple[int, ...]
    antichain: tuple[int, ...]


@dataclass(frozen=True)
class CoverCertificate:
    root: int
    target: tuple[int, ...]
    cover: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class RootResult:
    root: int
    value: int
    antichain_cert: AntichainCertificate
    cover_cert: CoverCertificate
    complete: bool


@dataclass(frozen=True)
class ComplexityReport:
    ipco: int
    sipco: int
    per_root: tuple[RootResult, ...]
    ipco_root: int
    sipco_root: int
    complete: bool

    def to_dict(self) -> dict:
        return {
            "ipco": self.ipco,
            "sipco": self.sipco,
            "per_root": [
                {"root": rr.root, "ipcor": rr.value, "complete": rr.complete}
                for rr in self.per_root
            ],
            "witness": {
                "ipco": _witness_dict(self.per_root[self.ipco_root]),
                "sipco": _witness_dict(self.per_root[self.sipco_root]),
            },
        }


def _witness_dict(rr: RootResult) -> dict:
    return {
        "root": rr.root,
        "path": list(rr.antichain_cert.path),
        "antichain": list(rr.antichain_cert.antichain),
        "cover": [list(q) for q in rr.cover_cert.cover],
    }


# --- Dilworth machinery on one path ---------------------------------------


def _chain_partition(dag: RootedDag, p: tuple[int, ...]):
    """Minimum chain partition and maximum antichain of the vertices of p.

    The strict comparability relation (directed path x -> y, x != y) on V(p)
    is a DAG order; a maximum bipartite matching between copies of V(p)
    yields a minimum chain partition of size |V(p)| - |M|, and the standard
    alternating-reachability argument extracts an antichain of the same size.
    Returns (chains, antichain) with each chain ordered by decreasing level.
    """
    verts = sorted(set(p), key=lambda v: (-dag.level[v], v))
    idx = {v: i for i, v in enumerate(verts)}
    n = len(verts)
    reach = dag.reach
    succs = [
        [idx[w] for w in verts if w != v and (reach[v] >> w) & 1]
        for v in verts
    ]

    match_right = [-1] * n  # right index -> left index
    match_left = [-1] * n

    def try_augment(i: int, seen: list[bool]) -> bool:
        for j in succs[i]:
            if not seen[j]:
                seen[j] = True
                if match_right[j] == -1 or try_augment(match_right[j], seen):
                    match_right[j] = i
                    match_left[i] = j
                    return True
        return False

    for i in range(n):
        try_augment(i, [False] * n)

    # Chains: follow matched successors from every chain head.
    heads = [i for i in range(n) if match_right[i] == -1]
    chains = []
    for h in heads:
        chain = [h]
        while match_left[chain[-1]] != -1:
            chain.append(match_left[chain[-1]])
        chains.append(tuple(verts[i] for i in chain))

    # König: alternate from unmatched left vertices; the antichain is the
    # set of elements visited on the left but not on the right.
    seen_l = [False] * n
    seen_r = [False] * n
    stack = [i for i in range(n) if match_left[i] == -1]
    for i in stack:
        seen_l[i] = True
    while stack:
        i = stack.pop()
        for j in succs[i]:
            if not seen_r[j]:
                seen_r[j] = True
                k = match_right[j]
                if k != -1 and not seen_l[k]:
                    seen_l[k] = True
                    stack.append(k)
    antichain = tuple(
        verts[i] for i in range(n) if seen_l[i] and not seen_r[i]
    )
    assert len(antichain) == len(chains) == n - sum(
        1 for j in range(n) if match_right[j] != -1
    )
    return chains, antichain


def max_antichain_on_path(dag: RootedDag, p) -> AntichainCertificate:
    p = tuple(p)
    _, antichain = _chain_partition(dag, p)
    assert antichain_check(dag, antichain)
    return AntichainCertificate(dag.root, p, antichain)


def _chain_to_rooted_path(dag: RootedDag, chain: tuple[int, ...]):
    """Extend a chain (levels strictly decreasing) to an r-rooted isometric
    path: splice directed connectors between consecutive elements, then
    descend to the root. Every hop lowers the level by one, so the result
    is isometric."""
    seq: list[int] = [chain[0]]
    for a, b in zip(chain, chain[1:]):
        seq.extend(directed_path(dag, a, b)[1:])
    seq.extend(descent_to_root(dag, seq[-1])[1:])
    return tuple(seq)


def _repair_contiguity(dag: RootedDag, q: tuple[int, ...], p: tuple[int, ...]):
    """Reroute the middle of a rooted cover path through p itself so that its
    intersection with p is a contiguous subpath of p.

    q descends level by level, so all of its hits on p sit between its
    highest-level hit a and lowest-level hit b, and the (a, b)-subpath of p
    has the same length as the (a, b)-segment of q; swapping the segment
    preserves isometry and keeps every original hit covered.
    """
    pos = {v: i for i, v in enumerate(p)}
    hit_idx = [i for i, v in enumerate(q) if v in pos]
    if len(hit_idx) <= 1:
        return q
    positions = sorted(pos[q[i]] for i in hit_idx)
    if positions[-1] - positions[0] == len(positions) - 1:
        return q
    a_i, b_i = hit_idx[0], hit_idx[-1]
    pa, pb = pos[q[a_i]], pos[q[b_i]]
    seg = p[pa : pb + 1] if pa <= pb else p[pb : pa + 1][::-1]
    assert len(seg) - 1 == b_i - a_i
    return q[:a_i] + seg + q[b_i + 1 :]


def min_rooted_cover(
    g: Graph, r: int, p, dag: RootedDag | None = None
) -> CoverCertificate:
    """A minimum set of r-rooted isometric paths covering V(p), one per chain
    of a minimum chain partition; size equals the maximum antichain."""
    p = tuple(p)
    if dag is None:
        dag = build_rooted_dag(g, r)
    chains, _ = _chain_partition(dag, p)
    cover = tuple(
        _repair_contiguity(dag, _chain_to_rooted_path(dag, chain), p)
        for chain in chains
    )
    cert = CoverCertificate(r, p, cover)
    ok, why = validate_cover_certificate(g, cert)
    assert ok, why
    return cert


# --- certificate validation ----------------------------------------------


def validate_antichain_certificate(g: Graph, cert: AntichainCertificate):
    if not is_isometric(g, cert.path):
        return False, "witness path is not isometric"
    if not set(cert.antichain) <= set(cert.path):
        return False, "antichain not contained in the path"
    dag = build_rooted_dag(g, cert.root)
    if not antichain_check(dag, cert.antichain):
        return False, "antichain contains a comparable pair"
    return True, ""


def validate_cover_certificate(g: Graph, cert: CoverCertificate):
    target = set(cert.target)
    covered: set[int] = set()
    pos = {v: i for i, v in enumerate(cert.target)}
    for q in cert.cover:
        if not is_isometric(g, q):
            return False, f"cover path {q} is not isometric"
        if cert.root not in (q[0], q[-1]):
            return False, f"cover path {q} is not rooted at {cert.root}"
        hits = sorted(pos[v] for v in q if v in pos)
        if hits and hits[-1] - hits[0] != len(hits) - 1:
            return False, f"cover path {q} hits the target non-contiguously"
        covered.update(v for v in q if v in target)
    if covered != target:
        return False, f"uncovered target vertices {sorted(target - covered)}"
    return True, ""


# --- the rooted invariant -------------------------------------------------


def _pair_bound(g: Graph, level, u: int, v: int) -> int:
    """Upper bound on the antichain any isometric (u,v)-path can carry:
    rearranging |E(P)| >= |lvl(u)-lvl(v)| + |alpha| - 1."""
    return g.distance_matrix.dist(u, v) + 1 - abs(level[u] - level[v])


def ipcor(
    g: Graph,
    r: int,
    budget: EnumerationBudget | None = None,
    cache: PathCache | None = None,
) -> RootResult:
    """Exact ipcor(r, G) with witnesses; `complete=False` downgrades the
    value to a lower bound when enumeration was truncated."""
    require_connected(g)
    if not (0 <= r < g.n):
        raise IndexError(f"root {r} out of range")
    if cache is None:
        cache = PathCache(g, budget)
    dag = build_rooted_dag(g, r)
    level = dag.level

    best = 1
    best_path: tuple[int, ...] = (r,)
    best_antichain: tuple[int, ...] = (r,)
    truncated_bounds: list[int] = []

    pairs = [
        (u, v)
        for u in range(g.n)
        for v in range(u + 1, g.n)
        if _pair_bound(g, level, u, v) > 1
    ]
    pairs.sort(key=lambda uv: (-_pair_bound(g, level, *uv), uv))

    for u, v in pairs:
        bound = _pair_bound(g, level, u, v)
        if bound <= best:
            break  # sorted descending: nothing later can improve
        paths, pair_complete = cache.pair_paths(u, v)
        for p in paths:
            _, antichain = _chain_partition(dag, p)
            if len(antichain) > best:
                best = len(antichain)
                best_path = p
                best_antichain = antichain
                if best == bound:
                    break
        if not pair_complete:
            truncated_bounds.append(bound)

    # A truncated pair only hurts if its bound still exceeds the final value.
    complete = all(b <= best for b in truncated_bounds)
    anti_cert = AntichainCertificate(r, best_path, best_antichain)
    cover_cert = min_rooted_cover(g, r, best_path, dag=dag)
    assert len(cover_cert.cover) == len(best_antichain)
    return RootResult(r, best, anti_cert, cover_cert, complete)


def complexity_report(
    g: Graph, budget: EnumerationBudget | None = None
) -> ComplexityReport:
    """Per-root ipcor values plus ipco (min) and sipco (max)."""
    require_connected(g)
    cache = PathCache(g, budget)
    per_root = tuple(ipcor(g, r, cache=cache) for r in range(g.n))
    ipco_root = min(range(g.n), key=lambda r: (per_root[r].value, r))
    sipco_root = max(range(g.n), key=lambda r: (per_root[r].value, -r))
    return ComplexityReport(
        ipco=per_root[ipco_root].value,
        sipco=per_root[sipco_root].value,
        per_root=per_root,
        ipco_root=ipco_root,
        sipco_root=sipco_root,
        complete=all(rr.complete for rr in per_root),
    )


def ipco(g: Graph, budget: EnumerationBudget | None = None):
    report = complexity_report(g, budget)
    return report.ipco, report


def sipco(g: Graph, budget: EnumerationBudget | None = None):
    report = complexity_report(g, budget)
    return report.sipco, report


# --- side inequalities ----------------------------------------------------


def verify_antichain_length_bound(g: Graph, r: int, p) -> bool:
    """|E(P)| >= |d(r,x) - d(r,y)| + |alpha(r,P)| - 1 must always hold."""
    p = tuple(p)
    dag = build_rooted_dag(g, r)
    _, antichain = _chain_partition(dag, p)
    return len(p) - 1 >= abs(dag.level[p[0]] - dag.level[p[-1]]) + len(
        antichain
    ) - 1


def edge_cover_defect(g: Graph, r: int, p):
    """Minimum cover plus the count of target edges left uncovered.

    Contiguous intersections make the defect at most |cover| - 1
    automatically; the assertion re-checks it.
    """
    p = tuple(p)
    cert = min_rooted_cover(g, r, p)
    covered_edges = set()
    for q in cert.cover:
        for a, b in zip(q, q[1:]):
            covered_edges.add((a, b) if a < b else (b, a))
    uncovered = sum(
        1
        for a, b in zip(p, p[1:])
        if ((a, b) if a < b else (b, a)) not in covered_edges
    )
    assert uncovered <= len(cert.cover) - 1
    return cert, uncovered


# --- brute-force oracles (exhaustive; small graphs only) ------------------


def _all_isometric_paths(g: Graph):
    for u in range(g.n):
        yield (u,)
    for u in range(g.n):
        for v in range(u + 1, g.n):
            paths, complete = enumerate_isometric_paths(g, u, v)
            if not complete:
                raise GraphError("oracle requires complete enumeration")
            yield from paths


def brute_min_cover_value(g: Graph, r: int, p) -> int:
    """Smallest number of r-rooted isometric paths covering V(p), by direct
    search over all r-rooted isometric paths."""
    p = tuple(p)
    target = frozenset(p)
    sets = set()
    for w in range(g.n):
        paths, complete = enumerate_isometric_paths(g, r, w)
        if not complete:
            raise GraphError("oracle requires complete enumeration")
        for q in paths:
            hit = frozenset(q) & target
            if hit:
                sets.add(hit)
    # Drop dominated hit-sets, then search by size.
    useful = [s for s in sets if not any(s < t for t in sets)]
    useful.sort(key=lambda s: (-len(s), sorted(s)))
    for k in range(1, len(p) + 1):
        for combo in combinations(useful, k):
            if frozenset().union(*combo) >= target:
                return k
    raise GraphError("no rooted cover found (disconnected input?)")


def brute_ipcor(g: Graph, r: int) -> int:
    """Reference ipcor: maximize the direct minimum-cover search over every
    isometric path."""
    require_connected(g)
    return max(brute_min_cover_value(g, r, p) for p in _all_isometric_paths(g))


def brute_max_antichain_on_path(dag: RootedDag, p) -> int:
    """Reference maximum antichain by subset search (paths of ~20 vertices)."""
    verts = sorted(set(p))
    best = 0
    for k in range(len(verts), 0, -1):
        if k <= best:
            break
        for combo in combinations(verts, k):
            if antichain_check(dag, combo):
                best = k
                break
    return best
