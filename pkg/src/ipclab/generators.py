"""Deterministic constructors for the named graph families and fixtures.

Vertex numbering is frozen per family (special vertices first, then paths in
index order) so that certificates and reports are stable across runs. Every
generator attaches labels naming the construction roles.
"""

from __future__ import annotations

import random

from .graph import Graph, GraphError, build_graph, is_connected


class _Builder:
    """Accumulates labeled vertices and edges, then freezes into a Graph."""

    def __init__(self):
        self.labels: list[str] = []
        self.edges: list[tuple[int, int]] = []
        self._index: dict[str, int] = {}

    def vertex(self, label: str) -> int:
        if label in self._index:
            raise GraphError(f"duplicate label {label!r}")
        v = len(self.labels)
        self.labels.append(label)
        self._index[label] = v
        return v

    def edge(self, u: int, v: int) -> None:
        self.edges.append((u, v))

    def path(self, u: int, v: int, length: int, name: str) -> list[int]:
        """Connect u and v by a fresh path with `length` edges; returns the
        internal vertices (empty when length == 1)."""
        if length < 1:
            raise GraphError(f"path {name} needs length >= 1")
        inner = [self.vertex(f"{name}:{i}") for i in range(1, length)]
        chain = [u, *inner, v]
        for a, b in zip(chain, chain[1:]):
            self.edge(a, b)
        return inner

    def build(self) -> Graph:
        return build_graph(self.edges, len(self.labels), self.labels)


def _check_min(name: str, value: int, minimum: int) -> None:
    if value < minimum:
        raise GraphError(f"{name} requires parameter >= {minimum}, got {value}")


def gen_U(t: int) -> Graph:
    """Path on t vertices plus one universal vertex."""
    _check_min("U", t, 1)
    b = _Builder()
    path = [b.vertex(f"p{i}") for i in range(1, t + 1)]
    hub = b.vertex("u")
    for a, c in zip(path, path[1:]):
        b.edge(a, c)
    for v in path:
        b.edge(hub, v)
    return b.build()


def gen_F(k: int) -> Graph:
    """k internally disjoint paths of length k joining two poles."""
    _check_min("F", k, 2)
    b = _Builder()
    x = b.vertex("x")
    y = b.vertex("y")
    for i in range(1, k + 1):
        b.path(x, y, k, f"P{i}")
    return b.build()


def gen_evenhole_B(k: int) -> Graph:
    """Triangle a-b-c plus a pendant path of length k from a to r."""
    _check_min("B", k, 4)
    b = _Builder()
    a = b.vertex("a")
    bb = b.vertex("b")
    c = b.vertex("c")
    r = b.vertex("r")
    b.edge(a, bb)
    b.edge(bb, c)
    b.edge(c, a)
    b.path(a, r, k, "p")
    return b.build()


def _add_evenhole_G(b: _Builder, k: int, prefix: str = "") -> dict[str, int]:
    """Adds one copy of the even-hole-free chain into the builder and returns
    its special vertices by label."""
    special: dict[str, int] = {}
    for i in range(1, k + 1):
        a = b.vertex(f"{prefix}{i}:a")
        bb = b.vertex(f"{prefix}{i}:b")
        c = b.vertex(f"{prefix}{i}:c")
        r = b.vertex(f"{prefix}{i}:r")
        b.edge(a, bb)
        b.edge(bb, c)
        b.edge(c, a)
        b.path(a, r, k, f"{prefix}{i}:p")
        special.update(
            {f"{i}:a": a, f"{i}:b": bb, f"{i}:c": c, f"{i}:r": r}
        )
    for i in range(2, k + 1):
        b.path(special[f"{i}:r"], special[f"{i-1}:r"], k, f"{prefix}P{i}")
        b.path(special[f"{i}:c"], special[f"{i-1}:b"], k + 1, f"{prefix}Q{i}")
    return special


def gen_evenhole_G(k: int) -> Graph:
    """k pendant-triangle blocks linked by top (length k) and bottom
    (length k+1) connector paths; every hole is odd."""
    _check_min("G", k, 4)
    b = _Builder()
    _add_evenhole_G(b, k)
    return b.build()


def gen_evenhole_Z(k: int) -> Graph:
    """Two copies of the even-hole chain joined by one edge between their
    end vertices labeled `{k}:r`."""
    _check_min("Z", k, 4)
    b = _Builder()
    sx = _add_evenhole_G(b, k, "X:")
    sy = _add_evenhole_G(b, k, "Y:")
    b.edge(sx[f"{k}:r"], sy[f"{k}:r"])
    return b.build()


def _add_linefamily_F(b: _Builder, t: int, prefix: str, r0: int) -> None:
    r = b.vertex(f"{prefix}r")
    b.edge(r, r0)
    spine: list[int] = []
    for i in range(1, t + 1):
        spine.append(b.vertex(f"{prefix}b{i}"))
        spine.append(b.vertex(f"{prefix}c{i}"))
    for a, c in zip(spine, spine[1:]):
        b.edge(a, c)
    for i in range(1, t + 1):
        b.path(r, spine[2 * (i - 1)], t - 1, f"{prefix}Q{i}")


def gen_linefamily_F(t: int) -> Graph:
    """Spine b1 c1 ... bt ct of length 2t-1, pillars of length t-1 from r to
    each b_i, plus a pendant r0 on r."""
    _check_min("linefamily-F", t, 2)
    b = _Builder()
    r0 = b.vertex("r0")
    _add_linefamily_F(b, t, "", r0)
    return b.build()


def gen_linefamily_G(t: int) -> Graph:
    """Two copies of the t-pillar spine graph sharing the vertex r0."""
    _check_min("linefamily-G", t, 2)
    b = _Builder()
    r0 = b.vertex("r0")
    _add_linefamily_F(b, t, "1:", r0)
    _add_linefamily_F(b, t, "2:", r0)
    return b.build()


def gen_H(t: int) -> Graph:
    """Spider with t legs of length t whose consecutive leaf pairs are also
    joined by paths of length t."""
    _check_min("H", t, 2)
    b = _Builder()
    center = b.vertex("c")
    leaves = []
    for i in range(1, t + 1):
        leaf = b.vertex(f"u{i}")
        leaves.append(leaf)
        b.path(center, leaf, t, f"L{i}")
    for i in range(1, t):
        b.path(leaves[i - 1], leaves[i], t, f"C{i}")
    return b.build()


def gen_grid(rows: int, cols: int) -> Graph:
    _check_min("grid rows", rows, 1)
    _check_min("grid cols", cols, 1)
    edges = []
    for i in range(rows):
        for j in range(cols):
            v = i * cols + j
            if j + 1 < cols:
                edges.append((v, v + 1))
            if i + 1 < rows:
                edges.append((v, v + cols))
    labels = [f"{i},{j}" for i in range(rows) for j in range(cols)]
    return build_graph(edges, rows * cols, labels)


def gen_path(n: int) -> Graph:
    _check_min("path", n, 1)
    return build_graph([(i, i + 1) for i in range(n - 1)], n)


def gen_cycle(n: int) -> Graph:
    _check_min("cycle", n, 3)
    return build_graph(
        [(i, (i + 1) % n) for i in range(n)], n
    )


def gen_complete(n: int) -> Graph:
    _check_min("complete", n, 1)
    return build_graph(
        [(i, j) for i in range(n) for j in range(i + 1, n)], n
    )


def gen_K2t(t: int) -> Graph:
    """Complete bipartite graph with sides 2 and t; hubs first."""
    _check_min("K2t", t, 1)
    edges = [(h, 2 + i) for h in (0, 1) for i in range(t)]
    labels = ["h0", "h1"] + [f"w{i+1}" for i in range(t)]
    return build_graph(edges, 2 + t, labels)


def random_connected(n: int, p: float, seed: int) -> Graph:
    """Deterministic seeded Erdos-Renyi sample, re-drawn until connected.

    After a bounded number of failed draws a random spanning tree is laid
    down first, keeping the generator total and still deterministic.
    """
    _check_min("random", n, 1)
    if not (0.0 <= p <= 1.0):
        raise GraphError(f"edge probability {p} outside [0, 1]")
    rng = random.Random(seed)
    for attempt in range(64):
        edges = [
            (i, j)
            for i in range(n)
            for j in range(i + 1, n)
            if rng.random() < p
        ]
        g = build_graph(edges, n)
        if is_connected(g):
            return g
    perm = list(range(n))
    rng.shuffle(perm)
    tree = list(zip(perm, perm[1:]))
    extra = [
        (i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p
    ]
    return build_graph(tree + extra, n)


# CLI-facing registry. Keys are the canonical family names; aliases cover
# the construction-style names used in reports and docs.
FAMILIES = {
    "U": (gen_U, 1),
    "F": (gen_F, 1),
    "evenhole-B": (gen_evenhole_B, 1),
    "evenhole-G": (gen_evenhole_G, 1),
    "evenhole-Z": (gen_evenhole_Z, 1),
    "linefamily-F": (gen_linefamily_F, 1),
    "linefamily-G": (gen_linefamily_G, 1),
    "H": (gen_H, 1),
    "grid": (gen_grid, 2),
    "path": (gen_path, 1),
    "cycle": (gen_cycle, 1),
    "complete": (gen_complete, 1),
    "K2t": (gen_K2t, 1),
}

ALIASES = {
    "U_t": "U",
    "F_k": "F",
    "B_k": "evenhole-B",
    "G_k": "evenhole-G",
    "Z_k": "evenhole-Z",
    "LineFamily_F_t": "linefamily-F",
    "LineFamily_G_t": "linefamily-G",
    "H_t": "H",
    "K_n": "complete",
    "K_2t": "K2t",
}


def generate(family: str, params: list[int]) -> Graph:
    name = ALIASES.get(family, family)
    if name not in FAMILIES:
        known = ", ".join(sorted(FAMILIES))
        raise GraphError(f"unknown family {family!r} (known: {known})")
    fn, arity = FAMILIES[name]
    if len(params) != arity:
        raise GraphError(
            f"family {name} takes {arity} parameter(s), got {len(params)}"
        )
    return fn(*params)
