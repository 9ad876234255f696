"""Hole (induced cycle of length >= 4) enumeration and classification.

The enumerator grows induced paths from each start vertex, keeping only
extensions with no chord back into the path, and closes a cycle when the
path end reattaches to the start. Canonical form: the start is the cycle's
minimum vertex and the second vertex is smaller than the last, so each hole
is emitted exactly once.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph

DEFAULT_MAX_STEPS = 10**7


@dataclass(frozen=True)
class HoleReport:
    hole_lengths: tuple[int, ...]
    is_chordal: bool
    is_monoholed: bool
    has_even_hole: bool
    enumeration_complete: bool

    def to_dict(self) -> dict:
        return {
            "hole_lengths": list(self.hole_lengths),
            "is_chordal": self.is_chordal,
            "is_monoholed": self.is_monoholed,
            "has_even_hole": self.has_even_hole,
            "enumeration_complete": self.enumeration_complete,
        }


def enumerate_holes(
    g: Graph,
    max_len: int | None = None,
    max_steps: int = DEFAULT_MAX_STEPS,
    collect: bool = False,
):
    """All holes of length 4..max_len, as a HoleReport.

    With collect=True returns (report, holes) where holes lists each cycle's
    vertex sequence in canonical orientation.
    """
    if max_len is None:
        max_len = g.n
    max_len = min(max_len, g.n)
    lengths: list[int] = []
    found: list[tuple[int, ...]] = []
    steps = 0
    complete = True

    adj = g.adj

    for s in range(g.n):
        # path holds an induced path s, v1, ..., end with all vertices > s
        # except s itself; on_path flags membership.
        stack_path: list[int] = [s]

        def dfs() -> bool:
            nonlocal steps, complete
            steps += 1
            if steps > max_steps:
                complete = False
                return False
            end = stack_path[-1]
            for w in g.sorted_adj[end]:
                if w <= s or w in stack_path:
                    continue
                # Chord check: w may touch only the path end (and the start
                # when closing).
                interior = stack_path[1:-1]
                if any(x in adj[w] for x in interior):
                    continue
                closes = len(stack_path) >= 2 and s in adj[w]
                if closes:
                    if len(stack_path) >= 3 and stack_path[1] < w:
                        if len(stack_path) + 1 <= max_len:
                            lengths.append(len(stack_path) + 1)
                            if collect:
                                found.append(tuple(stack_path) + (w,))
                    # Extending past w would leave the chord w-s in place.
                    continue
                if len(stack_path) + 1 >= max_len:
                    continue
                stack_path.append(w)
                ok = dfs()
                stack_path.pop()
                if not ok:
                    return False
            return True

        if not dfs():
            break

    if max_len < g.n:
        complete = False
    lengths.sort()
    report = HoleReport(
        hole_lengths=tuple(lengths),
        is_chordal=not lengths,
        is_monoholed=len(set(lengths)) <= 1,
        has_even_hole=any(x % 2 == 0 for x in lengths),
        enumeration_complete=complete,
    )
    if collect:
        return report, tuple(found)
    return report


def is_monoholed(
    g: Graph, max_steps: int = DEFAULT_MAX_STEPS
) -> bool | None:
    """True iff every hole has the same length (vacuously true when no hole
    exists); None when enumeration was cut short."""
    report = enumerate_holes(g, max_steps=max_steps)
    if not report.enumeration_complete:
        return None
    return report.is_monoholed


def brute_force_holes(g: Graph) -> tuple[int, ...]:
    """Oracle: test every vertex subset of size >= 4 for inducing a cycle.

    Exponential; intended for n <= 12 cross-checks only.
    """
    from itertools import combinations

    lengths = []
    for size in range(4, g.n + 1):
        for subset in combinations(range(g.n), size):
            inside = set(subset)
            degs = [sum(1 for w in g.adj[v] if w in inside) for v in subset]
            if any(d != 2 for d in degs):
                continue
            # All degrees 2: a disjoint union of cycles; connected <=> one.
            seen = {subset[0]}
            frontier = [subset[0]]
            while frontier:
                v = frontier.pop()
                for w in g.adj[v]:
                    if w in inside and w not in seen:
                        seen.add(w)
                        frontier.append(w)
            if len(seen) == size:
                lengths.append(size)
    return tuple(sorted(lengths))


def predicted_odd_lengths(k: int, max_len: int) -> tuple[int, ...]:
    """Hole lengths j*(2k+2)-1 up to max_len (all odd)."""
    out = []
    j = 1
    while j * (2 * k + 2) - 1 <= max_len:
        out.append(j * (2 * k + 2) - 1)
        j += 1
    return tuple(out)


def check_evenhole_family(k: int, max_steps: int = DEFAULT_MAX_STEPS) -> dict:
    """Completely enumerates the holes of the pendant-triangle chain graph
    and its doubled variant, asserting every length is odd and matches the
    arithmetic progression j*(2k+2)-1."""
    from .generators import gen_evenhole_G, gen_evenhole_Z

    results = {}
    status = "pass"
    for name, g in (("G", gen_evenhole_G(k)), ("Z", gen_evenhole_Z(k))):
        report = enumerate_holes(g, max_len=g.n, max_steps=max_steps)
        allowed = set(predicted_odd_lengths(k, g.n))
        odd = all(x % 2 == 1 for x in report.hole_lengths)
        in_formula = set(report.hole_lengths) <= allowed
        if not report.enumeration_complete:
            status = "inconclusive"
        elif not (odd and in_formula):
            status = "fail"
        results[name] = {
            "n": g.n,
            "hole_lengths": sorted(set(report.hole_lengths)),
            "hole_count": len(report.hole_lengths),
            "all_odd": odd,
            "formula_lengths": sorted(allowed),
            "within_formula": in_formula,
            "complete": report.enumeration_complete,
        }
    return {"k": k, "status": status, "graphs": results}
