from itertools import permutations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ipclab.generators import gen_cycle, gen_grid, gen_path, random_connected
from ipclab.graph import build_graph
from ipclab.paths import (
    EnumerationBudget,
    PathCache,
    all_pairs_counts,
    count_isometric_paths,
    default_budget,
    enumerate_isometric_paths,
    is_isometric,
    is_path,
    subpaths_are_isometric,
)


def test_is_path():
    g = gen_cycle(5)
    assert is_path(g, [0, 1, 2])
    assert not is_path(g, [0, 2])
    assert not is_path(g, [0, 1, 0])
    assert not is_path(g, [])
    assert not is_path(g, [0, 9])
    assert is_path(g, [3])


def test_is_isometric():
    g = gen_cycle(6)
    assert is_isometric(g, [0, 1, 2, 3])
    assert not is_isometric(g, [0, 1, 2, 3, 4])
    assert is_isometric(g, [4])


def test_enumerate_grid_corner_paths():
    g = gen_grid(2, 2)
    paths, complete = enumerate_isometric_paths(g, 0, 3)
    assert complete
    assert len(paths) == 2
    assert all(p[0] == 0 and p[-1] == 3 and len(p) == 3 for p in paths)
    assert paths == tuple(sorted(paths))


def test_enumerate_cycle_antipodal():
    g = gen_cycle(6)
    paths, complete = enumerate_isometric_paths(g, 0, 3)
    assert complete
    assert len(paths) == 2


def test_enumeration_matches_count():
    g = gen_grid(3, 3)
    for (u, v), c in all_pairs_counts(g).items():
        paths, complete = enumerate_isometric_paths(g, u, v)
        assert complete
        assert len(paths) == c


def test_budget_truncation():
    g = gen_grid(3, 3)
    budget = EnumerationBudget(max_paths_per_pair=2)
    paths, complete = enumerate_isometric_paths(g, 0, 8, budget)
    assert not complete
    assert len(paths) == 2
    assert not budget.complete
    full, _ = enumerate_isometric_paths(g, 0, 8)
    assert paths == full[:2]


def test_budget_total_cap():
    g = gen_grid(3, 3)
    budget = EnumerationBudget(max_total_paths=3)
    enumerate_isometric_paths(g, 0, 8, budget)
    assert not budget.complete
    assert budget.total_used <= 3


def test_budget_validation():
    with pytest.raises(ValueError):
        EnumerationBudget(max_paths_per_pair=0)


def test_default_budget_env(monkeypatch):
    monkeypatch.delenv("IPCLAB_BUDGET", raising=False)
    b = default_budget()
    assert b.max_paths_per_pair == 10**6
    monkeypatch.setenv("IPCLAB_BUDGET", "5,9")
    b = default_budget()
    assert b.max_paths_per_pair == 5 and b.max_total_paths == 9
    monkeypatch.setenv("IPCLAB_BUDGET", "bogus")
    with pytest.raises(ValueError):
        default_budget()


def test_path_cache_orientation():
    g = gen_path(4)
    cache = PathCache(g)
    a, _ = cache.pair_paths(3, 0)
    b, _ = cache.pair_paths(0, 3)
    assert a is b
    assert a[0][0] == 0


def brute_isometric_paths(g, u, v):
    d = g.distance_matrix.dist(u, v)
    found = []
    for mid in permutations([x for x in range(g.n) if x not in (u, v)], d - 1):
        p = (u,) + mid + (v,)
        if all(g.has_edge(p[i], p[i + 1]) for i in range(len(p) - 1)):
            found.append(p)
    return sorted(found)


@given(st.integers(min_value=2, max_value=7), st.integers(min_value=0, max_value=40))
def test_enumeration_against_brute_force(n, seed):
    g = random_connected(n, 0.4, seed)
    for u in range(n):
        for v in range(u + 1, n):
            paths, complete = enumerate_isometric_paths(g, u, v)
            assert complete
            assert list(paths) == brute_isometric_paths(g, u, v)
            assert len(paths) == count_isometric_paths(g, u, v)


@given(st.integers(min_value=2, max_value=8), st.integers(min_value=0, max_value=40))
def test_isometric_paths_closed_under_subpaths(n, seed):
    g = random_connected(n, 0.35, seed)
    for u in range(n):
        for v in range(u + 1, n):
            paths, _ = enumerate_isometric_paths(g, u, v)
            for p in paths:
                assert subpaths_are_isometric(g, p)


def test_count_disconnected_pair():
    from ipclab.graph import GraphError

    g = build_graph([(0, 1)], 3)
    with pytest.raises(GraphError):
        count_isometric_paths(g, 0, 2)
