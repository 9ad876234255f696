import pytest
from hypothesis import given
from hypothesis import strategies as st

from ipclab.generators import gen_cycle, gen_grid, gen_path, random_connected
from ipclab.graph import GraphError, build_graph
from ipclab.rooted_dag import (
    antichain_check,
    build_rooted_dag,
    comparable,
    descent_to_root,
    directed_path,
)


def test_levels_are_bfs_distances():
    g = gen_grid(3, 3)
    dag = build_rooted_dag(g, 0)
    assert dag.level == g.distance_matrix.row(0)


def test_equal_level_edges_dropped():
    g = gen_cycle(4)
    dag = build_rooted_dag(g, 0)
    # vertices 1 and 3 sit at level 1; their edges to 2 (level 2) point down
    assert dag.down[2] == (1, 3)
    assert dag.down[1] == (0,)
    assert 3 not in dag.down[1] and 1 not in dag.down[3]


def test_bad_root():
    with pytest.raises(IndexError):
        build_rooted_dag(gen_path(3), 7)


def test_comparable_and_antichain():
    g = gen_path(4)
    dag = build_rooted_dag(g, 0)
    assert comparable(dag, 3, 1)
    assert comparable(dag, 2, 2)
    assert antichain_check(dag, [2])
    assert not antichain_check(dag, [1, 3])


def test_c4_antipodal_antichain():
    dag = build_rooted_dag(gen_cycle(4), 0)
    assert antichain_check(dag, [1, 3])
    assert comparable(dag, 2, 1)


def test_directed_path_and_descent():
    g = gen_grid(3, 3)
    dag = build_rooted_dag(g, 0)
    p = directed_path(dag, 8, 0)
    assert p[0] == 8 and p[-1] == 0
    assert len(p) == dag.level[8] + 1
    assert descent_to_root(dag, 8) == p


def test_directed_path_absent():
    dag = build_rooted_dag(gen_cycle(4), 0)
    with pytest.raises(GraphError):
        directed_path(dag, 1, 3)


@given(st.integers(min_value=2, max_value=9), st.integers(min_value=0, max_value=50))
def test_reach_consistent_with_directed_paths(n, seed):
    g = random_connected(n, 0.35, seed)
    dag = build_rooted_dag(g, 0)
    for x in range(n):
        for y in range(n):
            if (dag.reach[x] >> y) & 1:
                p = directed_path(dag, x, y)
                levels = [dag.level[v] for v in p]
                assert levels == list(range(levels[0], levels[-1] - 1, -1))


@given(st.integers(min_value=2, max_value=9), st.integers(min_value=0, max_value=50))
def test_root_reaches_nothing_but_itself(n, seed):
    g = random_connected(n, 0.3, seed)
    dag = build_rooted_dag(g, 1 % n)
    assert dag.reach[dag.root] == 1 << dag.root
    # every vertex reaches the root
    for v in range(n):
        assert (dag.reach[v] >> dag.root) & 1


def test_topological_order_respects_edges():
    g = build_graph([(0, 1), (1, 2), (0, 3), (3, 2), (2, 4)], 5)
    dag = build_rooted_dag(g, 0)
    order = dag.topological_order()
    pos = {v: i for i, v in enumerate(order)}
    for v in range(g.n):
        for w in dag.down[v]:
            assert pos[v] < pos[w]
