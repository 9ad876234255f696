import pytest

from ipclab.generators import gen_complete, gen_cycle, gen_grid, gen_path
from ipclab.graph import GraphError, build_graph
from ipclab.operators import (
    BLACK,
    RED,
    CliqueSumPlan,
    base_path_image,
    check_cliquesum_structure,
    check_line_structure,
    check_power_structure,
    clique_sum,
    edge_sequence_as_path,
    line_graph,
    power,
    red_path_base_cover,
    rooted_power_cover,
    two_path_rooted_cover,
)


def test_power_path_squared():
    pg = power(gen_path(5), 2)
    h = pg.result
    assert h.edge_count == 7
    colors = list(pg.edge_color.values())
    assert colors.count(BLACK) == 4
    assert colors.count(RED) == 3
    assert max(
        h.distance_matrix.dist(u, v) for u in range(5) for v in range(5)
    ) == 2


def test_power_identity_at_r1():
    g = gen_grid(2, 3)
    pg = power(g, 1)
    assert pg.result.edges == g.edges
    assert set(pg.edge_color.values()) == {BLACK}


def test_power_cycle_squared_degrees():
    pg = power(gen_cycle(6), 2)
    assert all(pg.result.degree(v) == 4 for v in range(6))


def test_power_validation():
    with pytest.raises(GraphError):
        power(gen_path(3), 0)


def test_power_checks_clean():
    for g, r in [(gen_path(7), 2), (gen_cycle(6), 2), (gen_grid(2, 4), 3)]:
        res = check_power_structure(power(g, r))
        assert res["violations"] == []
        assert res["complete"]
        assert res["power_paths_checked"] > 0


def test_red_path_base_cover_piece_count():
    pg = power(gen_path(9), 2)
    # 0-2-4-6-8 is an all-red isometric path of the square
    pieces = red_path_base_cover(pg, (0, 2, 4, 6, 8))
    assert len(pieces) <= 2 * pg.r - 1
    assert {0, 2, 4, 6, 8} <= set().union(*map(set, pieces))


def test_rooted_power_cover_size():
    pg = power(gen_path(9), 3)
    covers = rooted_power_cover(pg, tuple(range(9)))
    assert len(covers) <= 3
    assert all(q[0] == 0 for q in covers)


def test_line_graph_of_triangle():
    lg = line_graph(gen_complete(3))
    assert lg.result.n == 3 and lg.result.edge_count == 3


def test_line_graph_of_path():
    lg = line_graph(gen_path(4))
    assert lg.result.n == 3 and lg.result.edges == ((0, 1), (1, 2))


def test_line_graph_of_claw():
    lg = line_graph(build_graph([(0, 1), (0, 2), (0, 3)], 4))
    assert lg.result.n == 3 and lg.result.edge_count == 3


def test_line_graph_edgeless():
    with pytest.raises(GraphError):
        line_graph(build_graph([], 2))


def test_edge_sequence_ordering():
    g = gen_path(4)
    assert edge_sequence_as_path(g, [(1, 2), (0, 1)]) in ((0, 1, 2), (2, 1, 0))
    assert edge_sequence_as_path(g, [(0, 1), (2, 3)]) is None


def test_base_path_image_round_trip():
    g = gen_path(5)
    lg = line_graph(g)
    seq = base_path_image(lg, (0, 1, 2, 3, 4))
    assert len(seq) == 4
    back = edge_sequence_as_path(g, [lg.edge_of_vertex[x] for x in seq])
    assert back in ((0, 1, 2, 3, 4), (4, 3, 2, 1, 0))


def test_two_path_rooted_cover_direct():
    g = gen_cycle(5)
    lg = line_graph(g)
    seq = base_path_image(lg, (0, 1, 2))
    root = seq[0]
    cover = two_path_rooted_cover(lg, root, seq)
    assert cover is not None and len(cover) <= 2
    assert set(seq) | {root} <= set().union(*map(set, cover))


def test_line_checks_clean():
    for g in [gen_path(5), gen_cycle(5), gen_grid(2, 3), gen_complete(4)]:
        res = check_line_structure(line_graph(g))
        assert res["violations"] == []
        assert res["complete"]
        assert res["cover_cases"] > 0


def test_clique_sum_two_triangles_on_edge():
    t = gen_complete(3)
    plan = CliqueSumPlan((t, t), (((0, (0, 1), 1, (0, 1))),))
    res = clique_sum(plan)
    assert res.graph.n == 4 and res.graph.edge_count == 5
    checks = check_cliquesum_structure(plan, res)
    assert checks["violations"] == [] and checks["complete"]


def test_clique_sum_shared_vertex():
    t = gen_complete(3)
    plan = CliqueSumPlan((t, t), ((0, (2,), 1, (0,)),))
    res = clique_sum(plan)
    assert res.graph.n == 5 and res.graph.edge_count == 6


def test_clique_sum_errors():
    p = gen_path(3)
    t = gen_complete(3)
    with pytest.raises(GraphError, match="not a clique"):
        clique_sum(CliqueSumPlan((p, t), ((0, (0, 2), 1, (0, 1)),)))
    with pytest.raises(GraphError, match="size mismatch"):
        clique_sum(CliqueSumPlan((t, t), ((0, (0, 1), 1, (0,)),)))
    with pytest.raises(GraphError, match="merges the endpoints"):
        clique_sum(CliqueSumPlan((t, t), ((0, (0,), 1, (0,)), (0, (1,), 1, (0,)))))
    with pytest.raises(GraphError, match="disconnected"):
        clique_sum(CliqueSumPlan((t, t), ()))
    with pytest.raises(IndexError):
        clique_sum(CliqueSumPlan((t,), ((0, (0,), 4, (0,)),)))


def test_clique_sum_projections():
    t = gen_complete(3)
    plan = CliqueSumPlan((t, t), ((0, (0, 1), 1, (0, 1)),))
    res = clique_sum(plan)
    p0, p1 = res.projections
    assert p0[0] == p1[0] and p0[1] == p1[1]
    assert p0[2] != p1[2]
