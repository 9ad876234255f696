from hypothesis import given, settings
from hypothesis import strategies as st

from ipclab.generators import (
    gen_F,
    gen_complete,
    gen_cycle,
    gen_evenhole_G,
    gen_grid,
    gen_path,
    random_connected,
)
from ipclab.graph import build_graph
from ipclab.holes import (
    brute_force_holes,
    check_evenhole_family,
    enumerate_holes,
    is_monoholed,
    predicted_odd_lengths,
)


def test_cycle_is_its_own_hole():
    report = enumerate_holes(gen_cycle(5))
    assert report.hole_lengths == (5,)
    assert report.is_monoholed and not report.has_even_hole
    assert not report.is_chordal


def test_complete_graph_chordal():
    report = enumerate_holes(gen_complete(4))
    assert report.hole_lengths == ()
    assert report.is_chordal and report.is_monoholed
    assert not report.has_even_hole


def test_triangle_free_of_holes():
    assert enumerate_holes(gen_complete(3)).is_chordal


def test_c6_even_hole():
    report = enumerate_holes(gen_cycle(6))
    assert report.hole_lengths == (6,)
    assert report.has_even_hole


def test_grid_holes():
    # four unit squares plus the induced outer boundary cycle
    report = enumerate_holes(gen_grid(3, 3))
    assert sorted(report.hole_lengths) == [4, 4, 4, 4, 8]
    assert not report.is_monoholed


def test_collect_returns_cycles():
    report, holes = enumerate_holes(gen_cycle(5), collect=True)
    assert len(holes) == 1
    assert sorted(holes[0]) == [0, 1, 2, 3, 4]


def test_max_len_truncates():
    report = enumerate_holes(gen_cycle(8), max_len=5)
    assert report.hole_lengths == ()
    assert not report.enumeration_complete


def test_step_budget_returns_incomplete():
    report = enumerate_holes(gen_grid(3, 3), max_steps=5)
    assert not report.enumeration_complete
    assert is_monoholed(gen_grid(3, 3), max_steps=5) is None


def test_F_family_monoholed():
    for k in (2, 3, 4):
        report = enumerate_holes(gen_F(k))
        assert set(report.hole_lengths) == {2 * k}
        assert report.is_monoholed


def test_tree_vacuously_monoholed():
    g = build_graph([(0, 1), (1, 2), (1, 3)], 4)
    assert is_monoholed(g) is True


def test_two_cycles_sharing_vertex_not_monoholed():
    edges = [(0, 1), (1, 2), (2, 3), (3, 0)]
    edges += [(0, 4), (4, 5), (5, 6), (6, 7), (7, 0)]
    g = build_graph(edges, 8)
    report = enumerate_holes(g)
    assert sorted(report.hole_lengths) == [4, 5]
    assert not report.is_monoholed
    assert report.has_even_hole


def test_predicted_odd_lengths():
    assert predicted_odd_lengths(4, 40) == (9, 19, 29, 39)
    assert predicted_odd_lengths(4, 8) == ()
    assert all(x % 2 == 1 for x in predicted_odd_lengths(6, 200))


def test_evenhole_G_holes_odd():
    report = enumerate_holes(gen_evenhole_G(4))
    assert report.enumeration_complete
    assert report.hole_lengths
    assert all(x % 2 == 1 for x in report.hole_lengths)
    allowed = set(predicted_odd_lengths(4, max(report.hole_lengths)))
    assert set(report.hole_lengths) <= allowed


def test_check_evenhole_family_passes():
    res = check_evenhole_family(4)
    assert res["status"] == "pass"
    assert set(res["graphs"]) == {"G", "Z"}


@settings(deadline=None, max_examples=80)
@given(st.integers(min_value=4, max_value=9), st.integers(min_value=0, max_value=80))
def test_enumeration_matches_brute_force(n, seed):
    g = random_connected(n, 0.35, seed)
    report = enumerate_holes(g)
    assert report.enumeration_complete
    assert tuple(sorted(report.hole_lengths)) == tuple(
        sorted(brute_force_holes(g))
    )


def test_path_graph_chordal():
    assert enumerate_holes(gen_path(6)).is_chordal
