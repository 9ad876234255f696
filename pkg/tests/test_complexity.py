import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ipclab.complexity import (
    brute_ipcor,
    brute_max_antichain_on_path,
    brute_min_cover_value,
    complexity_report,
    edge_cover_defect,
    ipco,
    ipcor,
    max_antichain_on_path,
    min_rooted_cover,
    sipco,
    validate_antichain_certificate,
    validate_cover_certificate,
    verify_antichain_length_bound,
)
from ipclab.generators import (
    gen_complete,
    gen_cycle,
    gen_grid,
    gen_path,
    random_connected,
)
from ipclab.graph import build_graph
from ipclab.paths import EnumerationBudget, enumerate_isometric_paths, is_isometric
from ipclab.rooted_dag import build_rooted_dag


def test_path_graph_values():
    g = gen_path(6)
    report = complexity_report(g)
    assert report.ipco == 1
    assert report.sipco == 2
    assert report.per_root[0].value == 1
    assert report.per_root[3].value == 2


def test_complete_graph_values():
    report = complexity_report(gen_complete(4))
    assert report.ipco == 2 and report.sipco == 2


def test_cycle_values():
    report = complexity_report(gen_cycle(6))
    assert report.ipco == 2 and report.sipco == 2
    report = complexity_report(gen_cycle(5))
    assert report.ipco == 2 and report.sipco == 2


def test_single_vertex():
    report = complexity_report(build_graph([], 1))
    assert report.ipco == 1 and report.sipco == 1


def test_grid_values():
    report = complexity_report(gen_grid(3, 3))
    assert report.ipco == 2
    assert report.sipco >= report.ipco


def test_root_out_of_range():
    with pytest.raises(IndexError):
        ipcor(gen_path(3), 5)


def test_certificates_validate():
    g = gen_grid(3, 4)
    for r in range(g.n):
        rr = ipcor(g, r)
        ok, reason = validate_antichain_certificate(g, rr.antichain_cert)
        assert ok, reason
        ok, reason = validate_cover_certificate(g, rr.cover_cert)
        assert ok, reason
        assert len(rr.antichain_cert.antichain) == rr.value
        assert len(rr.cover_cert.cover) == rr.value


def test_cover_paths_rooted_and_isometric():
    g = gen_grid(3, 3)
    dag = build_rooted_dag(g, 0)
    path = max(
        (p for u in range(g.n) for v in range(u, g.n)
         for p in enumerate_isometric_paths(g, u, v)[0]),
        key=len,
    )
    cert = min_rooted_cover(g, 0, path, dag=dag)
    for q in cert.cover:
        assert 0 in (q[0], q[-1])
        assert is_isometric(g, q)
    covered = set().union(*map(set, cert.cover))
    assert set(path) <= covered


def test_report_roots_are_extremal():
    g = gen_grid(2, 4)
    report = complexity_report(g)
    values = [rr.value for rr in report.per_root]
    assert report.ipco == min(values)
    assert report.sipco == max(values)
    assert values[report.ipco_root] == report.ipco
    assert values[report.sipco_root] == report.sipco


def test_wrappers_agree_with_report():
    g = gen_cycle(7)
    v1, rep1 = ipco(g)
    v2, rep2 = sipco(g)
    assert v1 == rep1.ipco and v2 == rep2.sipco


def test_report_to_dict_shape():
    d = complexity_report(gen_path(3)).to_dict()
    assert set(d) == {"ipco", "sipco", "per_root", "witness"}
    assert all(set(e) == {"root", "ipcor", "complete"} for e in d["per_root"])
    assert set(d["witness"]) == {"ipco", "sipco"}


def test_truncated_budget_flags_incomplete():
    g = gen_grid(3, 3)
    rr = ipcor(g, 0, budget=EnumerationBudget(max_paths_per_pair=1))
    full = ipcor(g, 0)
    assert rr.value <= full.value
    if rr.value < full.value:
        assert not rr.complete


@settings(deadline=None, max_examples=60)
@given(st.integers(min_value=2, max_value=7), st.integers(min_value=0, max_value=60))
def test_ipcor_matches_brute_force(n, seed):
    g = random_connected(n, 0.35, seed)
    for r in range(n):
        rr = ipcor(g, r)
        assert rr.complete
        assert rr.value == brute_ipcor(g, r)


@settings(deadline=None, max_examples=40)
@given(st.integers(min_value=3, max_value=8), st.integers(min_value=0, max_value=60))
def test_antichain_equals_min_cover_on_witness(n, seed):
    g = random_connected(n, 0.3, seed)
    for r in range(n):
        dag = build_rooted_dag(g, r)
        rr = ipcor(g, r)
        p = rr.antichain_cert.path
        anti = max_antichain_on_path(dag, p)
        assert len(anti.antichain) == brute_max_antichain_on_path(dag, p)
        assert len(anti.antichain) == brute_min_cover_value(g, r, p)


@settings(deadline=None, max_examples=40)
@given(st.integers(min_value=2, max_value=8), st.integers(min_value=0, max_value=60))
def test_length_bound_on_all_isometric_paths(n, seed):
    g = random_connected(n, 0.35, seed)
    for r in range(n):
        for u in range(n):
            for v in range(u + 1, n):
                for p in enumerate_isometric_paths(g, u, v)[0]:
                    assert verify_antichain_length_bound(g, r, p)


def test_edge_cover_defect_small():
    g = gen_path(5)
    cert, defect = edge_cover_defect(g, 2, (0, 1, 2, 3, 4))
    assert defect <= len(cert.cover) - 1
