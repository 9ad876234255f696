import json

import pytest

from ipclab.verify import SCHEMA, SUITE_IDS, SUITES, run_suite


def canonical(doc):
    return json.dumps(doc, sort_keys=True, separators=(",", ":"))


def test_suite_registry_complete():
    assert tuple(sorted(SUITES)) == tuple(sorted(SUITE_IDS))


def test_unknown_suite():
    with pytest.raises(KeyError):
        run_suite("no-such-suite")


def test_unsupported_params_ignored():
    rep = run_suite("grid-growth", n_lo=3, n_hi=4, cases=999, seed=7)
    assert rep["schema"] == SCHEMA


def test_power_bounds_small():
    rep = run_suite("power-bounds", cases=25, n_max=7, seed=1)
    assert rep["suite"] == "power-bounds"
    assert rep["status"] == "pass"
    assert rep["schema"] == SCHEMA


def test_line_bounds_small():
    rep = run_suite("line-bounds", cases=25, n_max=7, seed=1)
    assert rep["status"] == "pass"


def test_cliquesum_bounds_small():
    rep = run_suite("cliquesum-bounds", cases=15, seed=1, complete_cases=5)
    assert rep["status"] == "pass"


def test_evenhole_family_small():
    rep = run_suite("evenhole-family", k=4)
    assert rep["status"] == "pass"


def test_linefamily_small():
    rep = run_suite("linefamily", t=2)
    assert rep["status"] == "pass"


def test_cross_oracle_small():
    rep = run_suite("cross-oracle", cases=30, n_max=7, seed=1, brute_n_max=6)
    assert rep["status"] == "pass"


def test_connect_claims_small():
    rep = run_suite("connect-claims", invocations=60, n_max=9, seed=1)
    assert rep["status"] == "pass"


def test_fatminor_transform_small():
    rep = run_suite("fatminor-transform", ts=(2,), ks=(12, 13))
    assert rep["status"] == "pass"


def test_grid_growth_reports_violation():
    # Equal consecutive grid values make strict growth fail; the suite must
    # report it rather than hide it.
    rep = run_suite("grid-growth", n_lo=3, n_hi=5)
    assert rep["status"] == "fail"


def test_reports_deterministic():
    a = run_suite("power-bounds", cases=10, n_max=7, seed=3)
    b = run_suite("power-bounds", cases=10, n_max=7, seed=3)
    assert canonical(a) == canonical(b)
    c = run_suite("connect-claims", invocations=30, n_max=8, seed=3)
    d = run_suite("connect-claims", invocations=30, n_max=8, seed=3)
    assert canonical(c) == canonical(d)


def test_report_common_shape():
    rep = run_suite("linefamily", t=2)
    for key in ("schema", "suite", "params", "status", "cases"):
        assert key in rep
