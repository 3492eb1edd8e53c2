import pytest

from trilat.lattice import DomainSpec, count_walks
from trilat.verify import ALIASES, SUITES, binomial_factorization_holds, run_suite


def test_aliases_point_at_suites():
    assert set(ALIASES.values()) <= set(SUITES)
    assert [r.check for r in run_suite("prop5", umax=1, nmax=4)] == ["centre-side", "centre-side"]


def test_run_suite_drops_foreign_parameters():
    reports = run_suite("unit-corner", Lmax=3, nmax=2)
    assert len(reports) == 1 and reports[0].passed


def test_run_suite_unknown():
    with pytest.raises(KeyError):
        run_suite("nope")


def test_small_grids_pass():
    for name in ("triangle-total", "line-full", "line-total", "motzkin", "ballot"):
        reports = run_suite(name, Lmax=2, Hmax=1, nmax=6)
        assert reports and all(r.passed for r in reports), name


def test_endpoint_degree_probe_is_report_only():
    probe = run_suite("rational", Lmax=2, order=30)[1]
    assert probe.passed
    assert set(probe.details["corner_to_corner_degrees"]) == {1, 2, 3, 4}


def test_binomial_helper():
    table = count_walks(DomainSpec(2, 3), (2, 1, 0), 8)
    assert all(binomial_factorization_holds(table, n) for n in range(9))
