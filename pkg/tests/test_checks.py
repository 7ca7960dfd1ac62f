import pytest

from qunify import checks
from qunify.alphafam import BUILTIN_NAMES, builtin_family, solve_alpha_system, table_family
from qunify.exactnum import ONE, Q
from qunify.report import FAIL, HYPOTHESIS_FAILED, NOT_APPLICABLE, PASS, Report

ALL = [builtin_family(n) for n in BUILTIN_NAMES]
ones, gauss, improved, half_gauss = ALL


@pytest.mark.parametrize("fam", ALL, ids=BUILTIN_NAMES)
@pytest.mark.parametrize("suite", checks.SUITES)
def test_every_suite_passes_on_builtins(fam, suite):
    report = checks.run_suite(suite, fam, 6, 8)
    assert report.passed, report.render(verbose=False)


def test_inverse_for_ones_is_hypothesis_failure():
    report = checks.inverse_condition_check(ones, 10)
    assert report.passed
    flagged = report.with_status(HYPOTHESIS_FAILED)
    assert flagged[0].n == 2 and flagged[0].lhs == ONE - Q
    assert all(c.status == PASS for c in report.checks if c.n % 2)


def test_inverse_notes_compare_shortcut_forms():
    notes = " ".join(checks.inverse_condition_check(improved, 6).notes)
    assert "agrees" in notes and "differs" in notes


def test_odd_vanishing():
    assert checks.odd_vanishing_check(improved, 11).all_pass
    r = checks.odd_vanishing_check(ones, 11)
    assert r.passed and r.with_status(HYPOTHESIS_FAILED)[0].n == 2
    solved = solve_alpha_system({k: ONE for k in range(1, 12, 2)}, 12)
    assert checks.odd_vanishing_check(solved, 11).all_pass


def test_odd_vanishing_needs_alpha_one():
    fam = table_family("a1", [1, 2 * ONE, ONE, ONE])
    r = checks.odd_vanishing_check(fam, 2)
    assert r.checks[0].status == HYPOTHESIS_FAILED


def test_derivative_not_applicable_for_half_gauss():
    r = checks.derivative_suite(half_gauss, 4)
    assert r.passed and {c.status for c in r.checks} == {NOT_APPLICABLE}


def test_violation_is_reported_with_both_sides():
    # builtin families never fail, so use a synthetic entry
    report = Report("demo")
    report.compare(3, ONE, Q)
    assert not report.passed
    assert "3" in report.render() and "q" in report.render()
    assert report.to_dict()["checks"][0]["status"] == FAIL


def test_classical_limit_reports_poles_as_failures():
    fam = table_family("pole", [1, ONE / (ONE - Q), ONE, ONE])
    report = checks.classical_limit_check(fam, 2)
    assert not report.passed
    assert any("pole" in c.note.lower() for c in report.failures())


def test_horizon_covers_reads():
    for suite in checks.SUITES:
        n = checks.alpha_horizon(suite, 6, 8)
        fam = table_family("t", improved.prefix(max(n, 0)))
        assert checks.run_suite(suite, fam, 6, 8).passed


def test_unknown_suite():
    with pytest.raises(ValueError):
        checks.run_suite("nope", ones, 3)
