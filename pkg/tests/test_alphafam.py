import threading
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from qunify.alphafam import (BUILTIN_NAMES, beta_transform, builtin_family, custom_family,
                             dump_family, families_equal, inverse_condition_residuals,
                             inverse_residual, load_family, shortcut_closed_forms,
                             even_equation_sides, ratio_analyze, solve_alpha_system,
                             symmetry_check, series_symmetry_check, table_family)
from qunify.errors import (IndexBeyondTable, InconsistentInput, NotOfThisForm,
                           UnknownFamily, ZeroAlpha)
from qunify.exactnum import ONE, Q, V, ZERO, parse_qrat, q_power
from qunify.qcore import qint, qpochhammer
from qunify.report import HYPOTHESIS_FAILED

ALL = [builtin_family(n) for n in BUILTIN_NAMES]
ones, gauss, improved, half_gauss = ALL


def test_builtin_examples():
    assert improved(1) == ONE
    assert improved(2) == (ONE + Q) / 2
    assert half_gauss(3) == V ** 3
    assert gauss(3) == Q ** 3
    assert ones(7) == ONE


def test_improved_is_pochhammer_over_power_of_two():
    for n in range(10):
        assert improved(n) == qpochhammer(-1, n) / 2 ** n


def test_unknown_family():
    with pytest.raises(UnknownFamily):
        builtin_family("nope")


@pytest.mark.parametrize("fam", ALL, ids=BUILTIN_NAMES)
def test_limits_are_one(fam):
    assert fam.limit_report(12).all_pass


def test_alpha_zero_must_be_one():
    with pytest.raises(InconsistentInput):
        table_family("bad", [2, 1])


def test_table_horizon():
    fam = table_family("t", [1, 1, parse_qrat("(1+q)/2")])
    assert fam(2) == (ONE + Q) / 2
    with pytest.raises(IndexBeyondTable):
        fam(3)


def test_threaded_access_is_consistent():
    fam = custom_family("slow", lambda n: q_power(n) + n)
    results = []

    def work():
        results.append([fam(n) for n in range(30)])
    threads = [threading.Thread(target=work) for _ in range(8)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert all(r == results[0] for r in results)


# -- symmetry -------------------------------------------------------------------

@pytest.mark.parametrize("fam", [improved, half_gauss], ids=["improved", "half_gauss"])
def test_symmetric_families(fam):
    assert symmetry_check(fam, 10).all_pass
    assert series_symmetry_check(fam, 10).all_pass
    assert families_equal(beta_transform(fam), fam, 10)


@pytest.mark.parametrize("fam", [ones, gauss], ids=["ones", "gauss"])
def test_asymmetric_families(fam):
    report = symmetry_check(fam, 10)
    assert [c.n for c in report.failures()] == list(range(2, 11))
    lemma = series_symmetry_check(fam, 10)
    assert lemma.passed
    assert {c.n for c in lemma.with_status(HYPOTHESIS_FAILED)} == set(range(2, 11))


def test_beta_of_ones_is_gauss():
    assert families_equal(beta_transform(ones), gauss, 10)


@pytest.mark.parametrize("fam", [ones, gauss, improved], ids=["ones", "gauss", "improved"])
def test_beta_involution(fam):
    assert families_equal(beta_transform(beta_transform(fam)), fam, 10)


# -- inverse condition and solver ------------------------------------------------

def test_residuals():
    assert all(r.is_zero() for r in inverse_condition_residuals(improved, 12).values())
    assert inverse_residual(ones, 2) == ONE - Q


@pytest.mark.parametrize("fam", ALL, ids=BUILTIN_NAMES)
def test_odd_residuals_vanish(fam):
    res = inverse_condition_residuals(fam, 11)
    assert all(res[n].is_zero() for n in range(1, 12, 2))


@pytest.mark.parametrize("n", [2, 4, 6, 8])
def test_even_equation_matches_residual(n):
    for fam in ALL:
        lhs, rhs = even_equation_sides(fam, n)
        assert (lhs - rhs == 0) == inverse_residual(fam, n).is_zero()


def test_solver_reproduces_improved():
    odd = {k: improved(k) for k in (1, 3, 5, 7)}
    solved = solve_alpha_system(odd, 8)
    assert families_equal(solved, improved, 8)
    assert solved.provenance == "solver"


def test_solver_ones():
    assert solve_alpha_system({1: ONE}, 2)(2) == (ONE + Q) / 2
    fam = solve_alpha_system({k: ONE for k in range(1, 12, 2)}, 12)
    assert all(r.is_zero() for r in inverse_condition_residuals(fam, 12).values())
    assert solve_alpha_system({}, 0).prefix(0) == [ONE]


def test_solver_preconditions():
    with pytest.raises(InconsistentInput):
        solve_alpha_system({1: ONE, 3: ONE}, 8)
    with pytest.raises(ValueError):
        solve_alpha_system({1: ONE}, 3)
    with pytest.raises(InconsistentInput):
        solve_alpha_system({1: 2 * ONE}, 2)


@given(st.lists(st.sampled_from(["1", "q", "(1+q)/2", "1/q", "(1+q^2)/2", "2-q"]),
                min_size=3, max_size=3))
def test_solver_residuals_vanish(values):
    odd = {1: parse_qrat(values[0]), 3: parse_qrat(values[1]), 5: parse_qrat(values[2])}
    fam = solve_alpha_system(odd, 6)
    assert all(r.is_zero() for r in inverse_condition_residuals(fam, 6).values())


def test_shortcut_closed_forms():
    forms = shortcut_closed_forms(improved)
    assert forms[2] == improved(2)
    # the shortcut fourth-order form does not solve the n = 4 equation
    assert forms[4] != improved(4)
    other = solve_alpha_system({1: Q, 3: ONE}, 4)
    assert shortcut_closed_forms(other)[2] != other(2)


# -- ratio analysis ---------------------------------------------------------------

def test_ratio_forms():
    assert ratio_analyze(ones).coefficients == {0: ONE}
    assert ratio_analyze(gauss).coefficients == {1: ONE}
    assert ratio_analyze(improved).coefficients == {0: ONE / 2, 1: ONE / 2}
    for fam in (ones, gauss, improved):
        assert ratio_analyze(fam).sum_at_one() == 1


def test_ratio_refusals():
    with pytest.raises(NotOfThisForm):
        ratio_analyze(half_gauss)
    with pytest.raises(ZeroAlpha):
        ratio_analyze(custom_family("z", lambda n: ONE if n != 2 else ZERO))
    with pytest.raises(ValueError):
        ratio_analyze(ones, 2)


# -- serialization ----------------------------------------------------------------

@pytest.mark.parametrize("fam", ALL, ids=BUILTIN_NAMES)
def test_round_trip(fam):
    back = load_family(dump_family(fam, 9))
    assert back.name == fam.name and families_equal(back, fam, 9)


def test_bad_documents():
    with pytest.raises(InconsistentInput):
        load_family("not json")
    with pytest.raises(InconsistentInput):
        load_family('{"schema": 1}')


def test_value_at_fast_path():
    for n in range(8):
        assert improved.value_at(n, Fraction(1, 2)) == improved(n).evaluate(Fraction(1, 2))
    assert qint(3).evaluate(Fraction(1, 2)) == Fraction(21, 16)
