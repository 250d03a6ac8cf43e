"""Acceptance criteria, one test per criterion, each printing a pass/fail
line with its runtime and asserting the stated tolerance and budget."""

from weylcalc.verify import (check_bs_numerics, check_graph_table,
                             check_iterated_star, check_lemmas,
                             check_order4_table, check_power_oracle,
                             check_quadratic_closed_form, check_resolvent,
                             check_split_coefficients, check_three_forms,
                             check_zag)


def _report(number: int, result, budget: float):
    status = "PASS" if result.passed else "FAIL"
    print(f"ACCEPTANCE {number:2d} {result.name:26s} {status} "
          f"({result.seconds:6.2f}s / budget {budget:.0f}s) {result.detail}")
    assert result.passed, result.detail
    assert result.seconds < budget, (
        f"{result.name} exceeded its runtime budget: "
        f"{result.seconds:.1f}s >= {budget}s")


def test_criterion_01_graph_table():
    _report(1, check_graph_table(), 5.0)


def test_criterion_02_zag_sequence():
    _report(2, check_zag(), 1.0)


def test_criterion_03_power_oracle():
    _report(3, check_power_oracle(), 60.0)


def test_criterion_04_three_form_equivalence():
    _report(4, check_three_forms(), 60.0)


def test_criterion_05_order4_expansion():
    _report(5, check_order4_table(), 30.0)


def test_criterion_06_iterated_star_lemma():
    _report(6, check_iterated_star(), 60.0)


def test_criterion_07_resolvent_identity():
    _report(7, check_resolvent(), 120.0)


def test_criterion_08_quadratic_closed_form():
    _report(8, check_quadratic_closed_form(), 30.0)


def test_criterion_09_bs_coefficients():
    _report(9, check_split_coefficients(), 30.0)


def test_criterion_10_bs_numerics():
    _report(10, check_bs_numerics(), 300.0)


def test_criterion_11_lemma_suite():
    _report(11, check_lemmas(), 60.0)
