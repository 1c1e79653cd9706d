"""Acceptance gate: one test per criterion, each printing its pass/fail line."""

import pytest

from paintedlie.verify import (
    check_automorphism_oracle,
    check_classification,
    check_enumeration_bijection,
    check_homomorphism,
    check_kac_condition,
    check_marks_oracle,
    check_semisimple_orders,
    check_su_table,
)


def _assert_passed(result):
    print(result.line())
    assert result.passed, result.detail


def test_criterion_1_su_table():
    _assert_passed(check_su_table())


def test_criterion_2_kac_condition():
    _assert_passed(check_kac_condition(max_rank=8))


def test_criterion_3_marks_oracle():
    _assert_passed(check_marks_oracle(max_rank=8))


def test_criterion_4_automorphism_oracle():
    _assert_passed(check_automorphism_oracle(max_rank=8))


def test_criterion_5_enumeration_bijection():
    _assert_passed(check_enumeration_bijection(max_rank=8))


def test_criterion_6_homomorphism():
    _assert_passed(check_homomorphism(max_rank=8, samples=1000))


def test_criterion_7_classification():
    result = check_classification()
    _assert_passed(result)
    assert "53" in result.detail


def test_criterion_8_semisimple_orders():
    _assert_passed(check_semisimple_orders())


@pytest.fixture(scope="session", autouse=True)
def _summary_note(request):
    yield
    print("\nacceptance criteria: run `paintedlie verify` for the standalone report")
