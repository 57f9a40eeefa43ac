import itertools
import math

import pytest

from cubesign.poly import Poly
from cubesign.sizes import (
    MONOMIAL_BITS,
    VARIABLE_BITS,
    AttackDimensionReport,
    attack_dimension,
    attack_dimension_report,
    format_size_report,
    measure,
    size_records,
)


def test_measure_charges_occurrences_and_monomials():
    # x1*x2*x3 + x3*x4 + x1*x2: 7 variable occurrences across 3 monomials
    p = Poly(4, {0b0111: 1, 0b1100: -1, 0b0011: 1})
    report = measure([p])
    assert report.variable_occurrences == 7
    assert report.monomial_count == 3
    assert report.bits == 7 * VARIABLE_BITS + 3 * MONOMIAL_BITS == 44


def test_measure_counts_repeated_variables_per_monomial():
    # x1 shows up in every monomial and is charged every time
    p = Poly(3, {0b001: 1, 0b011: 1, 0b101: 1, 0b111: 1})
    assert measure([p]).variable_occurrences == 1 + 2 + 2 + 3


def test_measure_of_nothing_is_zero():
    assert measure([]) == measure([Poly.zero(5)])
    assert measure([]).bits == 0


def test_measure_constant_term_is_overhead_only():
    report = measure([Poly.const(-3, 6)])
    assert report.variable_occurrences == 0
    assert report.bits == MONOMIAL_BITS


def test_measure_sums_over_collection():
    a = Poly(4, {0b0111: 1})
    b = Poly(4, {0b1100: -1, 0b0011: 1})
    combined = measure([a, b])
    assert combined.bits == measure([a]).bits + measure([b]).bits
    assert combined.kilobytes == combined.bits / 8192.0


def test_attack_dimension_small_cases():
    assert attack_dimension(2, 0) == 1
    assert attack_dimension(2, 1) == 3  # 1, x1, x2
    assert attack_dimension(2, 2) == 6  # adds x1^2, x1*x2, x2^2
    assert attack_dimension(1, 5) == 6


def test_attack_dimension_matches_enumeration():
    for nvars in range(1, 7):
        for degree in range(7):
            enumerated = sum(
                1
                for k in range(degree + 1)
                for _ in itertools.combinations_with_replacement(range(nvars), k)
            )
            assert attack_dimension(nvars, degree) == enumerated


def test_attack_dimension_validation():
    with pytest.raises(ValueError):
        attack_dimension(0, 3)
    with pytest.raises(ValueError):
        attack_dimension(3, -1)


def test_attack_dimension_report_splits_the_two_counts():
    rep = attack_dimension_report(2, 2)
    assert rep == AttackDimensionReport(2, 2, 6, 3)
    assert not rep.agree
    assert attack_dimension_report(4, 0).agree


def test_attack_dimension_report_production_numerology():
    # 30 fixed-sign slots at degree 27: both readings clear 2**53 comfortably
    rep = attack_dimension_report(30, 27)
    assert rep.count_at_most == math.comb(57, 27) == math.comb(57, 30)
    assert rep.count_exact_degree == math.comb(56, 27)
    assert rep.count_at_most > 2 ** 53
    assert rep.count_exact_degree > 2 ** 52


def test_format_size_report_alignment():
    text = format_size_report(measure([Poly(4, {0b0111: 1, 0b1100: -1, 0b0011: 1})]), "key")
    lines = text.splitlines()
    assert len(lines) == 4
    assert lines[0].startswith("key variable occurrences  7")
    assert "key bits" in text and "44" in text


def test_size_records_are_machine_readable():
    report = measure([Poly(4, {0b0111: 1, 0b1100: -1, 0b0011: 1})])
    assert size_records(report, "sig") == [
        "sig.variable_occurrences=7",
        "sig.monomials=3",
        "sig.bits=44",
        f"sig.kilobytes={44 / 8192.0:.4f}",
    ]
