from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from weylcalc.errors import CapacityError
from weylcalc.poly import PhasePolynomial, parse_symbol
from weylcalc.series import HbarSeries


def small_series():
    coeff = st.integers(-3, 3)
    exponent = st.tuples(st.integers(0, 2), st.integers(0, 2))
    poly = st.dictionaries(exponent, coeff, max_size=3).map(
        lambda t: PhasePolynomial(1, {e: Fraction(c) for e, c in t.items() if c}))
    return st.lists(poly, min_size=1, max_size=4).map(
        lambda cs: HbarSeries(1, 3, cs))


@settings(max_examples=30, deadline=None)
@given(small_series(), small_series(), small_series())
def test_ring_axioms_mod_truncation(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


def test_truncation_discards_high_powers():
    x = parse_symbol("x")
    s = HbarSeries.monomial(x, 3, 4)
    assert (s * s).is_zero  # grade 6 exceeds the truncation
    t = HbarSeries.monomial(x, 2, 4)
    assert (t * t).coefficient(4) == x * x


def test_order_guard():
    with pytest.raises(CapacityError):
        HbarSeries(1, 9)


def test_json_round_trip():
    s = HbarSeries(1, 2, [parse_symbol("x"), parse_symbol("p"),
                          parse_symbol("x*p")])
    assert HbarSeries.from_json_dict(s.to_json_dict()) == s


def test_evaluate_per_grade():
    s = HbarSeries(1, 1, [parse_symbol("x^2"), parse_symbol("p")])
    values = s.evaluate((Fraction(2), Fraction(-3)))
    assert values[0] == 4 and values[1] == -3
