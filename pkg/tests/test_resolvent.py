from fractions import Fraction

import pytest

from weylcalc.errors import DimensionMismatch
from weylcalc.poly import PhasePolynomial, parse_symbol
from weylcalc.resolvent import ResolventSymbol


@pytest.fixture
def base():
    return parse_symbol("x^2 + p^2")


def test_reciprocal_times_linear_is_one(base):
    r = ResolventSymbol.simple_pole(base, PhasePolynomial.one(1), 1)
    ama = ResolventSymbol.a_minus_base(base)
    assert (r * ama).equals(ResolventSymbol.constant(base, 1))


def test_derivative_quotient_rule(base):
    r = ResolventSymbol.simple_pole(base, PhasePolynomial.one(1), 1)
    expected = ResolventSymbol.simple_pole(base, base.diff(0), 2)
    assert r.diff(0).equals(expected)


def test_addition_with_cancellation(base):
    # 1/(a-A) + A/(a-A)^2 = a/(a-A)^2
    r1 = ResolventSymbol.simple_pole(base, PhasePolynomial.one(1), 1)
    r2 = ResolventSymbol.simple_pole(base, base, 2)
    total = r1 + r2
    expected = ResolventSymbol(base, {1: PhasePolynomial.one(1)}, 2)
    assert total.equals(expected)


def test_reduced_cancels_common_factor(base):
    ama = ResolventSymbol.a_minus_base(base)
    r = ResolventSymbol.simple_pole(base, PhasePolynomial.one(1), 2) * ama
    reduced = r.reduced()
    assert reduced.pole_order == 1
    assert reduced.equals(r)


def test_equality_matches_evaluation(base, rng):
    r1 = ResolventSymbol.simple_pole(base, base * 2, 2)
    r2 = (ResolventSymbol.simple_pole(base, PhasePolynomial.one(1), 1) * 2
          * ResolventSymbol.simple_pole(base, base, 1))
    assert r1.equals(r2)
    for _ in range(5):
        z = (Fraction(rng.randint(-3, 3), 2), Fraction(rng.randint(-3, 3), 2))
        a_val = Fraction(rng.randint(4, 9)) + base.evaluate(z).re
        assert r1.evaluate(z, a_val) == r2.evaluate(z, a_val)


def test_mixed_bases_rejected(base):
    other = parse_symbol("x^2")
    r1 = ResolventSymbol.simple_pole(base, PhasePolynomial.one(1), 1)
    r2 = ResolventSymbol.simple_pole(other, PhasePolynomial.one(1), 1)
    with pytest.raises(DimensionMismatch):
        _ = r1 + r2
