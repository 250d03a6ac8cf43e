from fractions import Fraction

import pytest

from weylcalc.errors import DimensionMismatch
from weylcalc.poly import PhasePolynomial
from weylcalc.tensors import (bracket_k, moyal_tensor, poisson_bracket,
                              standard_order_tensor)

J1 = moyal_tensor(1)


def test_canonical_bracket():
    x = PhasePolynomial.x(1)
    p = PhasePolynomial.p(1)
    assert poisson_bracket(x, p, J1) == PhasePolynomial.one(1)
    assert poisson_bracket(p, x, J1) == -PhasePolynomial.one(1)


def test_bracket_antisymmetry(random_symbol):
    a = random_symbol()
    assert poisson_bracket(a, a, J1).is_zero


def test_bracket_hand_value():
    x = PhasePolynomial.x(1)
    p = PhasePolynomial.p(1)
    assert poisson_bracket(x ** 2, p ** 2, J1) == 4 * x * p


def test_bracket_k_values():
    x = PhasePolynomial.x(1)
    p = PhasePolynomial.p(1)
    c, d = x ** 2, p ** 2
    assert bracket_k(c, d, 0, J1) == c * d
    assert bracket_k(c, d, 1, J1) == poisson_bracket(c, d, J1)
    # second bracket of x^2 against p^2: the only index assignment is
    # (x,x)->(p,p), giving 2 * 2 = 4; cross-checked by the star product
    # x^2 * p^2 = x^2 p^2 + 2 i hbar x p - hbar^2 / 2 whose hbar^2 piece
    # forces (1/2!)(i/2)^2 {x^2,p^2}_2 = -1/2
    assert bracket_k(c, d, 2, J1) == PhasePolynomial.constant(1, 4)


def test_bracket_k_vanishes_past_degree(random_symbol):
    a = random_symbol(degree=2)
    b = random_symbol()
    assert bracket_k(a, b, a.total_degree() + 1, J1).is_zero


def test_bracket_k_sign_symmetry(random_symbol):
    a = random_symbol()
    b = random_symbol()
    for k in range(4):
        lhs = bracket_k(a, b, k, J1)
        rhs = bracket_k(b, a, k, J1) * Fraction((-1) ** k)
        assert lhs == rhs


def test_leibniz(random_symbol):
    c = random_symbol(degree=2)
    d = random_symbol(degree=2)
    e = random_symbol(degree=2)
    assert poisson_bracket(c * d, e, J1) == \
        c * poisson_bracket(d, e, J1) + poisson_bracket(c, e, J1) * d


def test_standard_tensor_shape():
    t = standard_order_tensor(2)
    m = t.matrix()
    assert m[2][0] == 1 and m[3][1] == 1
    assert not t.is_antisymmetric
    assert moyal_tensor(2).is_antisymmetric


def test_dimension_mismatch():
    a = PhasePolynomial.x(1)
    b = PhasePolynomial.x(2)
    with pytest.raises(DimensionMismatch):
        poisson_bracket(a, b, J1)
