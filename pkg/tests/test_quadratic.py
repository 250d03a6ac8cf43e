from fractions import Fraction

import pytest

from weylcalc.contraction import contract
from weylcalc.errors import DimensionMismatch
from weylcalc.funcalc import symbol_of_function_connected, \
    symbol_of_function_unlabeled
from weylcalc.graphs import enumerate_reduced, sign_sum_directed
from weylcalc.poly import PhasePolynomial
from weylcalc.quadratic import (QuadraticForm, chain_graph_edges, chain_sign,
                                chain_sign_sums, cycle_graph_edges, cycle_sign,
                                jet_series_as_time_cells, lambda_closed_forms,
                                parse_q_matrix, quadratic_closed_symbol,
                                time_evolution_cells, zag_numbers,
                                zag_via_bernoulli, zag_via_tangent)
from weylcalc.star import StarConfig
from weylcalc.tensors import moyal_tensor

UNIT = QuadraticForm.from_matrix([[1, 0], [0, 1]])


def test_zag_three_routes_agree():
    assert zag_numbers(4) == [1, 2, 16, 272, 7936]
    assert zag_via_tangent(6) == zag_numbers(6) == zag_via_bernoulli(6)


def test_zag_chain_matches_graph_sign():
    # |c| for the 2-edge chain appears in the reference table as 2
    assert abs(chain_sign(1)) == 2
    assert chain_sign(1) == sign_sum_directed(3, chain_graph_edges(1))
    assert chain_sign(2) == sign_sum_directed(5, chain_graph_edges(2))


def test_cycle_sign_relation():
    for k in (1, 2, 3):
        assert cycle_sign(k) == -2 * k * chain_sign(k - 1)
        assert cycle_sign(k) == sign_sum_directed(2 * k, cycle_graph_edges(k))


def test_tangent_ode_identity():
    # y' = 1 + y^2 for y = sum zag_k x^(2k+1)/(2k+1)!, through x^9
    import math
    zag = zag_numbers(5)
    y = {2 * k + 1: Fraction(zag[k], math.factorial(2 * k + 1))
         for k in range(6)}
    deriv = {m - 1: c * m for m, c in y.items()}
    square = {}
    for m1, c1 in y.items():
        for m2, c2 in y.items():
            if m1 + m2 <= 9:
                square[m1 + m2] = square.get(m1 + m2, Fraction(0)) + c1 * c2
    for m in range(10):
        rhs = (Fraction(1) if m == 0 else Fraction(0)) + square.get(m, Fraction(0))
        assert deriv.get(m, Fraction(0)) == rhs, m


def test_closed_forms_match_contractions():
    j = moyal_tensor(1)
    a = UNIT.symbol()
    for k in (1, 2, 3):
        chain, cycle = lambda_closed_forms(UNIT, k)
        assert chain == contract(chain_graph_edges(k), [a] * (2 * k + 1), j)
        assert cycle == contract(cycle_graph_edges(k), [a] * (2 * k), j)
    anis = QuadraticForm.from_matrix([[3, 1], [1, 2]])
    b = anis.symbol()
    for k in (1, 2):
        chain, cycle = lambda_closed_forms(anis, k)
        assert chain == contract(chain_graph_edges(k), [b] * (2 * k + 1), j)
        assert cycle == contract(cycle_graph_edges(k), [b] * (2 * k), j)


def test_degenerate_form_kills_cycles():
    degenerate = QuadraticForm.from_matrix([[1, 0], [0, 0]])
    assert degenerate.omega_squared() == 0
    for k in (1, 2):
        chain, cycle = lambda_closed_forms(degenerate, k)
        assert cycle.is_zero
        assert chain.is_zero


def test_high_degree_vertices_vanish_for_quadratic():
    j = moyal_tensor(1)
    a = UNIT.symbol()
    for e_count in (2, 4):
        for g in enumerate_reduced(e_count, connected_only=True):
            degrees = g.vertex_degrees()
            if max(degrees) < 3:
                continue
            lam = contract(g.directed_edges(), [a] * g.vertices, j)
            assert lam.is_zero, g


def test_closed_symbol_matches_graph_expansion():
    cfg = StarConfig.moyal(1, 4)
    for q in ([[1, 0], [0, 1]], [[2, 0], [0, Fraction(1, 2)]],
              [[1, Fraction(1, 2)], [Fraction(1, 2), 1]]):
        form = QuadraticForm.from_matrix(q)
        expected = symbol_of_function_unlabeled(form.symbol(), cfg)
        assert quadratic_closed_symbol(form, 4) == expected


def test_closed_symbol_restricted_to_families_matches_connected():
    # the chain/cycle double sum is the whole connected exponent for
    # quadratic symbols, so the connected form agrees too
    cfg = StarConfig.moyal(1, 4)
    assert quadratic_closed_symbol(UNIT, 4) == \
        symbol_of_function_connected(UNIT.symbol(), cfg)


def test_time_evolution_cells_match_graphs():
    cfg = StarConfig.moyal(1, 4)
    for q in ([[1, 0], [0, 1]], [[2, 0], [0, 2]]):
        form = QuadraticForm.from_matrix(q)
        closed = time_evolution_cells(form, 6)
        mapped = jet_series_as_time_cells(
            symbol_of_function_unlabeled(form.symbol(), cfg))
        keys = {k for k in set(closed) | set(mapped)
                if k[0] <= 4 and 0 <= k[0] + k[1] <= 4}
        assert keys, "no comparable cells"
        for key in keys:
            lhs = closed.get(key, PhasePolynomial.zero(1))
            rhs = mapped.get(key, PhasePolynomial.zero(1))
            assert lhs == rhs, key


def test_zero_form_is_constant():
    zero = QuadraticForm.from_matrix([[0, 0], [0, 0]])
    js = quadratic_closed_symbol(zero, 4)
    assert set(js.terms) == {(0, 0)}


def test_matrix_parsing_and_validation():
    assert parse_q_matrix("1,0;0,1") == [[Fraction(1), Fraction(0)],
                                         [Fraction(0), Fraction(1)]]
    with pytest.raises(ValueError):
        QuadraticForm.from_matrix([[1, 1], [0, 1]])
    with pytest.raises(DimensionMismatch):
        QuadraticForm.from_matrix([[1, 0, 0], [0, 1, 0], [0, 0, 1]])


def test_signed_chain_sequence_alternates():
    seq = chain_sign_sums(6)
    assert all(c > 0 if k % 2 == 0 else c < 0 for k, c in enumerate(seq))
