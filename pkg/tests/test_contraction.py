import math
from fractions import Fraction

from weylcalc.contraction import (attach_arrows_expand, contract,
                                  reverse_edge_sign_check)
from weylcalc.graphs import c_coefficient, enumerate_reduced, sign_sum_directed
from weylcalc.poly import PhasePolynomial
from weylcalc.tensors import moyal_tensor

J1 = moyal_tensor(1)


def test_three_vertex_chain_with_double_edge():
    # C -> D => A with third derivatives landing on D
    x = PhasePolynomial.x(1)
    p = PhasePolynomial.p(1)
    edges = [(1, 2), (2, 3), (2, 3)]
    assert contract(edges, [x, x * p, p ** 2], J1).is_zero  # D quadratic
    assert contract(edges, [x ** 2, x ** 2 * p, p ** 2], J1) == 8 * x


def test_single_edge_values():
    x = PhasePolynomial.x(1)
    p = PhasePolynomial.p(1)
    assert contract([(1, 2)], [x, p], J1) == PhasePolynomial.one(1)
    assert contract([(2, 1)], [x, p], J1) == -PhasePolynomial.one(1)


def test_single_edge_same_symbol_vanishes(random_symbol):
    a = random_symbol()
    assert contract([(1, 2)], [a, a], J1).is_zero


def test_reverse_edge_negates(random_symbol):
    a = random_symbol()
    record = reverse_edge_sign_check([(1, 2), (2, 3)], [a, a, a], J1)
    assert record.passed
    # an even number of flips restores the value
    edges = [(1, 2), (2, 3)]
    flipped = [(2, 1), (3, 2)]
    assert contract(edges, [a] * 3, J1) == contract(flipped, [a] * 3, J1)


def test_attach_arrows_worked_example(random_symbol):
    # one edge, two arrows into a new vertex: shapes with counts 1, 1, 2
    c = random_symbol()
    d = random_symbol()
    e = random_symbol()
    record = attach_arrows_expand([(1, 2)], [c, d], 2, e, J1)
    assert record.passed
    assert len(record.graphs) == 4
    from collections import Counter
    shapes = Counter(tuple(sorted(g)) for g in record.graphs)
    assert sorted(shapes.values()) == [1, 1, 2]


def test_attach_arrows_zero_arrows(random_symbol):
    a, b, d = (random_symbol() for _ in range(3))
    record = attach_arrows_expand([(1, 2), (1, 2)], [a, b], 0, d, J1)
    assert record.passed
    assert record.lhs == contract([(1, 2), (1, 2)], [a, b], J1) * d


def test_multilinearity(rng, random_symbol):
    a, b, c = (random_symbol() for _ in range(3))
    edges = [(1, 2), (2, 3), (1, 3)]
    lhs = contract(edges, [a * 2 + b * Fraction(1, 3), c, c], J1)
    rhs = contract(edges, [a, c, c], J1) * 2 \
        + contract(edges, [b, c, c], J1) * Fraction(1, 3)
    assert lhs == rhs


def test_degree_bound(random_symbol):
    a = random_symbol(degree=2)
    # a vertex carrying three derivatives of a quadratic symbol kills the term
    assert contract([(1, 2)] * 3, [a, a], J1).is_zero


def test_product_c_lambda_relabeling_invariant(rng, random_symbol):
    import itertools
    a = random_symbol()
    for e_count in (2, 3, 4):
        for g in enumerate_reduced(e_count, connected_only=True,
                                   even_components_only=False)[:6]:
            base = contract(g.directed_edges(), [a] * g.vertices, J1) \
                * c_coefficient(g)
            perms = list(itertools.permutations(range(1, g.vertices + 1)))
            rng.shuffle(perms)
            for perm in perms[:4]:
                sigma = {i + 1: perm[i] for i in range(g.vertices)}
                edges = [tuple(sorted((sigma[u], sigma[v])))
                         for u, v in g.directed_edges()]
                relabeled_c = sign_sum_directed(g.vertices, edges)
                relabeled_lam = contract(edges, [a] * g.vertices, J1)
                assert relabeled_lam * relabeled_c == base


def _orbit_sum(edges0, a, nv):
    """Sum of the contraction over all distinct labeled graphs in the orbit.

    Distinct labeled graphs sharing a pair multiset contract identically, so
    the sum runs over the multisets produced by vertex relabelings, each
    weighted by its E!/prod(mult!) edge labelings.
    """
    import itertools
    multisets = {}
    for perm in itertools.permutations(range(1, nv + 1)):
        sigma = {i + 1: perm[i] for i in range(nv)}
        edges = tuple(sorted(tuple(sorted((sigma[u], sigma[v])))
                             for u, v in edges0))
        multisets[edges] = None
    e_count = len(edges0)
    total = None
    for edges in multisets:
        denom = 1
        for pair in set(edges):
            denom *= math.factorial(edges.count(pair))
        lam = contract(edges, [a] * nv, J1) \
            * Fraction(math.factorial(e_count), denom)
        total = lam if total is None else total + lam
    return total


def test_vertex_relabeling_sum_is_c_lambda(rng, random_symbol):
    """Summing the contraction over all V! vertex relabelings gives exactly
    c times the canonical contraction; the edge-label count then yields the
    (E!/S) c lambda orbit identity."""
    import itertools
    a = random_symbol()
    for e_count in (1, 2, 3):
        for g in enumerate_reduced(e_count, connected_only=True,
                                   even_components_only=False):
            nv = g.vertices
            total = None
            for perm in itertools.permutations(range(1, nv + 1)):
                sigma = {i + 1: perm[i] for i in range(nv)}
                edges = [tuple(sorted((sigma[u], sigma[v])))
                         for u, v in g.directed_edges()]
                lam = contract(edges, [a] * nv, J1)
                total = lam if total is None else total + lam
            expected = contract(g.directed_edges(), [a] * nv, J1) \
                * c_coefficient(g)
            assert total == expected, g


def test_orbit_sum_identity_exhaustive(random_symbol):
    """sum over the orbit equals (E!/S) c lambda, exhaustively to 3 edges."""
    a = random_symbol()
    for e_count in (1, 2, 3):
        for g in enumerate_reduced(e_count, connected_only=True,
                                   even_components_only=False):
            nv = g.vertices
            total = _orbit_sum(g.directed_edges(), a, nv)
            expected = contract(g.directed_edges(), [a] * nv, J1) \
                * c_coefficient(g) \
                * Fraction(math.factorial(e_count), g.symmetry_order())
            assert total == expected, g


def test_orbit_sum_identity_spot_four_edges(random_symbol):
    a = random_symbol()
    from weylcalc.graphs import UnlabeledGraph
    for edges0 in ([(1, 2), (2, 4), (4, 3), (3, 1)], [(1, 2)] * 4):
        nv = max(max(e) for e in edges0)
        g = UnlabeledGraph.from_edge_list(nv, [tuple(sorted(e)) for e in edges0])
        total = _orbit_sum(g.directed_edges(), a, nv)
        expected = contract(g.directed_edges(), [a] * nv, J1) \
            * c_coefficient(g) \
            * Fraction(math.factorial(g.edge_count), g.symmetry_order())
        assert total == expected
