"""Cross-oracle verification suites.

Each suite checks one acceptance criterion end to end and reports a
pass/fail record; the CLI prints them as a matrix and the test suite asserts
them one by one.  Everything symbolic is compared exactly; the numeric
eigenvalue checks carry their stated tolerances.
"""

from __future__ import annotations

import math
import random
import time
from dataclasses import dataclass
from fractions import Fraction

from .bohr import (Hamiltonian1D, action_correction, action_series,
                   bs_eigenvalues, schrodinger_oracle,
                   split_form_coefficients)
from .contraction import attach_arrows_expand, contract
from .funcalc import (FunctionJet, JetSeries, pointwise_symbol,
                      resolvent_identity_check, star_power_values,
                      substitute_polynomial,
                      symbol_of_function_connected, symbol_of_function_labeled,
                      symbol_of_function_unlabeled)
from .graphs import UnlabeledGraph, c_coefficient, enumerate_reduced
from .poly import PhasePolynomial
from .quadratic import (QuadraticForm, jet_series_as_time_cells,
                        quadratic_closed_symbol, time_evolution_cells,
                        zag_numbers, zag_via_bernoulli, zag_via_tangent)
from .scalars import half_i_power
from .star import StarConfig, star_fold, star_n_fold, star_power
from .tensors import bracket_k, moyal_tensor


@dataclass
class VerifyResult:
    name: str
    passed: bool
    seconds: float
    detail: str = ""


def random_polynomial(rng: random.Random, n: int, degree: int = 3,
                      terms: int = 4) -> PhasePolynomial:
    """Sparse random symbol with small integer coefficients, never zero."""
    width = 2 * n
    while True:
        out = {}
        for _ in range(terms):
            exp = [0] * width
            total = rng.randint(0, degree)
            for _ in range(total):
                exp[rng.randrange(width)] += 1
            coeff = rng.choice([-3, -2, -1, 1, 2, 3])
            key = tuple(exp)
            out[key] = out.get(key, 0) + coeff
        poly = PhasePolynomial(n, {k: Fraction(v) for k, v in out.items() if v})
        if not poly.is_zero:
            return poly


# ---------------------------------------------------------------------------
# criterion 1: the connected-graph table with 2 and 4 edges
# ---------------------------------------------------------------------------

# (vertices, drawn directed edges, S, c) for every connected reduced graph
# with 2 or 4 edges, in fixed reference orientations
GRAPH_TABLE = (
    (2, ((1, 2), (1, 2)), 4, 2),
    (3, ((1, 2), (2, 3)), 2, -2),
    (2, ((1, 2), (1, 2), (1, 2), (1, 2)), 48, 2),
    (3, ((1, 2), (1, 2), (1, 2), (2, 3)), 6, -2),
    (3, ((1, 2), (1, 2), (2, 3), (2, 3)), 8, 6),
    (3, ((1, 2), (1, 2), (1, 3), (2, 3)), 4, 2),
    (4, ((1, 2), (2, 4), (3, 1), (4, 3)), 8, 8),
    (4, ((1, 2), (2, 3), (2, 4), (4, 1)), 2, 0),
    (4, ((1, 2), (1, 2), (2, 3), (2, 4)), 4, 8),
    (4, ((1, 2), (1, 2), (2, 3), (3, 4)), 2, -8),
    (4, ((1, 2), (2, 3), (2, 3), (3, 4)), 4, 0),
    (5, ((1, 2), (2, 3), (3, 4), (4, 5)), 2, 16),
    (5, ((1, 2), (2, 3), (3, 4), (3, 5)), 2, -8),
    (5, ((1, 2), (2, 3), (2, 4), (2, 5)), 24, -24),
)


def check_graph_table(seed: int = 7) -> VerifyResult:
    t0 = time.time()
    rng = random.Random(seed)
    tensor = moyal_tensor(1)
    problems = []
    seen = set()
    for nv, edges, s_expected, c_expected in GRAPH_TABLE:
        graph = UnlabeledGraph.from_edge_list(nv, edges)
        seen.add(graph.key())
        if graph.symmetry_order() != s_expected:
            problems.append(f"S mismatch for {edges}: "
                            f"{graph.symmetry_order()} != {s_expected}")
        c_mine = c_coefficient(graph)
        if abs(c_mine) != abs(c_expected):
            problems.append(f"|c| mismatch for {edges}: {c_mine} vs {c_expected}")
        # the sign only pairs with the contraction: c * lambda is invariant
        for _ in range(2):
            a = random_polynomial(rng, 1, degree=3, terms=4)
            lam_mine = contract(graph.directed_edges(), [a] * nv, tensor)
            lam_drawn = contract(edges, [a] * nv, tensor)
            if lam_mine * c_mine != lam_drawn * c_expected:
                problems.append(f"c*lambda mismatch for {edges}")
                break
    expected_classes = {g.key() for g in enumerate_reduced(2, connected_only=True)} \
        | {g.key() for g in enumerate_reduced(4, connected_only=True)}
    if seen != expected_classes:
        problems.append("table rows do not cover the enumerated classes")
    counts = (len(enumerate_reduced(2)), len(enumerate_reduced(4, connected_only=True)),
              len(enumerate_reduced(4)))
    if counts != (2, 12, 15):
        problems.append(f"enumeration counts {counts} != (2, 12, 15)")
    return VerifyResult("graph-table", not problems, time.time() - t0,
                        "; ".join(problems) or f"{len(GRAPH_TABLE)} rows, "
                        f"counts {counts}")


# ---------------------------------------------------------------------------
# criterion 2: Zag sequence by three routes
# ---------------------------------------------------------------------------

def check_zag(seed: int = 0) -> VerifyResult:
    t0 = time.time()
    expected = [1, 2, 16, 272, 7936]
    rec = zag_numbers(4)
    tan = zag_via_tangent(4)
    bern = zag_via_bernoulli(4)
    ok = rec == expected and tan == expected and bern == expected
    return VerifyResult("zag-three-routes", ok, time.time() - t0,
                        f"recurrence={rec}, tangent={tan}, bernoulli={bern}")


# ---------------------------------------------------------------------------
# criterion 3: power oracle
# ---------------------------------------------------------------------------

def check_power_oracle(seed: int = 11, batches: int = 20) -> VerifyResult:
    t0 = time.time()
    rng = random.Random(seed)
    failures = 0
    for i in range(batches):
        n = 1 if i % 2 == 0 else 2
        a = random_polynomial(rng, n, degree=3, terms=3 + (i % 2))
        cfg = StarConfig.moyal(n, 4)
        js = symbol_of_function_unlabeled(a, cfg)
        for power in (2, 3, 4):
            direct = substitute_polynomial(js, FunctionJet.power(power), a)
            fold = star_power(a, power, cfg)
            if direct != fold:
                failures += 1
    return VerifyResult("power-oracle", failures == 0, time.time() - t0,
                        f"{batches} symbols, powers 2..4, {failures} failures")


# ---------------------------------------------------------------------------
# criterion 4: three-form equivalence
# ---------------------------------------------------------------------------

def check_three_forms(seed: int = 13, batches: int = 20) -> VerifyResult:
    t0 = time.time()
    rng = random.Random(seed)
    failures = []
    for i in range(batches):
        n = 1 if i % 2 == 0 else 2
        a = random_polynomial(rng, n, degree=3, terms=3)
        cfg = StarConfig.moyal(n, 4)
        unl = symbol_of_function_unlabeled(a, cfg)
        lab = symbol_of_function_labeled(a, cfg)
        con = symbol_of_function_connected(a, cfg)
        if not (unl == lab == con):
            failures.append(i)
    return VerifyResult("three-forms", not failures, time.time() - t0,
                        f"{batches} symbols; failures at {failures}" if failures
                        else f"{batches} symbols, all three forms identical")


# ---------------------------------------------------------------------------
# criterion 5: the order-4 expansion table
# ---------------------------------------------------------------------------

# (hbar power, derivative order, scalar weight, drawn directed edges);
# disconnected entries list every component's edges together
ORDER4_TABLE = (
    (2, 2, Fraction(1, 2), ((1, 2), (1, 2))),
    (2, 3, Fraction(1), ((1, 2), (3, 2))),
    (4, 2, Fraction(1, 24), ((1, 2),) * 4),
    (4, 3, Fraction(1, 3), ((1, 2), (1, 2), (1, 2), (3, 2))),
    (4, 3, Fraction(1, 2), ((1, 2), (1, 2), (1, 3), (2, 3))),
    (4, 3, Fraction(3, 4), ((1, 2), (1, 2), (2, 3), (2, 3))),
    (4, 4, Fraction(3, 4), ((1, 2), (1, 2), (3, 4), (3, 4))),
    (4, 4, Fraction(1), ((1, 2), (2, 4), (4, 3), (3, 1))),
    (4, 4, Fraction(4), ((1, 2), (1, 2), (2, 3), (4, 3))),
    (4, 4, Fraction(2), ((1, 2), (1, 2), (2, 3), (2, 4))),
    (4, 5, Fraction(8), ((1, 2), (2, 3), (3, 5), (5, 4))),
    (4, 5, Fraction(1), ((1, 2), (3, 2), (4, 2), (5, 2))),
    (4, 5, Fraction(5), ((1, 2), (1, 2), (3, 4), (5, 4))),
    (4, 5, Fraction(4), ((2, 1), (2, 3), (3, 5), (3, 4))),
    (4, 6, Fraction(10), ((1, 2), (3, 2), (4, 5), (6, 5))),
)


def order4_reference_jet(a: PhasePolynomial) -> JetSeries:
    """The reference order-4 expansion assembled term by term."""
    tensor = moyal_tensor(a.n)
    terms = {(0, 0): PhasePolynomial.one(a.n)}
    for e, v, weight, edges in ORDER4_TABLE:
        nv = max(max(s, t) for s, t in edges)
        lam = contract(edges, [a] * nv, tensor)
        sign = Fraction(-1, 4) if e == 2 else Fraction(1, 16)
        coeff = lam * (sign * weight * Fraction(1, math.factorial(v)))
        if coeff.is_zero:
            continue
        key = (e, v)
        terms[key] = terms.get(key, PhasePolynomial.zero(a.n)) + coeff
    return JetSeries(a.n, 4, terms)


def check_order4_table(seed: int = 17, batches: int = 5) -> VerifyResult:
    t0 = time.time()
    rng = random.Random(seed)
    failures = []
    cfg = StarConfig.moyal(1, 4)
    for i in range(batches):
        a = random_polynomial(rng, 1, degree=3, terms=4)
        generated = symbol_of_function_unlabeled(a, cfg)
        reference = order4_reference_jet(a)
        if generated != reference:
            failures.append(i)
    return VerifyResult("order4-table", not failures, time.time() - t0,
                        f"{batches} random symbols vs the 15-term table")


# ---------------------------------------------------------------------------
# criterion 6: iterated star product
# ---------------------------------------------------------------------------

def check_iterated_star(seed: int = 19) -> VerifyResult:
    t0 = time.time()
    rng = random.Random(seed)
    failures = []
    for n_args in (3, 4, 5):
        for rep in (0, 1):
            n = 1 if (rep + n_args) % 2 else 2
            if n_args == 5:
                n = 1  # keep the largest case cheap
            cfg = StarConfig.moyal(n, 4)
            symbols = [random_polynomial(rng, n, degree=3, terms=3)
                       for _ in range(n_args)]
            if star_n_fold(symbols, cfg) != star_fold(symbols, cfg):
                failures.append((n_args, rep))
    # the collected hbar^2 coefficient for three equal factors:
    # (3/2) {A,A}_2 A + lambda(A -> A <- A), scaled by (i/2)^2
    a = random_polynomial(rng, 1, degree=3, terms=4)
    cfg = StarConfig.moyal(1, 4)
    tensor = cfg.tensor
    triple = star_n_fold([a, a, a], cfg)
    expected = (bracket_k(a, a, 2, tensor) * a * Fraction(3, 2)
                + contract([(1, 2), (3, 2)], [a] * 3, tensor)) * half_i_power(2)
    if triple.coefficient(2) != expected:
        failures.append("hbar2-coefficients")
    return VerifyResult("iterated-star", not failures, time.time() - t0,
                        f"n=3,4,5 vs folded product; failures: {failures}"
                        if failures else "n=3,4,5 and the collected "
                        "hbar^2 weights 3/2 and (4-2)/2")


# ---------------------------------------------------------------------------
# criterion 7: resolvent identity
# ---------------------------------------------------------------------------

def check_resolvent(seed: int = 0) -> VerifyResult:
    t0 = time.time()
    x = PhasePolynomial.x(1)
    p = PhasePolynomial.p(1)
    details = []
    ok = True
    for a in (x ** 2 + p ** 2, x ** 3 + p ** 2):
        record = resolvent_identity_check(a, 4)
        ok = ok and record.passed
        details.append(f"{a}: {'ok' if record.passed else record.first_failure}")
    return VerifyResult("resolvent-identity", ok, time.time() - t0,
                        "; ".join(details))


# ---------------------------------------------------------------------------
# criterion 8: quadratic closed form
# ---------------------------------------------------------------------------

def check_quadratic_closed_form(seed: int = 0) -> VerifyResult:
    t0 = time.time()
    problems = []
    form = QuadraticForm.from_matrix([[1, 0], [0, 1]])
    a = form.symbol()
    cfg = StarConfig.moyal(1, 4)
    graph_jet = symbol_of_function_unlabeled(a, cfg)
    if quadratic_closed_symbol(form, 4) != graph_jet:
        problems.append("secant/tangent series disagrees with the graph sum")
    closed = time_evolution_cells(form, 4)
    mapped = jet_series_as_time_cells(graph_jet)
    keys = {k for k in set(closed) | set(mapped)
            if k[0] <= 4 and 0 <= k[0] + k[1] <= 4}
    for key in sorted(keys):
        lhs = closed.get(key)
        rhs = mapped.get(key)
        if (lhs is None) != (rhs is None) or (lhs is not None and lhs != rhs):
            problems.append(f"time-evolution cell {key} mismatch")
    # a second, anisotropic form
    form2 = QuadraticForm.from_matrix([[2, 0], [0, Fraction(1, 2)]])
    if quadratic_closed_symbol(form2, 4) != \
            symbol_of_function_unlabeled(form2.symbol(), cfg):
        problems.append("anisotropic closed form disagrees")
    return VerifyResult("quadratic-closed-form", not problems, time.time() - t0,
                        "; ".join(problems) or
                        f"secant/tangent and time-evolution cells match "
                        f"({len(keys)} cells)")


# ---------------------------------------------------------------------------
# criterion 9: kinetic-plus-potential coefficients
# ---------------------------------------------------------------------------

def check_split_coefficients(seed: int = 0) -> VerifyResult:
    t0 = time.time()
    cells = split_form_coefficients()
    expected2 = {(1, "u*V2"): Fraction(-1, 24)}
    expected4 = {(3, "u^2*V2^2"): Fraction(7, 5) * Fraction(1, 1152),
                 (2, "u^2*V4"): Fraction(-1, 1152)}
    ok = cells[2] == expected2 and cells[4] == expected4 \
        and Fraction(1, 1152) == Fraction(1, 2 ** 7 * 3 ** 2)
    return VerifyResult("split-form-coefficients", ok, time.time() - t0,
                        f"order2={ {k: str(v) for k, v in cells[2].items()} }, "
                        f"order4={ {k: str(v) for k, v in cells[4].items()} }")


# ---------------------------------------------------------------------------
# criterion 10: eigenvalue numerics
# ---------------------------------------------------------------------------

def check_bs_numerics(seed: int = 0) -> VerifyResult:
    t0 = time.time()
    problems = []
    # harmonic exactness at every order
    harm = Hamiltonian1D.from_potential(1, [0, 0, Fraction(1, 2)])
    for hbar in (1.0, 0.25):
        for order in (0, 2, 4):
            levels = bs_eigenvalues(harm, range(1, 5), order, hbar)
            for level in levels:
                target = (level.n - 0.5) * hbar
                if abs(level.energy - target) > 1e-9 * max(target, 1.0):
                    problems.append(
                        f"harmonic n={level.n} order={order} hbar={hbar}: "
                        f"{level.energy} vs {target}")
    # quartic against the Schrodinger matrix
    quart = Hamiltonian1D.from_potential(1, [0, 0, 0, 0, 1])
    oracle = schrodinger_oracle([0, 0, 0, 0, 1], 1, 1.0, 6)
    levels = bs_eigenvalues(quart, range(3, 7), 4, 1.0)
    for level, reference in zip(levels, oracle[2:6]):
        rel = abs(level.energy - reference) / reference
        if rel > 5e-4:
            problems.append(f"quartic n={level.n}: rel err {rel:.2e}")
    # the full and reduced order-4 assemblies agree after quadrature
    red = action_series(quart, js=(2, 4), version="reduced")
    full = action_series(quart, js=(2, 4), version="full")
    for energy in (4.0, 6.0, 9.0, 13.0, 18.0):
        s4r = action_correction(quart, red, 4, energy)
        s4f = action_correction(quart, full, 4, energy)
        rel = abs(s4r - s4f) / max(abs(s4r), abs(s4f))
        if rel > 1e-6:
            problems.append(f"15-vs-5 at E={energy}: rel {rel:.2e}")
    return VerifyResult("bs-numerics", not problems, time.time() - t0,
                        "; ".join(problems) or
                        "harmonic exact, quartic <= 5e-4 for n=3..6, "
                        "15-vs-5 corrections <= 1e-6")


# ---------------------------------------------------------------------------
# criterion 11: lemma suite
# ---------------------------------------------------------------------------

def check_lemmas(seed: int = 23) -> VerifyResult:
    t0 = time.time()
    rng = random.Random(seed)
    problems = []
    tensor = moyal_tensor(1)
    # arrow-attachment expansion on random graphs
    shapes = [((1, 2),), ((1, 2), (1, 2)), ((1, 2), (2, 3)),
              ((1, 2), (2, 3), (3, 1)), ((1, 2), (1, 2), (2, 3))]
    for edges in shapes:
        nv = max(max(e) for e in edges)
        for k in (0, 1, 2):
            symbols = [random_polynomial(rng, 1, degree=3, terms=3)
                       for _ in range(nv)]
            extra = random_polynomial(rng, 1, degree=3, terms=3)
            record = attach_arrows_expand(edges, symbols, k, extra, tensor)
            if not record.passed:
                problems.append(f"arrow expansion {edges} k={k}")
    # pointwise/global agreement at random rational points
    a = random_polynomial(rng, 1, degree=3, terms=4)
    cfg = StarConfig.moyal(1, 4)
    f = FunctionJet.polynomial([0, 2, Fraction(1, 3), 1])
    js = symbol_of_function_unlabeled(a, cfg)
    global_b = substitute_polynomial(js, f, a)
    for _ in range(10):
        z0 = (Fraction(rng.randint(-6, 6), rng.randint(1, 5)),
              Fraction(rng.randint(-6, 6), rng.randint(1, 5)))
        if pointwise_symbol(a, f, z0, cfg) != global_b.evaluate(z0):
            problems.append(f"pointwise mismatch at {z0}")
    # vanishing order of (A - a0)^(*m) at z0
    for m in (1, 2, 3, 4):
        z0 = (Fraction(1, 2), Fraction(-2, 3))
        values = star_power_values(a, m, z0, cfg)
        need = (m + 1) // 2
        if any(values[k] for k in range(min(need, len(values)))):
            problems.append(f"vanishing order failed for m={m}")
    return VerifyResult("lemma-suite", not problems, time.time() - t0,
                        "; ".join(problems) or
                        "arrow expansion, pointwise agreement, vanishing order")


# ---------------------------------------------------------------------------
# registry
# ---------------------------------------------------------------------------

FAST_SUITES = {
    "graph-table": check_graph_table,
    "zag-three-routes": check_zag,
    "order4-table": check_order4_table,
    "iterated-star": check_iterated_star,
    "resolvent-identity": check_resolvent,
    "quadratic-closed-form": check_quadratic_closed_form,
    "split-form-coefficients": check_split_coefficients,
    "lemma-suite": check_lemmas,
}

SLOW_SUITES = {
    "power-oracle": check_power_oracle,
    "three-forms": check_three_forms,
    "bs-numerics": check_bs_numerics,
}

ALL_SUITES = {**FAST_SUITES, **SLOW_SUITES}


def run_suites(names=None, *, include_slow=False, seed: int = 0):
    chosen = dict(FAST_SUITES)
    if include_slow:
        chosen = dict(ALL_SUITES)
    if names:
        missing = [n for n in names if n not in ALL_SUITES]
        if missing:
            raise ValueError(f"unknown suites: {missing}")
        chosen = {n: ALL_SUITES[n] for n in names}
    results = []
    for name in sorted(chosen):
        func = chosen[name]
        try:
            results.append(func(seed=seed) if seed else func())
        except Exception as exc:  # a crash is a failure, not an abort
            results.append(VerifyResult(name, False, 0.0, f"error: {exc}"))
    return results
