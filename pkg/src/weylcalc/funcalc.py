"""Symbol of a function of an operator, in three equivalent graph-indexed
forms, plus the pointwise expansion, the several-variable extension and the
resolvent identity check.

The symbol is carried as a JetSeries: a map (hbar power e, derivative order
v) -> Q_{e,v} with B = sum_e hbar^e sum_v Q_{e,v}(z) f^(v)(A(z)).  Keeping f
formal lets the same graph computation serve polynomial, exponential and
resolvent functions; substitution is a separate step.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from .contraction import contract
from .errors import CapacityError, DimensionMismatch
from .graphs import enumerate_reduced, reduced_labeled_multisets
from .poly import PhasePolynomial
from .resolvent import ResolventSymbol
from .scalars import GaussianRational, as_scalar, half_i_power
from .series import HbarSeries
from .star import StarConfig, star_product
from .tensors import moyal_tensor

MAX_LABELED_ORDER = 6


# ---------------------------------------------------------------------------
# function jets
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FunctionJet:
    """Derivative sequence of the scalar function f.

    kinds: "abstract" keeps a formal slot; "polynomial" differentiates its
    ascending coefficient list; "exponential" is exp(rate*y) whose k-th jet
    is rate^k times the shared exponential factor; "resolvent" is
    1/(a - y) with jets k!/(a - y)^(k+1).
    """

    kind: str
    coeffs: tuple = ()
    rate: Fraction = Fraction(0)

    @classmethod
    def abstract(cls) -> "FunctionJet":
        return cls("abstract")

    @classmethod
    def polynomial(cls, coeffs) -> "FunctionJet":
        return cls("polynomial", tuple(Fraction(c) for c in coeffs))

    @classmethod
    def exponential(cls, rate) -> "FunctionJet":
        return cls("exponential", rate=Fraction(rate))

    @classmethod
    def resolvent(cls) -> "FunctionJet":
        return cls("resolvent")

    @classmethod
    def power(cls, n: int) -> "FunctionJet":
        return cls.polynomial([0] * n + [1])

    def derivative(self) -> "FunctionJet":
        if self.kind == "polynomial":
            d = tuple(c * k for k, c in enumerate(self.coeffs) if k)
            return FunctionJet.polynomial(d)
        if self.kind == "exponential":
            # d/dy exp(rate*y) = rate*exp(rate*y); rate folded into coeffs
            return self
        raise ValueError(f"no symbolic derivative for kind {self.kind!r}")

    def jet_coeffs(self, k: int) -> tuple:
        """Coefficient list of f^(k) for the polynomial kind."""
        if self.kind != "polynomial":
            raise ValueError("jet_coeffs requires a polynomial jet")
        f = self
        for _ in range(k):
            f = f.derivative()
        return f.coeffs

    def jet_value(self, k: int, y: Fraction) -> Fraction:
        """f^(k)(y) for kinds with exactly evaluable jets."""
        y = Fraction(y)
        if self.kind == "polynomial":
            total = Fraction(0)
            for j, c in enumerate(self.jet_coeffs(k)):
                total += c * y ** j
            return total
        raise ValueError(f"cannot evaluate jets of kind {self.kind!r}")

    @property
    def degree(self) -> int | None:
        if self.kind != "polynomial":
            return None
        deg = -1
        for k, c in enumerate(self.coeffs):
            if c:
                deg = k
        return deg


# ---------------------------------------------------------------------------
# jet series
# ---------------------------------------------------------------------------

class JetSeries:
    """B with f formal: terms[(e, v)] = Q_{e,v}, zero cells dropped."""

    __slots__ = ("n", "order", "terms")

    def __init__(self, n: int, order: int, terms=None):
        clean = {}
        for key, poly in (terms or {}).items():
            e, v = int(key[0]), int(key[1])
            if poly.n != n:
                raise DimensionMismatch("jet coefficient dimension mismatch")
            if e <= order and not poly.is_zero:
                clean[(e, v)] = poly
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("JetSeries is immutable")

    def cell(self, e: int, v: int) -> PhasePolynomial:
        return self.terms.get((e, v), PhasePolynomial.zero(self.n))

    def __eq__(self, other):
        if not isinstance(other, JetSeries):
            return NotImplemented
        return (self.n, self.order, self.terms) == (other.n, other.order, other.terms)

    def __hash__(self):
        return hash((self.n, self.order, frozenset(self.terms)))

    def __repr__(self):
        cells = ", ".join(f"({e},{v})" for e, v in sorted(self.terms))
        return f"<JetSeries order={self.order} cells=[{cells}]>"

    def to_json_dict(self) -> dict:
        items = []
        for (e, v) in sorted(self.terms):
            items.append({"hbar": e, "deriv": v, "poly": self.terms[(e, v)].to_json_dict()})
        return {"N": self.n, "truncation_order": self.order, "terms": items}

    @classmethod
    def from_json_dict(cls, data: dict) -> "JetSeries":
        terms = {}
        for item in data["terms"]:
            key = (int(item["hbar"]), int(item["deriv"]))
            poly = PhasePolynomial.from_json_dict(item["poly"])
            terms[key] = terms.get(key, PhasePolynomial.zero(poly.n)) + poly
        return cls(int(data["N"]), int(data["truncation_order"]), terms)


class _JetAccumulator:
    def __init__(self, n, order):
        self.n = n
        self.order = order
        self.terms: dict = {}

    def add(self, e: int, v: int, poly: PhasePolynomial):
        if e > self.order or poly.is_zero:
            return
        key = (e, v)
        cur = self.terms.get(key)
        self.terms[key] = poly if cur is None else cur + poly

    def done(self) -> JetSeries:
        return JetSeries(self.n, self.order, self.terms)


# ---------------------------------------------------------------------------
# shared input handling
# ---------------------------------------------------------------------------

def _split_input(a, order):
    """Return (series A, base A0, graded flag, tail powers [R^0..], n).

    The tail R = A - A0 collects the hbar-dependent part of an input series;
    the expansion is re-expanded in jets of f at A0.
    """
    if isinstance(a, PhasePolynomial):
        series = HbarSeries.from_polynomial(a, order)
    elif isinstance(a, HbarSeries):
        series = a.truncated(order) if a.order >= order else HbarSeries(
            a.n, order, list(a.coeffs))
    else:
        raise TypeError("symbol must be a PhasePolynomial or HbarSeries")
    a0 = series.coefficient(0)
    tail = series - a0
    graded = not tail.is_zero
    powers = [HbarSeries.one(series.n, order)]
    if graded:
        for _ in range(order):
            powers.append(powers[-1] * tail)
    return series, a0, graded, powers, series.n


def _lam_items(edges, nv, series, a0, graded, tensor, cache, n):
    """Contraction of one graph as [(hbar grade, polynomial)] pairs."""
    if nv == 0:
        return [(0, PhasePolynomial.one(n))]
    if graded:
        lam = contract(edges, [series] * nv, tensor, cache)
        return [(g, c) for g, c in enumerate(lam.coeffs) if not c.is_zero]
    lam = contract(edges, [a0] * nv, tensor, cache)
    return [] if lam.is_zero else [(0, lam)]


def _accumulate_graph_term(acc: _JetAccumulator, scalar: GaussianRational,
                           edge_count: int, vertex_count: int,
                           lam_items, tail_powers):
    """Push scalar * lam * f^(V)(A) into the accumulator, re-expanding the
    function jets around the hbar-free part of A."""
    for j, rj in enumerate(tail_powers):
        jfact = Fraction(1, math.factorial(j))
        for b, rp in enumerate(rj.coeffs):
            if rp.is_zero or (j > 0 and b == 0):
                continue
            for grade, coeff in lam_items:
                e = edge_count + grade + b
                if e > acc.order:
                    continue
                if j == 0:
                    acc.add(e, vertex_count, coeff * (scalar * jfact))
                else:
                    acc.add(e, vertex_count + j, coeff * rp * (scalar * jfact))


# ---------------------------------------------------------------------------
# the three forms
# ---------------------------------------------------------------------------

def symbol_of_function_labeled(a, cfg: StarConfig) -> JetSeries:
    """Sum over reduced labeled graphs, weight (i hbar/2)^E / (E! V!).

    Labeled graphs are grouped by their multiset of vertex pairs (identical
    contraction), each group weighted by its labeling count.  Odd-order cells
    cancel in the summation for the antisymmetric tensor; they are not
    assumed away.
    """
    order = cfg.truncation_order
    if order > MAX_LABELED_ORDER:
        raise CapacityError(
            f"labeled-form expansion limited to order {MAX_LABELED_ORDER}")
    series, a0, graded, tail_powers, n = _split_input(a, order)
    acc = _JetAccumulator(n, order)
    cache: dict = {}
    for e_count in range(order + 1):
        efact = math.factorial(e_count)
        base = half_i_power(e_count)
        for nv, edges, count in reduced_labeled_multisets(e_count):
            items = _lam_items(edges, nv, series, a0, graded, cfg.tensor, cache, n)
            if not items:
                continue
            scalar = base * Fraction(count, efact * math.factorial(nv))
            _accumulate_graph_term(acc, scalar, e_count, nv, items, tail_powers)
    return acc.done()


def symbol_of_function_unlabeled(a, cfg: StarConfig) -> JetSeries:
    """Sum over unlabeled reduced graphs weighted by c/S (antisymmetric
    tensors only; the sign pairing needs the orientation flip rule)."""
    if not cfg.tensor.is_antisymmetric:
        raise ValueError("the unlabeled form requires an antisymmetric tensor")
    order = cfg.truncation_order
    series, a0, graded, tail_powers, n = _split_input(a, order)
    acc = _JetAccumulator(n, order)
    cache: dict = {}
    for e_count in range(order + 1):
        base = half_i_power(e_count)
        for graph in enumerate_reduced(e_count):
            c = graph_sign_sum(graph)
            if c == 0:
                continue
            items = _lam_items(graph.directed_edges(), graph.vertices, series,
                               a0, graded, cfg.tensor, cache, n)
            if not items:
                continue
            scalar = base * Fraction(c, graph.symmetry_order()) \
                * Fraction(1, math.factorial(graph.vertices))
            _accumulate_graph_term(acc, scalar, e_count, graph.vertices, items,
                                   tail_powers)
    return acc.done()


def symbol_of_function_connected(a, cfg: StarConfig) -> JetSeries:
    """Exponential of the connected-graph sum, expanded in the operator that
    differentiates f.  Antisymmetric tensors only."""
    if not cfg.tensor.is_antisymmetric:
        raise ValueError("the connected form requires an antisymmetric tensor")
    order = cfg.truncation_order
    series, a0, graded, tail_powers, n = _split_input(a, order)
    cache: dict = {}

    # the exponent: cells (e, v) of sum over connected reduced graphs
    exponent: dict = {}
    for e_count in range(2, order + 1):
        base = half_i_power(e_count)
        for graph in enumerate_reduced(e_count, connected_only=True):
            c = graph_sign_sum(graph)
            if c == 0:
                continue
            items = _lam_items(graph.directed_edges(), graph.vertices, series,
                               a0, graded, cfg.tensor, cache, n)
            scalar = base * Fraction(c, graph.symmetry_order()) \
                * Fraction(1, math.factorial(graph.vertices))
            for grade, coeff in items:
                if e_count + grade > order:
                    continue
                key = (e_count + grade, graph.vertices)
                cur = exponent.get(key)
                add = coeff * scalar
                exponent[key] = add if cur is None else cur + add

    result = {(0, 0): PhasePolynomial.one(n)}
    power = {(0, 0): PhasePolynomial.one(n)}
    m = 1
    while power:
        power = _cell_mul(power, exponent, n, order)
        scaled = {k: p * Fraction(1, math.factorial(m)) for k, p in power.items()}
        result = _cell_add(result, scaled)
        m += 1
        if m > order:
            break

    # multiply by the re-expansion of f(A) around A0
    rex: dict = {}
    for j, rj in enumerate(tail_powers):
        jfact = Fraction(1, math.factorial(j))
        for b, rp in enumerate(rj.coeffs):
            if rp.is_zero or (j > 0 and b == 0):
                continue
            key = (b, j)
            cur = rex.get(key)
            add = rp * jfact
            rex[key] = add if cur is None else cur + add
    result = _cell_mul(result, rex, n, order)
    return JetSeries(n, order, result)


def _cell_mul(a: dict, b: dict, n: int, order: int) -> dict:
    out: dict = {}
    for (e1, v1), p1 in a.items():
        for (e2, v2), p2 in b.items():
            if e1 + e2 > order:
                continue
            key = (e1 + e2, v1 + v2)
            prod = p1 * p2
            cur = out.get(key)
            out[key] = prod if cur is None else cur + prod
    return {k: p for k, p in out.items() if not p.is_zero}


def _cell_add(a: dict, b: dict) -> dict:
    out = dict(a)
    for key, p in b.items():
        cur = out.get(key)
        out[key] = p if cur is None else cur + p
    return {k: p for k, p in out.items() if not p.is_zero}


def graph_sign_sum(graph) -> int:
    """Sign-sum c of the stored canonical labeling (cached on first use)."""
    cached = _SIGN_CACHE.get(graph.key())
    if cached is None:
        from .graphs import c_coefficient
        cached = c_coefficient(graph)
        _SIGN_CACHE[graph.key()] = cached
    return cached


_SIGN_CACHE: dict = {}


# ---------------------------------------------------------------------------
# substitution
# ---------------------------------------------------------------------------

def compose_polynomial(coeffs, a: PhasePolynomial) -> PhasePolynomial:
    """sum_k coeffs[k] * a^k by Horner's rule."""
    total = PhasePolynomial.zero(a.n)
    for c in reversed(list(coeffs)):
        total = total * a + PhasePolynomial.constant(a.n, c)
    return total


def substitute_polynomial(js: JetSeries, f: FunctionJet, a) -> HbarSeries:
    """Materialize B for a polynomial f; exact HbarSeries output."""
    if f.kind != "polynomial":
        raise ValueError("substitute_polynomial needs a polynomial jet")
    if isinstance(a, HbarSeries):
        # jets were assembled around the hbar-free part of the input
        a = a.coefficient(0)
    composed: dict = {}
    coeffs = [PhasePolynomial.zero(js.n) for _ in range(js.order + 1)]
    for (e, v), q in js.terms.items():
        if v not in composed:
            composed[v] = compose_polynomial(f.jet_coeffs(v), a)
        fv = composed[v]
        if fv.is_zero:
            continue
        coeffs[e] = coeffs[e] + q * fv
    return HbarSeries(js.n, js.order, coeffs)


def substitute_exponential(js: JetSeries, rate) -> HbarSeries:
    """Materialize the prefactor P with B = exp(rate*A) * P for f = exp(rate y)."""
    rate = Fraction(rate)
    coeffs = [PhasePolynomial.zero(js.n) for _ in range(js.order + 1)]
    for (e, v), q in js.terms.items():
        coeffs[e] = coeffs[e] + q * rate ** v
    return HbarSeries(js.n, js.order, coeffs)


def substitute_resolvent(js: JetSeries, a: PhasePolynomial):
    """Materialize f = 1/(a - y): one ResolventSymbol per hbar order."""
    out = []
    for e in range(js.order + 1):
        total = ResolventSymbol.constant(a, 0)
        for (e2, v), q in js.terms.items():
            if e2 != e:
                continue
            term = ResolventSymbol.simple_pole(a, q * math.factorial(v), v + 1)
            total = total + term
        out.append(total.reduced())
    return out


# ---------------------------------------------------------------------------
# pointwise expansion at a phase point
# ---------------------------------------------------------------------------

def pointwise_symbol(a: PhasePolynomial, f: FunctionJet, z0,
                     cfg: StarConfig):
    """Value series of B at z0 via star powers of (A - A(z0)).

    Requires a concrete polynomial jet.  Returns one GaussianRational per
    hbar power 0..truncation_order.
    """
    if f.kind != "polynomial":
        raise ValueError("pointwise expansion needs a concrete polynomial f")
    a0 = a.evaluate(z0)
    if not a0.is_real:
        raise ValueError("the base value A(z0) must be real")
    a0 = a0.re
    shifted = a - PhasePolynomial.constant(a.n, a0)
    order = cfg.truncation_order
    k_max = f.degree if f.degree is not None else 2 * order + 1
    totals = [as_scalar(0) for _ in range(order + 1)]
    powerk = HbarSeries.one(a.n, order)
    for k in range(k_max + 1):
        scale = f.jet_value(k, a0) * Fraction(1, math.factorial(k))
        if scale:
            values = powerk.evaluate(z0)
            for e in range(order + 1):
                totals[e] = totals[e] + values[e] * scale
        if k < k_max:
            powerk = star_product(powerk, shifted, cfg)
    return tuple(totals)


def star_power_values(a: PhasePolynomial, m: int, z0, cfg: StarConfig):
    """(A - A(z0))^{*m} evaluated at z0, one value per hbar power."""
    a0 = a.evaluate(z0)
    if not a0.is_real:
        raise ValueError("the base value A(z0) must be real")
    shifted = a - PhasePolynomial.constant(a.n, a0.re)
    powerk = HbarSeries.one(a.n, cfg.truncation_order)
    for _ in range(m):
        powerk = star_product(powerk, shifted, cfg)
    return powerk.evaluate(z0)


# ---------------------------------------------------------------------------
# several commuting operators
# ---------------------------------------------------------------------------

class MultiJetSeries:
    """B for F(A_1..A_n): terms[(e, alpha)] with alpha a derivative
    multi-index of F (length n, |alpha| = number of vertices)."""

    __slots__ = ("n", "n_args", "order", "terms")

    def __init__(self, n, n_args, order, terms=None):
        clean = {}
        for (e, alpha), poly in (terms or {}).items():
            if not poly.is_zero and e <= order:
                clean[(int(e), tuple(alpha))] = poly
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "n_args", n_args)
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("MultiJetSeries is immutable")

    def cell(self, e, alpha) -> PhasePolynomial:
        return self.terms.get((e, tuple(alpha)), PhasePolynomial.zero(self.n))

    def __eq__(self, other):
        if not isinstance(other, MultiJetSeries):
            return NotImplemented
        return (self.n, self.n_args, self.order, self.terms) == \
            (other.n, other.n_args, other.order, other.terms)


def symbol_of_multifunction(symbols, cfg: StarConfig) -> MultiJetSeries:
    """Expansion of F(A_1..A_n) for commuting operators.

    The commuting hypothesis is the caller's responsibility; nothing at the
    symbol level checks it.  Inputs must be hbar-free polynomials.
    """
    if not cfg.tensor.is_antisymmetric:
        raise ValueError("the multifunction form requires an antisymmetric tensor")
    n_args = len(symbols)
    if n_args == 0:
        raise ValueError("need at least one symbol")
    polys = []
    for s in symbols:
        if isinstance(s, HbarSeries):
            if s.min_grade() not in (None, 0) or not (s - s.coefficient(0)).is_zero:
                raise ValueError("multifunction inputs must be hbar-free")
            s = s.coefficient(0)
        polys.append(s)
    n = polys[0].n
    order = cfg.truncation_order
    terms: dict = {}
    zero_alpha = (0,) * n_args
    terms[(0, zero_alpha)] = PhasePolynomial.one(n)
    cache: dict = {}
    for e_count in range(2, order + 1):
        base = half_i_power(e_count)
        for graph in enumerate_reduced(e_count):
            c = graph_sign_sum(graph)
            if c == 0 or graph.vertices == 0:
                continue
            scalar = base * Fraction(c, graph.symmetry_order()) \
                * Fraction(1, math.factorial(graph.vertices))
            edges = graph.directed_edges()
            for assign in itertools.product(range(n_args), repeat=graph.vertices):
                lam = contract(edges, [polys[i] for i in assign], cfg.tensor, cache)
                if lam.is_zero:
                    continue
                alpha = [0] * n_args
                for i in assign:
                    alpha[i] += 1
                key = (e_count, tuple(alpha))
                add = lam * scalar
                cur = terms.get(key)
                terms[key] = add if cur is None else cur + add
    return MultiJetSeries(n, n_args, order, terms)


def multifunction_to_single(mjs: MultiJetSeries) -> JetSeries:
    """Collapse the n = 1 multifunction series to an ordinary JetSeries."""
    if mjs.n_args != 1:
        raise ValueError("only n = 1 collapses to a single-function series")
    terms = {(e, alpha[0]): p for (e, alpha), p in mjs.terms.items()}
    return JetSeries(mjs.n, mjs.order, terms)


def substitute_multivariate_polynomial(mjs: MultiJetSeries, fcoeffs: dict,
                                       symbols) -> HbarSeries:
    """Materialize for polynomial F given as {exponent tuple: Fraction}."""
    n = mjs.n
    coeffs = [PhasePolynomial.zero(n) for _ in range(mjs.order + 1)]
    partials: dict = {}

    def partial(alpha):
        if alpha not in partials:
            out = PhasePolynomial.zero(n)
            for expo, c in fcoeffs.items():
                c = Fraction(c)
                term = PhasePolynomial.constant(n, 1)
                dead = False
                for i, (e_i, a_i) in enumerate(zip(expo, alpha)):
                    if a_i > e_i:
                        dead = True
                        break
                    c *= Fraction(math.factorial(e_i), math.factorial(e_i - a_i))
                    term = term * symbols[i] ** (e_i - a_i)
                if not dead and c:
                    out = out + term * c
            partials[alpha] = out
        return partials[alpha]

    for (e, alpha), q in mjs.terms.items():
        fv = partial(alpha)
        if not fv.is_zero:
            coeffs[e] = coeffs[e] + q * fv
    return HbarSeries(n, mjs.order, coeffs)


# ---------------------------------------------------------------------------
# resolvent identity
# ---------------------------------------------------------------------------

@dataclass
class ResolventCheck:
    """Outcome of h_a * (a - A) = (a - A) * h_a = 1 up to the given order."""

    order: int
    passed: bool
    first_failure: int | None = None
    residue: object = None
    sides: tuple = ("left", "right")


def resolvent_expansion(a: PhasePolynomial, order: int):
    """h_a as one ResolventSymbol per hbar grade, summed over reduced
    labeled graphs with up to `order` edges."""
    tensor = moyal_tensor(a.n)
    cache: dict = {}
    grades = []
    for e_count in range(order + 1):
        efact = math.factorial(e_count)
        base = half_i_power(e_count)
        total = ResolventSymbol.constant(a, 0)
        for nv, edges, count in reduced_labeled_multisets(e_count):
            if nv == 0:
                lam = PhasePolynomial.one(a.n)
            else:
                lam = contract(edges, [a] * nv, tensor, cache)
                if lam.is_zero:
                    continue
            scalar = base * Fraction(count, efact)
            term = ResolventSymbol.simple_pole(a, lam * scalar, nv + 1)
            total = total + term
        grades.append(total.reduced())
    return grades


def _res_star(left_grades, right_grades, a: PhasePolynomial, order: int):
    """Star product of two hbar-graded resolvent symbols."""
    tensor = moyal_tensor(a.n)
    from .tensors import bracket_k
    out = []
    for m in range(order + 1):
        total = ResolventSymbol.constant(a, 0)
        for k in range(m + 1):
            scalar = half_i_power(k) * Fraction(1, math.factorial(k))
            for i in range(m - k + 1):
                j = m - k - i
                li = left_grades[i] if i < len(left_grades) else None
                rj = right_grades[j] if j < len(right_grades) else None
                if li is None or rj is None or li.is_zero or rj.is_zero:
                    continue
                total = total + bracket_k(li, rj, k, tensor) * scalar
        out.append(total)
    return out


def resolvent_identity_check(a: PhasePolynomial, order: int) -> ResolventCheck:
    """Verify h_a * (a - A) = (a - A) * h_a = 1 + O(hbar^(order+1)) exactly."""
    if order > MAX_LABELED_ORDER:
        raise CapacityError("resolvent check limited to order "
                            f"{MAX_LABELED_ORDER}")
    h = resolvent_expansion(a, order)
    ama = [ResolventSymbol.a_minus_base(a)]
    one = ResolventSymbol.constant(a, 1)
    for name, grades in (("left", _res_star(h, ama, a, order)),
                         ("right", _res_star(ama, h, a, order))):
        for m, value in enumerate(grades):
            expected_ok = value.equals(one) if m == 0 else value.is_zero or value.equals(
                ResolventSymbol.constant(a, 0))
            if not expected_ok:
                return ResolventCheck(order=order, passed=False,
                                      first_failure=m, residue=value.reduced(),
                                      sides=(name,))
    return ResolventCheck(order=order, passed=True)

