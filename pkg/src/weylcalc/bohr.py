"""Semiclassical eigenvalue pipeline for 1D Hamiltonians.

Assembles the quantization-condition corrections as graph sums (both the
full reduced-graph version and the five-graph reduction where every vertex
keeps at least two edges), evaluates the orbit integrals by Gauss-Legendre
quadrature after removing the turning-point square-root singularity, applies
d/dE by central finite differences with Richardson extrapolation, solves for
the eigenvalues, and cross-checks against an independent finite-difference
Schrodinger matrix.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

import numpy as np
from numpy.polynomial import polynomial as npoly
from scipy.linalg import eigh_tridiagonal
from scipy.optimize import brentq

from .contraction import contract
from .errors import DimensionMismatch
from .graphs import enumerate_reduced
from .funcalc import graph_sign_sum, JetSeries, substitute_resolvent
from .poly import PhasePolynomial
from .scalars import half_i_power
from .splitring import SplitSymbol
from .tensors import moyal_tensor


# ---------------------------------------------------------------------------
# Hamiltonians
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Hamiltonian1D:
    """Symbol H(x, p) with an optional kinetic-plus-potential split form."""

    h: PhasePolynomial
    mass: Fraction | None = None
    potential: tuple | None = None

    def __post_init__(self):
        if self.h.n != 1:
            raise DimensionMismatch("the eigenvalue pipeline is one-dimensional")
        if (self.mass is None) != (self.potential is None):
            raise ValueError("mass and potential must be given together")
        if self.mass is not None:
            object.__setattr__(self, "mass", Fraction(self.mass))
            object.__setattr__(self, "potential",
                               tuple(Fraction(c) for c in self.potential))
            if self.mass <= 0:
                raise ValueError("mass must be positive")
            rebuilt = _split_symbol(self.mass, self.potential)
            if rebuilt != self.h:
                raise ValueError("split form does not reproduce the symbol")

    @classmethod
    def from_potential(cls, mass, coeffs) -> "Hamiltonian1D":
        """coeffs are the ascending coefficients of V(x)."""
        mass = Fraction(mass)
        coeffs = tuple(Fraction(c) for c in coeffs)
        return cls(_split_symbol(mass, coeffs), mass, coeffs)

    @property
    def has_split(self) -> bool:
        return self.mass is not None


def _split_symbol(mass: Fraction, coeffs) -> PhasePolynomial:
    p = PhasePolynomial.p(1)
    h = p * p * Fraction(1, 2 * mass)
    x = PhasePolynomial.x(1)
    for k, c in enumerate(coeffs):
        if c:
            h = h + x ** k * c
    return h


# ---------------------------------------------------------------------------
# universal polynomials and action series
# ---------------------------------------------------------------------------

def universal_polynomial(j: int, l: int, h: PhasePolynomial) -> PhasePolynomial:
    """P_{j,l}: sum over reduced graphs with l - 1 vertices and j edges of
    (i/2)^j (c/S) times the contraction of H."""
    tensor = moyal_tensor(h.n)
    total = PhasePolynomial.zero(h.n)
    base = half_i_power(j)
    for graph in enumerate_reduced(j):
        if graph.vertices != l - 1:
            continue
        c = graph_sign_sum(graph)
        if c == 0 or graph.vertices == 0:
            continue
        lam = contract(graph.directed_edges(), [h] * graph.vertices, tensor)
        if lam.is_zero:
            continue
        total = total + lam * (base * Fraction(c, graph.symmetry_order()))
    return total


def resolvent_pole_expansion(h: PhasePolynomial, j: int):
    """sum_l P_{j,l} / (a - H)^l as a ResolventSymbol, for dual-path checks."""
    from .resolvent import ResolventSymbol
    total = ResolventSymbol.constant(h, 0)
    for l in range(2, 2 * j + 2):
        p = universal_polynomial(j, l, h)
        if not p.is_zero:
            total = total + ResolventSymbol.simple_pole(h, p, l)
    return total


def jet_series_resolvent_order(js: JetSeries, h: PhasePolynomial, j: int):
    """hbar^j part of the resolvent materialization of a jet series."""
    return substitute_resolvent(js, h)[j]


@dataclass(frozen=True)
class ActionTerm:
    """One contribution w * (d/dE)^d of the orbit integral of the integrand."""

    derivative_order: int
    integrand: PhasePolynomial
    weight: Fraction


@dataclass(frozen=True)
class ActionSeries:
    """Corrections S_j entering 2 pi (n - 1/2) hbar = S_0(E) + sum hbar^j S_j(E)."""

    terms: dict  # j -> tuple of ActionTerm
    version: str

    def orders(self):
        return sorted(self.terms)


def action_series_full(h: PhasePolynomial, js=(2, 4)) -> ActionSeries:
    """The all-reduced-graphs form: each contributing graph with E = j edges
    adds (i/2)^j (-1)^V / V! (c/S) (d/dE)^(V-1) of its orbit integral."""
    tensor = moyal_tensor(h.n)
    terms: dict = {}
    for j in js:
        contribs = []
        base = half_i_power(j)
        for graph in enumerate_reduced(j):
            c = graph_sign_sum(graph)
            if c == 0 or graph.vertices == 0:
                continue
            lam = contract(graph.directed_edges(), [h] * graph.vertices, tensor)
            if lam.is_zero:
                continue
            scalar = base * Fraction((-1) ** graph.vertices *
                                     c, math.factorial(graph.vertices) *
                                     graph.symmetry_order())
            if not scalar.is_real:
                raise ArithmeticError("action weight must be real at even order")
            contribs.append(ActionTerm(graph.vertices - 1, lam, scalar.re))
        terms[j] = tuple(contribs)
    return ActionSeries(terms=terms, version="full")


# the five-graph order-4 reduction: directed edges as drawn and the exact
# prefactors 1/(2!*6), 1/(2!*120), 1/(4!*12), 1/(3!*15), 1/(4!*15), 1/(3!*12)
_REDUCED_GRAPHS = {
    2: (
        (1, ((1, 2), (1, 2)), Fraction(-1, 4) * Fraction(1, 12)),
    ),
    4: (
        (1, ((1, 2),) * 4, Fraction(1, 16) * Fraction(1, 240)),
        (3, ((1, 2), (1, 2), (3, 4), (3, 4)), Fraction(1, 16) * Fraction(1, 288)),
        (2, ((1, 2), (1, 2), (1, 3), (2, 3)), Fraction(-1, 16) * Fraction(1, 90)),
        (3, ((1, 2), (2, 4), (4, 3), (3, 1)), Fraction(1, 16) * Fraction(1, 360)),
        (2, ((1, 2), (1, 2), (2, 3), (2, 3)), Fraction(-1, 16) * Fraction(1, 72)),
    ),
}


def action_series_reduced(h: PhasePolynomial, js=(2, 4)) -> ActionSeries:
    """The Stokes-reduced form: one graph at order 2 and five at order 4,
    every vertex keeping at least two edges."""
    tensor = moyal_tensor(h.n)
    terms: dict = {}
    for j in js:
        contribs = []
        for d, edges, weight in _REDUCED_GRAPHS.get(j, ()):
            nv = max(max(e) for e in edges)
            lam = contract(edges, [h] * nv, tensor)
            if lam.is_zero:
                continue
            contribs.append(ActionTerm(d, lam, weight))
        terms[j] = tuple(contribs)
    return ActionSeries(terms=terms, version="reduced")


def action_series(h: Hamiltonian1D | PhasePolynomial, js=(2, 4),
                  version: str = "reduced") -> ActionSeries:
    poly = h.h if isinstance(h, Hamiltonian1D) else h
    if version == "reduced":
        return action_series_reduced(poly, js)
    if version == "full":
        return action_series_full(poly, js)
    raise ValueError("version must be 'reduced' or 'full'")


# ---------------------------------------------------------------------------
# symbolic kinetic-plus-potential specialization
# ---------------------------------------------------------------------------

def split_form_coefficients():
    """Order-2 and order-4 correction terms for H = p^2 u / 2 + V(x), u = 1/m,
    with the mass and the potential derivatives kept formal.

    Returns {j: {(derivative order, monomial string): Fraction}} where the
    monomial names the integrand, e.g. u*V2 for V''(x)/m.
    """
    hsym = SplitSymbol.hamiltonian()
    out: dict = {}
    for j, rows in _REDUCED_GRAPHS.items():
        cells: dict = {}
        for d, edges, weight in rows:
            nv = max(max(e) for e in edges)
            lam = contract(edges, [hsym] * nv, _SPLIT_TENSOR)
            if lam.is_zero:
                continue
            if not lam.p_free():
                raise ArithmeticError(
                    "split-form integrand unexpectedly involves p")
            for exp, c in lam.terms.items():
                key = (d, lam.monomial_key(exp))
                cells[key] = cells.get(key, Fraction(0)) + weight * c
        out[j] = {k: v for k, v in cells.items() if v}
    return out


_SPLIT_TENSOR = moyal_tensor(1)


# ---------------------------------------------------------------------------
# orbit integrals
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _leggauss(nodes: int):
    return np.polynomial.legendre.leggauss(nodes)


def _potential_coeffs_float(ham: Hamiltonian1D) -> np.ndarray:
    return np.array([float(c) for c in ham.potential], dtype=float)


def potential_minimum(ham: Hamiltonian1D) -> tuple:
    """(x_min, V(x_min)) over the real critical points."""
    v = _potential_coeffs_float(ham)
    dv = npoly.polyder(v)
    if len(dv) == 0 or not dv.any():
        return 0.0, float(npoly.polyval(0.0, v))
    roots = npoly.polyroots(dv)
    real = [float(r.real) for r in roots if abs(r.imag) < 1e-9 * (1 + abs(r))]
    if not real:
        raise ValueError("potential has no real critical point")
    values = [float(npoly.polyval(r, v)) for r in real]
    i = int(np.argmin(values))
    return real[i], values[i]


def turning_points(ham: Hamiltonian1D, energy: float) -> tuple:
    """The two simple turning points bracketing the well at this energy."""
    v = _potential_coeffs_float(ham)
    diff = -v.copy()
    diff[0] += energy  # E - V
    roots = npoly.polyroots(diff)
    scale = 1 + abs(energy)
    real = sorted(float(r.real) for r in roots
                  if abs(r.imag) < 1e-8 * (1 + abs(r)))
    if len(real) < 2:
        raise ValueError("could not bracket the classical orbit")
    candidates = []
    for lo, hi in zip(real, real[1:]):
        if hi - lo < 1e-12 * scale:
            continue
        mid = 0.5 * (lo + hi)
        if npoly.polyval(mid, v) < energy:
            candidates.append((lo, hi))
    if len(candidates) != 1:
        raise ValueError(
            f"expected a single classically allowed interval, found {len(candidates)}")
    lo, hi = candidates[0]
    # Newton polish against E - V
    ddiff = npoly.polyder(diff)
    for _ in range(3):
        lo -= npoly.polyval(lo, diff) / npoly.polyval(lo, ddiff)
        hi -= npoly.polyval(hi, diff) / npoly.polyval(hi, ddiff)
    return lo, hi


def _orbit_reduce(integrand: PhasePolynomial, ham: Hamiltonian1D,
                  energy: float) -> np.ndarray:
    """Restrict to the orbit: drop p-odd terms and substitute
    p^2 -> 2m(E - V(x)); returns float coefficients in x."""
    m = float(ham.mass)
    v = _potential_coeffs_float(ham)
    base = -2.0 * m * v
    base[0] += 2.0 * m * energy  # 2m(E - V)
    total = np.zeros(1)
    for exp, coeff in integrand.terms.items():
        a, b = exp
        if b % 2 == 1:
            continue  # odd in p: cancels between the two branches
        if not coeff.is_real:
            raise ArithmeticError("orbit integrand must be real")
        term = npoly.polypow(base, b // 2) if b else np.ones(1)
        mono = np.zeros(a + 1)
        mono[a] = float(coeff.re)
        total = npoly.polyadd(total, npoly.polymul(mono, term))
    return total


class OrbitIntegral:
    """Orbit integral of one integrand against time, reusable across nearby
    energies with a frozen quadrature rule.

    A frozen node count matters when the values feed finite differences: the
    fixed-rule integral is an analytic function of E, so differentiating it
    only fights float rounding rather than the adaptive-stopping jitter.
    """

    def __init__(self, ham: Hamiltonian1D, integrand):
        if not ham.has_split:
            raise ValueError("orbit integrals need the kinetic-plus-potential form")
        self.ham = ham
        self.integrand = integrand
        self.mass = float(ham.mass)

    def value(self, energy: float, nodes: int) -> float:
        if isinstance(self.integrand, PhasePolynomial):
            gx = _orbit_reduce(self.integrand, self.ham, energy)
        else:
            gx = np.asarray(self.integrand, dtype=float)
        if not gx.any():
            return 0.0
        lo, hi = turning_points(self.ham, energy)
        mid, half = 0.5 * (lo + hi), 0.5 * (hi - lo)
        v = _potential_coeffs_float(self.ham)
        diff = -v.copy()
        diff[0] += energy
        # E - V = (x - lo)(hi - x) W(x): W = -quotient of the division
        denom = npoly.polyfromroots([lo, hi])
        quot, _rem = npoly.polydiv(diff, denom)
        w_coeffs = -quot
        t, wts = _leggauss(nodes)
        theta = 0.5 * np.pi * t
        x = mid + half * np.sin(theta)
        wvals = npoly.polyval(x, w_coeffs)
        if np.any(wvals <= 0):
            raise ArithmeticError("orbit factorization failed (W <= 0)")
        vals = npoly.polyval(x, gx) / np.sqrt(wvals)
        return math.sqrt(2.0 * self.mass) * 0.5 * np.pi * float(np.dot(wts, vals))

    def converged(self, energy: float, rel_tol: float = 5e-14):
        """(value, node count) once panel doubling stabilizes to rel_tol."""
        value = self.value(energy, 64)
        for nodes in (128, 256, 512, 1024, 2048, 4096):
            nxt = self.value(energy, nodes)
            if abs(nxt - value) <= rel_tol * (abs(nxt) + 1e-30):
                return nxt, nodes
            value = nxt
        return value, 4096


def period_integral(ham: Hamiltonian1D, energy: float, integrand,
                    rel_tol: float = 5e-14) -> float:
    """Orbit integral of the integrand against time, i.e.
    2 integral of G(x) m / sqrt(2m(E - V)) dx between the turning points.

    The substitution x = mid + half*sin(theta) removes the inverse square
    root endpoint singularity; Gauss-Legendre panels are doubled until the
    value is stable to rel_tol.
    """
    value, _nodes = OrbitIntegral(ham, integrand).converged(energy, rel_tol)
    return value


def leading_action(ham: Hamiltonian1D, energy: float,
                   rel_tol: float = 5e-14) -> float:
    """S_0(E): the closed loop integral of p dx, via the same substitution."""
    lo, hi = turning_points(ham, energy)
    mid, half = 0.5 * (lo + hi), 0.5 * (hi - lo)
    v = _potential_coeffs_float(ham)
    diff = -v.copy()
    diff[0] += energy
    denom = npoly.polyfromroots([lo, hi])
    quot, _rem = npoly.polydiv(diff, denom)
    w_coeffs = -quot
    m = float(ham.mass)

    def sample(nodes: int) -> float:
        t, wts = _leggauss(nodes)
        theta = 0.5 * np.pi * t
        x = mid + half * np.sin(theta)
        wvals = npoly.polyval(x, w_coeffs)
        vals = np.cos(theta) ** 2 * np.sqrt(wvals)
        return 2.0 * math.sqrt(2.0 * m) * half * half * 0.5 * np.pi \
            * float(np.dot(wts, vals))

    value = sample(64)
    for nodes in (128, 256, 512, 1024, 2048, 4096):
        nxt = sample(nodes)
        if abs(nxt - value) <= rel_tol * (abs(nxt) + 1e-30):
            return nxt
        value = nxt
    return value


# ---------------------------------------------------------------------------
# numerical d/dE: central differences with Richardson extrapolation
# ---------------------------------------------------------------------------

def richardson_derivative(func, x: float, order: int, h0: float,
                          levels: int = 5):
    """(d/dx)^order func at x; returns (value, error estimate).

    Base rule is the minimal central difference (binomial weights, accuracy
    2); the Richardson table removes even powers of h until the update stalls
    at the rounding floor.
    """
    if order == 0:
        return func(x), 0.0
    binom = [math.comb(order, i) * (-1) ** i for i in range(order + 1)]
    offsets = [order / 2 - i for i in range(order + 1)]

    def base(h: float) -> float:
        return sum(b * func(x + off * h) for b, off in zip(binom, offsets)) / h ** order

    rows = [[base(h0)]]
    for i in range(1, levels):
        h = h0 / 2 ** i
        row = [base(h)]
        for j in range(1, i + 1):
            factor = 4.0 ** j
            row.append((factor * row[j - 1] - rows[i - 1][j - 1]) / (factor - 1.0))
        rows.append(row)
    # take the diagonal entry whose last update was smallest: deeper levels
    # eventually hit the rounding floor of the quadrature values
    diag = [rows[i][i] for i in range(len(rows))]
    best_i = 1
    best_err = abs(diag[1] - diag[0])
    for i in range(2, len(diag)):
        err = abs(diag[i] - diag[i - 1])
        if err <= best_err:
            best_i, best_err = i, err
    return diag[best_i], best_err


# ---------------------------------------------------------------------------
# evaluating the corrections and solving for eigenvalues
# ---------------------------------------------------------------------------

@dataclass
class CorrectionOptions:
    fd_levels: int = 6
    fd_scale: float = 0.18
    quad_rel_tol: float = 5e-14
    # derivatives of this order and above use high-precision quadrature
    # values: float64 rounding amplified by 1/h^d swamps a fifth derivative
    mp_min_derivative: int = 4
    mp_dps: int = 40


def _mp_orbit_value(ham: Hamiltonian1D, monomials, energy):
    """Orbit integral at mpmath precision; energy is an mpf."""
    from mpmath import mp

    v = [mp.mpf(c.numerator) / mp.mpf(c.denominator) for c in ham.potential]
    m = mp.mpf(ham.mass.numerator) / mp.mpf(ham.mass.denominator)
    # E - V as mp coefficients, ascending
    diff = [-c for c in v]
    while len(diff) < 1:
        diff.append(mp.mpf(0))
    diff[0] += energy
    roots = mp.polyroots(list(reversed(diff)), maxsteps=200, extraprec=80)
    real = sorted(r.real for r in roots if abs(r.imag) < mp.mpf(10) ** (-mp.dps // 2))

    def vval(x):
        acc = mp.mpf(0)
        for c in reversed(v):
            acc = acc * x + c
        return acc

    candidates = []
    for lo, hi in zip(real, real[1:]):
        if hi - lo > mp.mpf(10) ** (-mp.dps // 2) and vval((lo + hi) / 2) < energy:
            candidates.append((lo, hi))
    if len(candidates) != 1:
        raise ValueError("expected a single classically allowed interval")
    lo, hi = candidates[0]
    mid, half = (lo + hi) / 2, (hi - lo) / 2

    # synthetic division of E - V by (x - lo)(x - hi); W = -quotient
    b1 = -(lo + hi)
    b0 = lo * hi
    rev = list(reversed(diff))  # descending
    quot = []
    r0, r1 = rev[0], rev[1]
    for k in range(2, len(rev)):
        quot.append(r0)
        r0, r1 = r1 - b1 * r0, rev[k] - b0 * r0
    w_desc = [-c for c in quot]

    def wval(x):
        acc = mp.mpf(0)
        for c in w_desc:
            acc = acc * x + c
        return acc

    twom = 2 * m

    def integrand(theta):
        s = mp.sin(theta)
        x = mid + half * s
        w = wval(x)
        allowed = (x - lo) * (hi - x)
        total = mp.mpf(0)
        for a, bh, c in monomials:
            kin = twom * allowed * w
            total += c * x ** a * kin ** bh
        return total / mp.sqrt(w)

    quad = mp.quad(integrand, [-mp.pi / 2, mp.pi / 2])
    return mp.sqrt(twom) * quad


def _mp_action_derivative(ham: Hamiltonian1D, term: ActionTerm, energy: float,
                          options: CorrectionOptions) -> float:
    """(d/dE)^d of the orbit integral with mpf quadrature values, killing the
    float64 rounding floor that a fourth or fifth derivative would amplify."""
    from mpmath import mp

    d = term.derivative_order
    with mp.workdps(options.mp_dps):
        mons = []
        for (exp, c) in term.integrand.terms.items():
            a, b = exp
            if b % 2:
                continue
            mons.append((a, b // 2,
                         mp.mpf(c.re.numerator) / mp.mpf(c.re.denominator)))
        if not mons:
            return 0.0
        e0 = mp.mpf(energy)
        h0 = e0 / 8

        def func(e):
            return _mp_orbit_value(ham, mons, e)

        binom = [math.comb(d, i) * (-1) ** i for i in range(d + 1)]
        offsets = [mp.mpf(d) / 2 - i for i in range(d + 1)]
        rows = []
        levels = 4
        for i in range(levels):
            h = h0 / 2 ** i
            base = sum(bc * func(e0 + off * h)
                       for bc, off in zip(binom, offsets)) / h ** d
            row = [base]
            for j in range(1, i + 1):
                factor = mp.mpf(4) ** j
                row.append((factor * row[j - 1] - rows[i - 1][j - 1])
                           / (factor - 1))
            rows.append(row)
        return float(rows[-1][-1])


def action_correction(ham: Hamiltonian1D, series: ActionSeries, j: int,
                      energy: float,
                      options: CorrectionOptions | None = None) -> float:
    """S_j(E) for one hbar order of an assembled ActionSeries."""
    options = options or CorrectionOptions()
    _, vmin = potential_minimum(ham)
    room = energy - vmin
    if room <= 0:
        raise ValueError("energy below the bottom of the well")
    total = 0.0
    for term in series.terms.get(j, ()):
        d = term.derivative_order
        if d >= options.mp_min_derivative:
            total += float(term.weight) * _mp_action_derivative(
                ham, term, energy, options)
            continue
        orbit = OrbitIntegral(ham, term.integrand)
        center, nodes = orbit.converged(energy, rel_tol=options.quad_rel_tol)
        if d == 0:
            value = center
        else:
            # freeze the rule (one doubling beyond convergence) so the
            # stencil differentiates a single analytic function of E
            nodes = min(2 * nodes, 8192)
            span = max(d, 1)
            h0 = min(options.fd_scale * max(abs(energy), 1.0),
                     1.2 * room / (span + 2))
            value, _ = richardson_derivative(
                lambda e: orbit.value(e, nodes), energy, d, h0,
                levels=options.fd_levels)
        total += float(term.weight) * value
    return total


def quantization_function(ham: Hamiltonian1D, series: ActionSeries,
                          energy: float, hbar: float, order: int,
                          options: CorrectionOptions | None = None) -> float:
    """S_0(E) + sum_{j <= order} hbar^j S_j(E)."""
    total = leading_action(ham, energy)
    for j in series.orders():
        if j <= order:
            total += hbar ** j * action_correction(ham, series, j, energy,
                                                   options)
    return total


@dataclass
class BohrSommerfeldLevel:
    n: int
    order: int
    energy: float
    blowup_flag: bool = False
    corrections: dict = field(default_factory=dict)


def bs_eigenvalues(ham: Hamiltonian1D, n_values, order: int, hbar: float,
                   version: str = "reduced",
                   options: CorrectionOptions | None = None,
                   series: ActionSeries | None = None):
    """Solve 2 pi (n - 1/2) hbar = S(E) for each requested level.

    order 0 uses the leading action alone; orders 2 and 4 add the assembled
    graph corrections (or a caller-supplied ActionSeries).  A level is
    flagged when its order-4 term exceeds the order-2 term in magnitude.
    """
    if order not in (0, 2, 4):
        raise ValueError("order must be 0, 2 or 4")
    if hbar <= 0:
        raise ValueError("hbar must be positive")
    js = tuple(j for j in (2, 4) if j <= order)
    if series is None:
        series = action_series(ham, js=js, version=version) if js else \
            ActionSeries(terms={}, version=version)
    _, vmin = potential_minimum(ham)
    out = []
    for n in n_values:
        if n < 1:
            raise ValueError("levels are numbered from 1")
        target = 2.0 * math.pi * (n - 0.5) * hbar

        def gap(e: float) -> float:
            return quantization_function(ham, series, e, hbar, order,
                                         options) - target

        lo = None
        hi = None
        scale = max(abs(vmin), hbar, 1e-6)
        step = 0.25 * scale
        e = vmin + step
        prev = None
        for _ in range(200):
            try:
                val = gap(e)
            except ValueError:
                e += step
                continue
            if val > 0:
                hi = e
                lo = prev
                break
            prev = e
            e = vmin + (e - vmin) * 1.6 + step
        if hi is None:
            raise RuntimeError(f"failed to bracket level n={n}")
        if lo is None:
            lo = vmin + 1e-9 * scale + 1e-12
            for _ in range(120):
                try:
                    if gap(lo) <= 0:
                        break
                except (ValueError, ArithmeticError):
                    raise RuntimeError(
                        f"level n={n}: corrections do not bracket a root "
                        "above the well bottom") from None
                lo = vmin + (lo - vmin) * 0.5
            else:
                raise RuntimeError(f"failed to bracket level n={n}")
        energy = brentq(gap, lo, hi, xtol=1e-13 * max(1.0, abs(hi)),
                        rtol=8.9e-16, maxiter=200)
        level = BohrSommerfeldLevel(n=n, order=order, energy=energy)
        if order == 4:
            s2 = hbar ** 2 * action_correction(ham, series, 2, energy, options)
            s4 = hbar ** 4 * action_correction(ham, series, 4, energy, options)
            level.corrections = {2: s2, 4: s4}
            if abs(s4) > abs(s2) and abs(s4) > 1e-12:
                level.blowup_flag = True
        out.append(level)
    return out


# ---------------------------------------------------------------------------
# independent Schrodinger-matrix oracle
# ---------------------------------------------------------------------------

def schrodinger_oracle(potential, mass, hbar, count: int,
                       rel_tol: float = 1e-8):
    """Lowest eigenvalues of -hbar^2/(2m) psi'' + V psi by symmetric finite
    differences with Richardson extrapolation on a doubling grid; the
    potential is given by ascending polynomial coefficients.

    The box size is grown until V at the walls dominates ten times the
    highest requested level's estimate.
    """
    pot = [Fraction(c) for c in potential]
    coeffs = np.array([float(c) for c in pot], dtype=float)
    mass_f = Fraction(mass)
    mass = float(mass_f)
    hbar = float(hbar)
    if len(coeffs) < 3 or coeffs[-1] <= 0 or (len(coeffs) - 1) % 2:
        raise ValueError("potential must be confining (even degree, positive "
                         "leading coefficient)")

    # crude upper estimate of the top level from the leading action
    ham_f = Hamiltonian1D.from_potential(mass_f, pot)
    _, vmin = potential_minimum(ham_f)
    target = 2.0 * math.pi * (count + 1.5) * hbar
    e_max = vmin + max(1.0, hbar)
    for _ in range(200):
        if leading_action(ham_f, e_max, rel_tol=1e-10) >= target:
            break
        e_max = vmin + (e_max - vmin) * 1.5
    threshold = vmin + 10.0 * (e_max - vmin)
    span = 1.0
    while (npoly.polyval(span, coeffs) < threshold
           or npoly.polyval(-span, coeffs) < threshold):
        span *= 1.25

    def solve(points: int) -> np.ndarray:
        x = np.linspace(-span, span, points)
        dx = x[1] - x[0]
        kin = hbar * hbar / (2.0 * mass * dx * dx)
        diag = npoly.polyval(x[1:-1], coeffs) + 2.0 * kin
        off = np.full(points - 3, -kin)
        return eigh_tridiagonal(diag, off, select="i",
                                select_range=(0, count - 1),
                                eigvals_only=True)

    points = 2001
    prev = solve(points)
    prev_extrap = None
    for _ in range(8):
        points = 2 * (points - 1) + 1
        cur = solve(points)
        extrap = (4.0 * cur - prev) / 3.0
        if prev_extrap is not None:
            rel = np.max(np.abs(extrap - prev_extrap) /
                         np.maximum(np.abs(extrap), 1e-12))
            if rel < rel_tol:
                return extrap
        prev, prev_extrap = cur, extrap
    raise RuntimeError("Schrodinger oracle did not converge")
