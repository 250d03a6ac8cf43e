"""Closed forms for functions of quadratic symbols.

For A = z^T Q z / 2 only two connected graph families survive (open chains
and simple cycles of even length), their sign-sums are the Zag numbers, and
the whole expansion collapses to secant/tangent series in the formal
derivative operator acting on f.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import DimensionMismatch
from .funcalc import JetSeries
from .poly import PhasePolynomial
from .scalars import GaussianRational, i_power
from .series import check_order

MAX_ZAG_INDEX = 12


# ---------------------------------------------------------------------------
# Zag numbers by three routes
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def chain_sign_sums(k_max: int) -> tuple:
    """Signed sequence for the open-chain family via its recurrence.

    c_0 = 1 and c_k = -sum_j binom(2k, 2j+1) c_j c_{k-j-1}; alternating in
    sign with |c_k| the Zag numbers 1, 2, 16, 272, ...
    """
    if k_max > MAX_ZAG_INDEX:
        raise ValueError(f"zag index limited to {MAX_ZAG_INDEX}")
    seq = [1]
    for k in range(1, k_max + 1):
        total = 0
        for j in range(k):
            total += math.comb(2 * k, 2 * j + 1) * seq[j] * seq[k - j - 1]
        seq.append(-total)
    return tuple(seq)


def zag_numbers(k_max: int) -> list:
    """|c_k| for k = 0..k_max via the recurrence."""
    return [abs(c) for c in chain_sign_sums(k_max)]


def zag_via_tangent(k_max: int) -> list:
    """Zag numbers read off the Maclaurin series of tan = sin/cos."""
    order = 2 * k_max + 1
    sin = [Fraction(0)] * (order + 1)
    cos = [Fraction(0)] * (order + 1)
    for k in range(0, order + 1, 2):
        cos[k] = Fraction((-1) ** (k // 2), math.factorial(k))
        if k + 1 <= order:
            sin[k + 1] = Fraction((-1) ** (k // 2), math.factorial(k + 1))
    tan = [Fraction(0)] * (order + 1)
    for m in range(order + 1):
        acc = sin[m]
        for j in range(1, m + 1):
            acc -= cos[j] * tan[m - j]
        tan[m] = acc  # cos[0] == 1
    out = []
    for k in range(k_max + 1):
        val = tan[2 * k + 1] * math.factorial(2 * k + 1)
        if val.denominator != 1:
            raise ArithmeticError("tangent series produced a non-integer")
        out.append(abs(val.numerator))
    return out


@lru_cache(maxsize=None)
def bernoulli_numbers(m_max: int) -> tuple:
    """B_0..B_m_max by the standard recurrence (B_1 = -1/2)."""
    b = [Fraction(1)]
    for m in range(1, m_max + 1):
        acc = Fraction(0)
        for j in range(m):
            acc += math.comb(m + 1, j) * b[j]
        b.append(-acc / (m + 1))
    return tuple(b)


def zag_via_bernoulli(k_max: int) -> list:
    """Zag numbers from tangent-number form of the Bernoulli relation:
    |c_k| = 2^(2k+2) (2^(2k+2) - 1) |B_{2k+2}| / (2k+2)."""
    bern = bernoulli_numbers(2 * k_max + 2)
    out = []
    for k in range(k_max + 1):
        m = 2 * k + 2
        val = Fraction(2 ** m * (2 ** m - 1), m) * abs(bern[m])
        if val.denominator != 1:
            raise ArithmeticError("Bernoulli relation produced a non-integer")
        out.append(val.numerator)
    return out


def chain_sign(k: int) -> int:
    """Signed c for the consistently oriented chain with 2k edges."""
    return chain_sign_sums(k)[k]


def cycle_sign(k: int) -> int:
    """Signed c for the consistently oriented cycle with 2k edges:
    -2k times the chain value one step down."""
    if k < 1:
        raise ValueError("cycle family starts at k = 1")
    return -2 * k * chain_sign(k - 1)


# ---------------------------------------------------------------------------
# quadratic forms
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class QuadraticForm:
    """A = z^T Q z / 2 for a symmetric rational matrix Q on 2N coordinates."""

    n: int
    q: tuple

    def __post_init__(self):
        size = 2 * self.n
        q = tuple(tuple(Fraction(v) for v in row) for row in self.q)
        if len(q) != size or any(len(row) != size for row in q):
            raise DimensionMismatch(f"Q must be {size}x{size}")
        for i in range(size):
            for j in range(size):
                if q[i][j] != q[j][i]:
                    raise ValueError("Q must be symmetric")
        object.__setattr__(self, "q", q)

    @classmethod
    def from_matrix(cls, q) -> "QuadraticForm":
        size = len(q)
        if size % 2:
            raise DimensionMismatch("Q must act on an even number of coordinates")
        return cls(size // 2, tuple(tuple(row) for row in q))

    def symbol(self) -> PhasePolynomial:
        size = 2 * self.n
        terms: dict = {}
        for i in range(size):
            for j in range(size):
                if not self.q[i][j]:
                    continue
                exp = [0] * size
                exp[i] += 1
                exp[j] += 1
                key = tuple(exp)
                terms[key] = terms.get(key, Fraction(0)) + self.q[i][j] / 2
        return PhasePolynomial(self.n, {e: c for e, c in terms.items() if c})

    def omega_squared(self) -> Fraction:
        """det(Q); only this even power of the frequency enters any output."""
        size = 2 * self.n
        mat = [list(row) for row in self.q]
        det = Fraction(1)
        for col in range(size):
            pivot = None
            for row in range(col, size):
                if mat[row][col]:
                    pivot = row
                    break
            if pivot is None:
                return Fraction(0)
            if pivot != col:
                mat[col], mat[pivot] = mat[pivot], mat[col]
                det = -det
            det *= mat[col][col]
            inv = 1 / mat[col][col]
            for row in range(col + 1, size):
                factor = mat[row][col] * inv
                if factor:
                    for k in range(col, size):
                        mat[row][k] -= factor * mat[col][k]
        return det


def lambda_closed_forms(form: QuadraticForm, k: int):
    """(chain, cycle) contraction values for the 2k-edge families at N = 1.

    Chain orientation runs down the open path; the cycle is consistently
    oriented.  Closed forms: (-1)^k w^{2k} 2A and (-1)^k w^{2k} 2 with
    w^2 = det Q.
    """
    if form.n != 1:
        raise DimensionMismatch("closed forms are one-dimensional")
    if k < 0:
        raise ValueError("family index must be non-negative")
    w2k = form.omega_squared() ** k
    sign = Fraction((-1) ** k)
    chain = form.symbol() * (2 * sign * w2k)
    cycle = PhasePolynomial.constant(1, 2 * sign * w2k)
    return chain, cycle


def chain_graph_edges(k: int):
    """Directed edges of the consistently oriented 2k-edge open chain."""
    return [(i, i + 1) for i in range(1, 2 * k + 1)]


def cycle_graph_edges(k: int):
    """Directed edges of the consistently oriented 2k-edge cycle."""
    edges = [(i, i + 1) for i in range(1, 2 * k)]
    edges.append((2 * k, 1))
    return edges


# ---------------------------------------------------------------------------
# closed-form expansions
# ---------------------------------------------------------------------------

def _sec_series(m_max: int) -> list:
    """sec u = sum s_m u^{2m}, exact Fractions."""
    cos = [Fraction((-1) ** m, math.factorial(2 * m)) for m in range(m_max + 1)]
    sec = [Fraction(0)] * (m_max + 1)
    sec[0] = Fraction(1)
    for m in range(1, m_max + 1):
        acc = Fraction(0)
        for j in range(1, m + 1):
            acc -= cos[j] * sec[m - j]
        sec[m] = acc
    return sec


def quadratic_closed_symbol(form: QuadraticForm, order: int) -> JetSeries:
    """JetSeries of f(op(A)) for quadratic A from the secant/tangent form.

    Expands sec(i hbar w D / 2) * exp[(2A / (i hbar w)) tan(i hbar w D / 2)
    - A D] with u^2 = -(hbar w / 2)^2 D^2 tracked as an (hbar-power, D-power)
    bigraded object; all coefficients stay rational in det Q.
    """
    check_order(order)
    if form.n != 1:
        raise DimensionMismatch("the closed form is one-dimensional")
    n = form.n
    a = form.symbol()
    w2 = form.omega_squared()
    u2 = -w2 / 4  # scalar of u^2 relative to hbar^2 D^2
    zag = zag_numbers(order // 2 + 1)
    sec = _sec_series(order // 2 + 1)

    # sec(u): cells (2m, 2m)
    sec_cells: dict = {}
    for m in range(order // 2 + 1):
        if 2 * m > order:
            break
        coeff = sec[m] * u2 ** m
        if coeff:
            sec_cells[(2 * m, 2 * m)] = PhasePolynomial.constant(n, coeff)

    # X = A * D * sum_{k>=1} zag_k u^{2k} / (2k+1)!: cells (2k, 2k+1)
    x_cells: dict = {}
    for k in range(1, order // 2 + 1):
        if 2 * k > order:
            break
        coeff = Fraction(zag[k], math.factorial(2 * k + 1)) * u2 ** k
        if coeff:
            x_cells[(2 * k, 2 * k + 1)] = a * coeff

    exp_cells = {(0, 0): PhasePolynomial.one(n)}
    power = {(0, 0): PhasePolynomial.one(n)}
    m = 1
    while power and m <= order:
        power = _cells_mul(power, x_cells, order, n)
        if not power:
            break
        exp_cells = _cells_add(exp_cells,
                               {key: p * Fraction(1, math.factorial(m))
                                for key, p in power.items()})
        m += 1

    cells = _cells_mul(sec_cells, exp_cells, order, n)
    return JetSeries(n, order, cells)


def _cells_mul(a: dict, b: dict, order: int, n: int) -> dict:
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


def _cells_add(a: dict, b: dict) -> dict:
    out = dict(a)
    for key, p in b.items():
        cur = out.get(key)
        out[key] = p if cur is None else cur + p
    return {k: p for k, p in out.items() if not p.is_zero}


def time_evolution_cells(form: QuadraticForm, t_order: int) -> dict:
    """Expansion cells of the time-evolution symbol over its classical phase.

    The closed form sec(t w / 2) exp[(2A / (i hbar w)) tan(t w / 2)] carries
    the classical factor exp(-i t A / hbar), which is exactly the k = 0 term
    of the tangent series.  Dividing it out cancels that term and leaves
    {(t power, hbar power): PhasePolynomial} with non-positive hbar powers,
    directly comparable cell by cell with the graph expansion of
    f(y) = exp(eps y) under eps = -i t / hbar.
    """
    if form.n != 1:
        raise DimensionMismatch("the closed form is one-dimensional")
    n = form.n
    a = form.symbol()
    w2 = form.omega_squared()
    sec = _sec_series(t_order // 2 + 1)
    zag = zag_numbers(t_order // 2 + 1)

    # sec(t w / 2): cells (2m, 0)
    cells: dict = {}
    for m in range(t_order // 2 + 1):
        if 2 * m > t_order:
            break
        coeff = sec[m] * (w2 / 4) ** m
        if coeff:
            cells[(2 * m, 0)] = PhasePolynomial.constant(n, coeff)

    # (2A/(i hbar w)) tan(t w / 2) + i t A / hbar: the k = 0 tangent term is
    # the classical phase and cancels; cells (2k+1, -1) for k >= 1
    x_cells: dict = {}
    for k in range(1, t_order // 2 + 1):
        tp = 2 * k + 1
        if tp > t_order:
            break
        scalar = GaussianRational(0, -1) * (Fraction(zag[k], math.factorial(tp))
                                            * (w2 / 4) ** k)
        x_cells[(tp, -1)] = a * scalar

    exp_cells = {(0, 0): PhasePolynomial.one(n)}
    power = {(0, 0): PhasePolynomial.one(n)}
    m = 1
    while power and m <= t_order:
        power = _tcells_mul(power, x_cells, t_order, n)
        if not power:
            break
        exp_cells = _tcells_add(exp_cells,
                                {key: p * Fraction(1, math.factorial(m))
                                 for key, p in power.items()})
        m += 1
    return _tcells_mul(cells, exp_cells, t_order, n)


def _tcells_mul(a: dict, b: dict, t_order: int, n: int) -> dict:
    out: dict = {}
    for (t1, h1), p1 in a.items():
        for (t2, h2), p2 in b.items():
            if t1 + t2 > t_order:
                continue
            key = (t1 + t2, h1 + h2)
            prod = p1 * p2
            cur = out.get(key)
            out[key] = prod if cur is None else cur + prod
    return {k: p for k, p in out.items() if not p.is_zero}


def _tcells_add(a: dict, b: dict) -> dict:
    out = dict(a)
    for key, p in b.items():
        cur = out.get(key)
        out[key] = p if cur is None else cur + p
    return {k: p for k, p in out.items() if not p.is_zero}


def jet_series_as_time_cells(js: JetSeries) -> dict:
    """Map graph cells (e, v) to time-evolution cells under eps = -i t / hbar.

    hbar^e eps^v = (-i)^v t^v hbar^(e-v), so cell (e, v) lands on
    (t power v, hbar power e - v) scaled by (-i)^v.
    """
    out: dict = {}
    for (e, v), q in js.terms.items():
        scalar = i_power(-v)  # (-i)^v
        key = (v, e - v)
        add = q * scalar
        cur = out.get(key)
        out[key] = add if cur is None else cur + add
    return {k: p for k, p in out.items() if not p.is_zero}


def parse_q_matrix(text: str):
    """Parse a matrix like "1,0;0,1" into rows of Fractions."""
    rows = []
    for row in text.strip().split(";"):
        rows.append([Fraction(v.strip()) for v in row.split(",")])
    return rows
