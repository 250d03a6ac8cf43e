"""Quantization tensors and the bracket contractions they induce.

A tensor J is stored sparsely as a list of (mu, nu, weight) triples with
0-based coordinate indices.  The Moyal/Weyl tensor is the standard Poisson
block matrix [[0, I], [-I, 0]]; standard-order quantization uses the
non-antisymmetric [[0, 0], [I, 0]].

bracket_k works on anything with .diff(index) and ring operations, so the
same contraction code serves polynomials, hbar series, resolvent symbols and
the formal kinetic-plus-potential ring.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction

from .errors import DimensionMismatch
from .scalars import half_i_power


class QuantizationTensor:
    """Sparse 2N x 2N contraction tensor J^{mu nu}."""

    __slots__ = ("n", "name", "entries")

    def __init__(self, n: int, entries, name: str = "custom"):
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "name", name)
        object.__setattr__(self, "entries",
                           tuple((int(mu), int(nu), Fraction(w)) for mu, nu, w in entries))

    def __setattr__(self, name, value):
        raise AttributeError("QuantizationTensor is immutable")

    def matrix(self):
        size = 2 * self.n
        m = [[Fraction(0)] * size for _ in range(size)]
        for mu, nu, w in self.entries:
            m[mu][nu] += w
        return m

    @property
    def is_antisymmetric(self) -> bool:
        m = self.matrix()
        size = 2 * self.n
        return all(m[i][j] == -m[j][i] for i in range(size) for j in range(size))

    def __repr__(self):
        return f"<QuantizationTensor {self.name} N={self.n}>"


def moyal_tensor(n: int) -> QuantizationTensor:
    """The Poisson tensor [[0, I_N], [-I_N, 0]] of Weyl quantization."""
    entries = []
    for j in range(n):
        entries.append((j, n + j, Fraction(1)))
        entries.append((n + j, j, Fraction(-1)))
    return QuantizationTensor(n, entries, name="moyal")


def standard_order_tensor(n: int) -> QuantizationTensor:
    """The non-antisymmetric tensor [[0, 0], [I_N, 0]] of standard ordering."""
    entries = [(n + j, j, Fraction(1)) for j in range(n)]
    return QuantizationTensor(n, entries, name="standard")


def tensor_by_name(name: str, n: int) -> QuantizationTensor:
    if name == "moyal":
        return moyal_tensor(n)
    if name == "standard":
        return standard_order_tensor(n)
    raise ValueError(f"unknown tensor {name!r} (expected moyal or standard)")


def _require_matching(c, d, tensor):
    for sym in (c, d):
        n = getattr(sym, "n", None)
        if n is not None and n != tensor.n:
            raise DimensionMismatch(
                f"symbol dimension N={n} does not match tensor N={tensor.n}")


def poisson_bracket(c, d, tensor: QuantizationTensor):
    """{C, D} = C_{,mu} J^{mu nu} D_{,nu}."""
    _require_matching(c, d, tensor)
    total = None
    for mu, nu, w in tensor.entries:
        term = c.diff(mu) * d.diff(nu) * w
        total = term if total is None else total + term
    return total


def bracket_k(c, d, k: int, tensor: QuantizationTensor):
    """{C, D}_k: k-fold contraction of derivatives of C and D against J.

    k = 0 is the plain product, k = 1 the bracket above.  Ordered index
    tuples are grouped by multiset (mixed partials commute) with the
    multinomial count as weight.
    """
    if k < 0:
        raise ValueError("bracket order k must be non-negative")
    _require_matching(c, d, tensor)
    if k == 0:
        return c * d
    total = None
    kfact = math.factorial(k)
    for combo in itertools.combinations_with_replacement(range(len(tensor.entries)), k):
        mult = kfact
        for g in set(combo):
            mult //= math.factorial(combo.count(g))
        weight = Fraction(mult)
        mus = []
        nus = []
        for idx in combo:
            mu, nu, w = tensor.entries[idx]
            mus.append(mu)
            nus.append(nu)
            weight *= w
        left = c.diff_multi(tuple(sorted(mus)))
        if not left:
            continue
        right = d.diff_multi(tuple(sorted(nus)))
        if not right:
            continue
        term = left * right * weight
        total = term if total is None else total + term
    if total is None:
        total = (c * 0) * d  # zero of the right result type
    return total


def star_scalar(k: int):
    """(1/k!) * (i/2)**k, the scalar in front of the k-th bracket."""
    return half_i_power(k) * Fraction(1, math.factorial(k))
