"""Formal differential ring for kinetic-plus-potential Hamiltonians.

Monomials in p, u = 1/m and the potential derivatives V0, V1, V2, ... with
the derivation rules d/dx V_k = V_{k+1}, d/dx p = d/dx u = 0, d/dp p = 1.
Lets the semiclassical coefficients be extracted symbolically, with the mass
and every potential derivative kept formal.
"""

from __future__ import annotations

from fractions import Fraction

MAX_POTENTIAL_DERIVATIVE = 10
# exponent tuple layout: (p, u, V0, V1, ..., V_MAX)
_WIDTH = 2 + MAX_POTENTIAL_DERIVATIVE + 1


class SplitSymbol:
    """Sparse polynomial over the (p, u, V_k) alphabet with exact coefficients."""

    __slots__ = ("terms",)
    n = 1  # one-dimensional phase space

    def __init__(self, terms=None):
        clean = {}
        for exp, c in (terms or {}).items():
            c = Fraction(c)
            if c:
                clean[tuple(exp)] = c
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("SplitSymbol is immutable")

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls) -> "SplitSymbol":
        return cls()

    @classmethod
    def constant(cls, c) -> "SplitSymbol":
        return cls({(0,) * _WIDTH: Fraction(c)})

    @classmethod
    def var_p(cls) -> "SplitSymbol":
        exp = [0] * _WIDTH
        exp[0] = 1
        return cls({tuple(exp): Fraction(1)})

    @classmethod
    def var_u(cls) -> "SplitSymbol":
        exp = [0] * _WIDTH
        exp[1] = 1
        return cls({tuple(exp): Fraction(1)})

    @classmethod
    def potential_derivative(cls, k: int) -> "SplitSymbol":
        if not 0 <= k <= MAX_POTENTIAL_DERIVATIVE:
            raise ValueError("potential derivative order out of range")
        exp = [0] * _WIDTH
        exp[2 + k] = 1
        return cls({tuple(exp): Fraction(1)})

    @classmethod
    def hamiltonian(cls) -> "SplitSymbol":
        """H = u p^2 / 2 + V0."""
        exp_kin = [0] * _WIDTH
        exp_kin[0] = 2
        exp_kin[1] = 1
        exp_pot = [0] * _WIDTH
        exp_pot[2] = 1
        return cls({tuple(exp_kin): Fraction(1, 2), tuple(exp_pot): Fraction(1)})

    # -- ring operations ----------------------------------------------------

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = SplitSymbol.constant(other)
        if not isinstance(other, SplitSymbol):
            return NotImplemented
        out = dict(self.terms)
        for exp, c in other.terms.items():
            s = out.get(exp, Fraction(0)) + c
            if s:
                out[exp] = s
            else:
                out.pop(exp, None)
        return SplitSymbol(out)

    __radd__ = __add__

    def __neg__(self):
        return SplitSymbol({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = SplitSymbol.constant(other)
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return SplitSymbol({e: c * other for e, c in self.terms.items()})
        if not isinstance(other, SplitSymbol):
            return NotImplemented
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exp = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(exp, Fraction(0)) + c1 * c2
                if s:
                    out[exp] = s
                else:
                    out.pop(exp, None)
        return SplitSymbol(out)

    __rmul__ = __mul__

    # -- derivation ---------------------------------------------------------

    def diff(self, index0: int) -> "SplitSymbol":
        """Phase-space derivative: index 0 is x, index 1 is p."""
        out: dict = {}
        if index0 == 1:
            for exp, c in self.terms.items():
                k = exp[0]
                if k:
                    new = list(exp)
                    new[0] = k - 1
                    key = tuple(new)
                    s = out.get(key, Fraction(0)) + c * k
                    if s:
                        out[key] = s
                    else:
                        out.pop(key, None)
            return SplitSymbol(out)
        if index0 != 0:
            raise ValueError("split ring lives on a 1-dimensional phase space")
        for exp, c in self.terms.items():
            for k in range(MAX_POTENTIAL_DERIVATIVE + 1):
                e = exp[2 + k]
                if not e:
                    continue
                if k == MAX_POTENTIAL_DERIVATIVE:
                    raise ValueError("potential derivative order overflow")
                new = list(exp)
                new[2 + k] = e - 1
                new[2 + k + 1] += 1
                key = tuple(new)
                s = out.get(key, Fraction(0)) + c * e
                if s:
                    out[key] = s
                else:
                    out.pop(key, None)
        return SplitSymbol(out)

    def diff_multi(self, indices0) -> "SplitSymbol":
        out = self
        for i in indices0:
            if not out.terms:
                break
            out = out.diff(i)
        return out

    # -- queries ----------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = SplitSymbol.constant(other)
        if not isinstance(other, SplitSymbol):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def p_free(self) -> bool:
        return all(exp[0] == 0 for exp in self.terms)

    def monomial_key(self, exp) -> str:
        names = ["p", "u"] + [f"V{k}" for k in range(MAX_POTENTIAL_DERIVATIVE + 1)]
        parts = []
        for name, e in zip(names, exp):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "*".join(parts) or "1"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for exp in sorted(self.terms):
            parts.append(f"{self.terms[exp]}*{self.monomial_key(exp)}")
        return " + ".join(parts)

    def __repr__(self):
        return f"<SplitSymbol {self}>"
