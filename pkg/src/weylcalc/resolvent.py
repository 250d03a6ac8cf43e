"""Rational symbols N(z, a) / (a - A(z))^m for resolvent computations.

The numerator is a polynomial in the phase coordinates whose coefficients are
polynomials in the formal spectral parameter a, stored as a map from a-power
to PhasePolynomial.  Addition, multiplication and phase-space derivatives are
closed on this representation; equality is decided by cross-multiplication.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import DimensionMismatch
from .poly import PhasePolynomial
from .scalars import GaussianRational


def _clean(num: dict) -> dict:
    return {j: p for j, p in num.items() if not p.is_zero}


class ResolventSymbol:
    """N(z, a) / (a - A(z))^m over a fixed base symbol A."""

    __slots__ = ("base", "numerator", "pole_order")

    def __init__(self, base: PhasePolynomial, numerator: dict, pole_order: int):
        if pole_order < 0:
            raise ValueError("pole order must be non-negative")
        num = {}
        for j, p in numerator.items():
            if p.n != base.n:
                raise DimensionMismatch("numerator dimension mismatch")
            if not p.is_zero:
                num[int(j)] = p
        object.__setattr__(self, "base", base)
        object.__setattr__(self, "numerator", num)
        object.__setattr__(self, "pole_order", pole_order)

    def __setattr__(self, name, value):
        raise AttributeError("ResolventSymbol is immutable")

    # -- constructors ---------------------------------------------------

    @classmethod
    def from_polynomial(cls, base: PhasePolynomial, p: PhasePolynomial) -> "ResolventSymbol":
        return cls(base, {0: p}, 0)

    @classmethod
    def constant(cls, base: PhasePolynomial, value) -> "ResolventSymbol":
        return cls.from_polynomial(base, PhasePolynomial.constant(base.n, value))

    @classmethod
    def a_minus_base(cls, base: PhasePolynomial) -> "ResolventSymbol":
        """The polynomial symbol (a - A)."""
        return cls(base, {1: PhasePolynomial.one(base.n), 0: -base}, 0)

    @classmethod
    def simple_pole(cls, base: PhasePolynomial, numerator: PhasePolynomial,
                    pole_order: int) -> "ResolventSymbol":
        """numerator / (a - A)^pole_order with an a-free numerator."""
        return cls(base, {0: numerator}, pole_order)

    # -- helpers ----------------------------------------------------------

    def _require_same_base(self, other: "ResolventSymbol"):
        if self.base != other.base:
            raise DimensionMismatch("resolvent symbols have different bases")

    def _num_mul(self, other_num: dict) -> dict:
        out: dict = {}
        for j1, p1 in self.numerator.items():
            for j2, p2 in other_num.items():
                j = j1 + j2
                prod = p1 * p2
                if j in out:
                    out[j] = out[j] + prod
                else:
                    out[j] = prod
        return _clean(out)

    @staticmethod
    def _num_add(a: dict, b: dict) -> dict:
        out = dict(a)
        for j, p in b.items():
            out[j] = out[j] + p if j in out else p
        return _clean(out)

    def _num_times_a_minus_base(self, num: dict, power: int) -> dict:
        """Multiply an a-power map by (a - A)^power."""
        cur = dict(num)
        for _ in range(power):
            nxt: dict = {}
            for j, p in cur.items():
                nxt[j + 1] = nxt.get(j + 1, PhasePolynomial.zero(self.base.n)) + p
                nxt[j] = nxt.get(j, PhasePolynomial.zero(self.base.n)) - p * self.base
            cur = _clean(nxt)
        return cur

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            other = ResolventSymbol.constant(self.base, other)
        if not isinstance(other, ResolventSymbol):
            return NotImplemented
        self._require_same_base(other)
        m = max(self.pole_order, other.pole_order)
        left = self._num_times_a_minus_base(self.numerator, m - self.pole_order)
        right = self._num_times_a_minus_base(other.numerator, m - other.pole_order)
        return ResolventSymbol(self.base, self._num_add(left, right), m)

    __radd__ = __add__

    def __neg__(self):
        return ResolventSymbol(self.base, {j: -p for j, p in self.numerator.items()},
                               self.pole_order)

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            other = ResolventSymbol.constant(self.base, other)
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            return ResolventSymbol(self.base,
                                   {j: p * other for j, p in self.numerator.items()},
                                   self.pole_order)
        if not isinstance(other, ResolventSymbol):
            return NotImplemented
        self._require_same_base(other)
        return ResolventSymbol(self.base, self._num_mul(other.numerator),
                               self.pole_order + other.pole_order)

    __rmul__ = __mul__

    # -- calculus ---------------------------------------------------------

    def diff(self, index0: int) -> "ResolventSymbol":
        """d/dz^index0 via the quotient rule; raises the pole order by one."""
        if self.pole_order == 0:
            return ResolventSymbol(
                self.base, {j: p.diff(index0) for j, p in self.numerator.items()}, 0)
        da = self.base.diff(index0)
        out: dict = {}
        for j, p in self.numerator.items():
            dp = p.diff(index0)
            if not dp.is_zero:
                # (dN) (a - A) part of the common-denominator numerator
                out[j + 1] = out.get(j + 1, PhasePolynomial.zero(self.base.n)) + dp
                out[j] = out.get(j, PhasePolynomial.zero(self.base.n)) - dp * self.base
            if self.pole_order and not da.is_zero:
                out[j] = out.get(j, PhasePolynomial.zero(self.base.n)) \
                    + p * da * self.pole_order
        return ResolventSymbol(self.base, _clean(out), self.pole_order + 1)

    def diff_multi(self, indices0) -> "ResolventSymbol":
        out = self
        for i in indices0:
            out = out.diff(i)
        return out

    # -- predicates ----------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.numerator

    def __bool__(self):
        return bool(self.numerator)

    def equals(self, other: "ResolventSymbol") -> bool:
        """Exact equality by cross-multiplication."""
        if isinstance(other, (int, Fraction, GaussianRational)):
            other = ResolventSymbol.constant(self.base, other)
        self._require_same_base(other)
        m = max(self.pole_order, other.pole_order)
        left = self._num_times_a_minus_base(self.numerator, m - self.pole_order)
        right = self._num_times_a_minus_base(other.numerator, m - other.pole_order)
        return left == right

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational, ResolventSymbol)):
            return self.equals(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.base, self.pole_order, frozenset(self.numerator)))

    # -- normalization --------------------------------------------------

    def _evaluate_numerator_at_base(self) -> PhasePolynomial:
        """Substitute a = A(z) into the numerator (remainder mod (a - A))."""
        total = PhasePolynomial.zero(self.base.n)
        for j, p in self.numerator.items():
            total = total + p * self.base ** j
        return total

    def reduced(self) -> "ResolventSymbol":
        """Cancel common (a - A) factors between numerator and denominator."""
        cur = self
        while cur.pole_order > 0 and cur.numerator:
            if not cur._evaluate_numerator_at_base().is_zero:
                break
            # exact synthetic division of the a-polynomial by (a - A)
            degrees = sorted(cur.numerator, reverse=True)
            quot: dict = {}
            carry = PhasePolynomial.zero(cur.base.n)
            top = degrees[0]
            for j in range(top, 0, -1):
                coeff = cur.numerator.get(j, PhasePolynomial.zero(cur.base.n)) + carry
                quot[j - 1] = coeff
                carry = coeff * cur.base
            cur = ResolventSymbol(cur.base, _clean(quot), cur.pole_order - 1)
        return cur

    def evaluate(self, point, a_value: Fraction):
        """Evaluate at a rational phase point and spectral value (off poles)."""
        a_value = Fraction(a_value)
        den = a_value - self.base.evaluate(point)
        if not den:
            raise ZeroDivisionError("evaluation point lies on the pole surface")
        num = GaussianRational(0)
        for j, p in self.numerator.items():
            num = num + p.evaluate(point) * (a_value ** j)
        return num / (den ** self.pole_order)

    def __repr__(self):
        num = " + ".join(f"a^{j}*({p})" for j, p in sorted(self.numerator.items()))
        return f"<ResolventSymbol ({num or '0'}) / (a-A)^{self.pole_order}>"
