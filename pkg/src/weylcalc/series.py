"""Truncated formal power series in hbar with PhasePolynomial coefficients.

Arithmetic silently discards every power above the truncation order, so the
ring axioms hold modulo truncation.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import CapacityError, DimensionMismatch
from .poly import PhasePolynomial
from .scalars import GaussianRational

MAX_TRUNCATION_ORDER = 8
DEFAULT_TRUNCATION_ORDER = 4


def check_order(order: int):
    if not 0 <= order <= MAX_TRUNCATION_ORDER:
        raise CapacityError(
            f"truncation order {order} outside 0..{MAX_TRUNCATION_ORDER}")


class HbarSeries:
    """sum_k hbar^k P_k truncated above truncation_order."""

    __slots__ = ("n", "order", "coeffs")

    def __init__(self, n: int, order: int, coeffs=None):
        check_order(order)
        padded = []
        coeffs = list(coeffs or [])
        if len(coeffs) > order + 1:
            coeffs = coeffs[: order + 1]
        for k in range(order + 1):
            if k < len(coeffs) and coeffs[k] is not None:
                c = coeffs[k]
                if c.n != n:
                    raise DimensionMismatch("coefficient dimension mismatch")
                padded.append(c)
            else:
                padded.append(PhasePolynomial.zero(n))
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", tuple(padded))

    def __setattr__(self, name, value):
        raise AttributeError("HbarSeries is immutable")

    # -- constructors -------------------------------------------------

    @classmethod
    def from_polynomial(cls, p: PhasePolynomial, order: int) -> "HbarSeries":
        return cls(p.n, order, [p])

    @classmethod
    def zero(cls, n: int, order: int) -> "HbarSeries":
        return cls(n, order)

    @classmethod
    def one(cls, n: int, order: int) -> "HbarSeries":
        return cls(n, order, [PhasePolynomial.one(n)])

    @classmethod
    def monomial(cls, p: PhasePolynomial, k: int, order: int) -> "HbarSeries":
        """hbar^k * p, truncated."""
        coeffs = [None] * k + [p]
        return cls(p.n, order, coeffs)

    # -- ring operations ----------------------------------------------

    def _coerce(self, other):
        if isinstance(other, PhasePolynomial):
            return HbarSeries.from_polynomial(other, self.order)
        if isinstance(other, (int, Fraction, GaussianRational)):
            return HbarSeries.from_polynomial(
                PhasePolynomial.constant(self.n, other), self.order)
        return other

    def __add__(self, other):
        other = self._coerce(other)
        if not isinstance(other, HbarSeries):
            return NotImplemented
        if self.n != other.n:
            raise DimensionMismatch("series dimension mismatch")
        order = min(self.order, other.order)
        return HbarSeries(self.n, order,
                          [self.coeffs[k] + other.coeffs[k] for k in range(order + 1)])

    __radd__ = __add__

    def __neg__(self):
        return HbarSeries(self.n, self.order, [-c for c in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            return HbarSeries(self.n, self.order, [c * other for c in self.coeffs])
        other = self._coerce(other)
        if not isinstance(other, HbarSeries):
            return NotImplemented
        if self.n != other.n:
            raise DimensionMismatch("series dimension mismatch")
        order = min(self.order, other.order)
        out = [PhasePolynomial.zero(self.n) for _ in range(order + 1)]
        for a, ca in enumerate(self.coeffs[: order + 1]):
            if ca.is_zero:
                continue
            for b in range(order + 1 - a):
                cb = other.coeffs[b]
                if cb.is_zero:
                    continue
                out[a + b] = out[a + b] + ca * cb
        return HbarSeries(self.n, order, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("only non-negative integer powers")
        result = HbarSeries.one(self.n, self.order)
        for _ in range(k):
            result = result * self
        return result

    # -- calculus and access -------------------------------------------

    def diff(self, index0: int) -> "HbarSeries":
        return HbarSeries(self.n, self.order, [c.diff(index0) for c in self.coeffs])

    def diff_multi(self, indices0) -> "HbarSeries":
        return HbarSeries(self.n, self.order,
                          [c.diff_multi(indices0) for c in self.coeffs])

    def coefficient(self, k: int) -> PhasePolynomial:
        if k > self.order:
            return PhasePolynomial.zero(self.n)
        return self.coeffs[k]

    @property
    def is_zero(self) -> bool:
        return all(c.is_zero for c in self.coeffs)

    def __bool__(self):
        return not self.is_zero

    def min_grade(self) -> int | None:
        for k, c in enumerate(self.coeffs):
            if not c.is_zero:
                return k
        return None

    def truncated(self, order: int) -> "HbarSeries":
        return HbarSeries(self.n, order, list(self.coeffs[: order + 1]))

    def evaluate(self, point):
        """Evaluate each hbar coefficient at a rational phase point."""
        return tuple(c.evaluate(point) for c in self.coeffs)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational, PhasePolynomial)):
            other = self._coerce(other)
        if not isinstance(other, HbarSeries):
            return NotImplemented
        return (self.n == other.n and self.order == other.order
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.n, self.order, self.coeffs))

    def __str__(self):
        parts = []
        for k, c in enumerate(self.coeffs):
            if c.is_zero:
                continue
            if k == 0:
                parts.append(str(c))
            else:
                parts.append(f"hbar^{k}*({c})")
        return " + ".join(parts) if parts else "0"

    def __repr__(self):
        return f"<HbarSeries order={self.order}: {self}>"

    def to_json_dict(self) -> dict:
        return {"N": self.n, "truncation_order": self.order,
                "coefficients": [c.to_json_dict() for c in self.coeffs]}

    @classmethod
    def from_json_dict(cls, data: dict) -> "HbarSeries":
        coeffs = [PhasePolynomial.from_json_dict(c) for c in data["coefficients"]]
        return cls(int(data["N"]), int(data["truncation_order"]), coeffs)
