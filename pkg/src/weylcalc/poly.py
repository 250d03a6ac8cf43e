"""Sparse exact polynomials on the 2N phase-space coordinates (x_1..x_N, p_1..p_N).

Terms are stored as a dict mapping exponent tuples of length 2N to nonzero
GaussianRational coefficients.  Everything is immutable after construction and
all arithmetic is exact.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction

from .errors import CapacityError, DimensionMismatch
from .scalars import GaussianRational, as_scalar

MAX_TOTAL_DEGREE = 64


def _check_degree(exp):
    if sum(exp) > MAX_TOTAL_DEGREE:
        raise CapacityError(
            f"monomial total degree {sum(exp)} exceeds cap {MAX_TOTAL_DEGREE}")


class PhasePolynomial:
    """Polynomial in z = (x_1..x_N, p_1..p_N) over Gaussian rationals."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms=None):
        if n < 1:
            raise ValueError("dimension N must be positive")
        clean = {}
        if terms:
            for exp, coeff in terms.items():
                exp = tuple(exp)
                if len(exp) != 2 * n:
                    raise DimensionMismatch(
                        f"exponent tuple of length {len(exp)} on a {2*n}-coordinate space")
                if any(e < 0 for e in exp):
                    raise ValueError("negative exponent")
                coeff = as_scalar(coeff)
                if coeff:
                    _check_degree(exp)
                    clean[exp] = coeff
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("PhasePolynomial is immutable")

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls, n: int) -> "PhasePolynomial":
        return cls(n)

    @classmethod
    def constant(cls, n: int, value) -> "PhasePolynomial":
        return cls(n, {(0,) * (2 * n): as_scalar(value)})

    @classmethod
    def one(cls, n: int) -> "PhasePolynomial":
        return cls.constant(n, 1)

    @classmethod
    def coordinate(cls, n: int, index: int) -> "PhasePolynomial":
        """The coordinate z^index with index in 1..2N (x block first)."""
        if not 1 <= index <= 2 * n:
            raise DimensionMismatch(f"coordinate index {index} out of 1..{2*n}")
        exp = [0] * (2 * n)
        exp[index - 1] = 1
        return cls(n, {tuple(exp): as_scalar(1)})

    @classmethod
    def x(cls, n: int, j: int = 1) -> "PhasePolynomial":
        return cls.coordinate(n, j)

    @classmethod
    def p(cls, n: int, j: int = 1) -> "PhasePolynomial":
        return cls.coordinate(n, n + j)

    # -- ring operations --------------------------------------------------

    def _require_same_space(self, other: "PhasePolynomial"):
        if self.n != other.n:
            raise DimensionMismatch(f"N={self.n} vs N={other.n}")

    def __add__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            other = PhasePolynomial.constant(self.n, other)
        if not isinstance(other, PhasePolynomial):
            return NotImplemented
        self._require_same_space(other)
        terms = dict(self.terms)
        for exp, c in other.terms.items():
            s = terms.get(exp)
            s = c if s is None else s + c
            if s:
                terms[exp] = s
            else:
                terms.pop(exp, None)
        out = PhasePolynomial.__new__(PhasePolynomial)
        object.__setattr__(out, "n", self.n)
        object.__setattr__(out, "terms", terms)
        return out

    __radd__ = __add__

    def __neg__(self):
        out = PhasePolynomial.__new__(PhasePolynomial)
        object.__setattr__(out, "n", self.n)
        object.__setattr__(out, "terms", {e: -c for e, c in self.terms.items()})
        return out

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            other = PhasePolynomial.constant(self.n, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            c = as_scalar(other)
            if not c:
                return PhasePolynomial.zero(self.n)
            out = PhasePolynomial.__new__(PhasePolynomial)
            object.__setattr__(out, "n", self.n)
            object.__setattr__(out, "terms", {e: v * c for e, v in self.terms.items()})
            return out
        if not isinstance(other, PhasePolynomial):
            return NotImplemented
        self._require_same_space(other)
        terms: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exp = tuple(a + b for a, b in zip(e1, e2))
                c = c1 * c2
                s = terms.get(exp)
                s = c if s is None else s + c
                if s:
                    terms[exp] = s
                else:
                    terms.pop(exp, None)
        for exp in terms:
            _check_degree(exp)
        out = PhasePolynomial.__new__(PhasePolynomial)
        object.__setattr__(out, "n", self.n)
        object.__setattr__(out, "terms", terms)
        return out

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("only non-negative integer powers")
        result = PhasePolynomial.one(self.n)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    # -- calculus ---------------------------------------------------------

    def diff(self, index0: int) -> "PhasePolynomial":
        """Partial derivative with respect to coordinate index0 (0-based)."""
        terms = {}
        for exp, c in self.terms.items():
            e = exp[index0]
            if e == 0:
                continue
            new = list(exp)
            new[index0] = e - 1
            key = tuple(new)
            add = c * e
            s = terms.get(key)
            s = add if s is None else s + add
            if s:
                terms[key] = s
            else:
                terms.pop(key, None)
        out = PhasePolynomial.__new__(PhasePolynomial)
        object.__setattr__(out, "n", self.n)
        object.__setattr__(out, "terms", terms)
        return out

    def partial_derivative(self, mu: int) -> "PhasePolynomial":
        """Partial derivative with 1-based coordinate index mu in 1..2N."""
        if not 1 <= mu <= 2 * self.n:
            raise DimensionMismatch(f"coordinate index {mu} out of 1..{2*self.n}")
        return self.diff(mu - 1)

    def diff_multi(self, indices0) -> "PhasePolynomial":
        out = self
        for i in indices0:
            if not out.terms:
                break
            out = out.diff(i)
        return out

    # -- queries ------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def total_degree(self) -> int:
        """Degree of the zero polynomial is -1 by convention."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def evaluate(self, point) -> GaussianRational:
        """Evaluate at a rational phase point (sequence of 2N Fractions)."""
        point = [Fraction(v) if not isinstance(v, Fraction) else v for v in point]
        if len(point) != 2 * self.n:
            raise DimensionMismatch("evaluation point has wrong length")
        total = as_scalar(0)
        for exp, c in self.terms.items():
            v = Fraction(1)
            for coord, e in zip(point, exp):
                if e:
                    v *= coord ** e
            total = total + c * v
        return total

    def is_real(self) -> bool:
        return all(c.is_real for c in self.terms.values())

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            other = PhasePolynomial.constant(self.n, other)
        if not isinstance(other, PhasePolynomial):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    # -- formatting / serialization ----------------------------------

    def coordinate_names(self):
        if self.n == 1:
            return ["x", "p"]
        return [f"x{j}" for j in range(1, self.n + 1)] + \
               [f"p{j}" for j in range(1, self.n + 1)]

    def __str__(self):
        if not self.terms:
            return "0"
        names = self.coordinate_names()
        parts = []
        for exp in sorted(self.terms, key=lambda e: (sum(e), e)):
            c = self.terms[exp]
            factors = []
            for name, e in zip(names, exp):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            body = "*".join(factors)
            cs = str(c)
            if body:
                parts.append(f"{cs}*{body}" if cs != "1" else body)
            else:
                parts.append(cs)
        return " + ".join(parts)

    def __repr__(self):
        return f"<PhasePolynomial N={self.n}: {self}>"

    def to_json_dict(self) -> dict:
        items = []
        for exp in sorted(self.terms, key=lambda e: (sum(e), e)):
            c = self.terms[exp]
            items.append({"exp": list(exp), "re": str(c.re), "im": str(c.im)})
        return {"N": self.n, "terms": items}

    @classmethod
    def from_json_dict(cls, data: dict) -> "PhasePolynomial":
        n = int(data["N"])
        terms = {}
        for item in data["terms"]:
            exp = tuple(int(e) for e in item["exp"])
            coeff = GaussianRational(Fraction(item.get("re", "0")),
                                     Fraction(item.get("im", "0")))
            if coeff:
                terms[exp] = terms.get(exp, as_scalar(0)) + coeff
        return cls(n, terms)

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())

    @classmethod
    def from_json(cls, text: str) -> "PhasePolynomial":
        return cls.from_json_dict(json.loads(text))


# ---------------------------------------------------------------------------
# Text grammar: variables x1..xN / p1..pN (x, p for N=1), rational literals
# "a/b", operators + - * ^ and parentheses.
# ---------------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(\d+/\d+|\d+|[xp]\d*|[-+*^()])")


def _tokenize(text: str):
    text = text.strip()
    pos = 0
    tokens = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ValueError(f"cannot tokenize symbol text at: {text[pos:]!r}")
        tokens.append(m.group(1))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, tokens, n):
        self.tokens = tokens
        self.pos = 0
        self.n = n

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self):
        tok = self.peek()
        self.pos += 1
        return tok

    def parse_expr(self):
        value = self.parse_term()
        while self.peek() in ("+", "-"):
            op = self.take()
            rhs = self.parse_term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def parse_term(self):
        value = self.parse_factor()
        while self.peek() == "*":
            self.take()
            value = value * self.parse_factor()
        return value

    def parse_factor(self):
        sign = 1
        while self.peek() == "-":
            self.take()
            sign = -sign
        atom = self.parse_atom()
        if self.peek() == "^":
            self.take()
            expo = self.take()
            if expo is None or not expo.isdigit():
                raise ValueError("exponent must be a non-negative integer")
            atom = atom ** int(expo)
        return atom * sign

    def parse_atom(self):
        tok = self.take()
        if tok is None:
            raise ValueError("unexpected end of symbol text")
        if tok == "(":
            value = self.parse_expr()
            if self.take() != ")":
                raise ValueError("missing closing parenthesis")
            return value
        if tok[0].isdigit():
            return PhasePolynomial.constant(self.n, Fraction(tok))
        if tok[0] in "xp":
            idx = 1 if len(tok) == 1 else int(tok[1:])
            if len(tok) == 1 and self.n != 1:
                raise ValueError("bare x/p aliases are only valid when N=1")
            if not 1 <= idx <= self.n:
                raise DimensionMismatch(f"variable {tok} out of range for N={self.n}")
            base = idx if tok[0] == "x" else self.n + idx
            return PhasePolynomial.coordinate(self.n, base)
        raise ValueError(f"unexpected token {tok!r}")


def _infer_dimension(tokens) -> int:
    n = 1
    for tok in tokens:
        if tok and tok[0] in "xp" and len(tok) > 1 and tok[1:].isdigit():
            n = max(n, int(tok[1:]))
    return n


def parse_symbol(text: str, n: int | None = None) -> PhasePolynomial:
    """Parse a symbol like "1/2*x^2 + 1/2*p^2" into a PhasePolynomial."""
    tokens = _tokenize(text)
    if n is None:
        n = _infer_dimension(tokens)
    parser = _Parser(tokens, n)
    value = parser.parse_expr()
    if parser.peek() is not None:
        raise ValueError(f"unexpected token {parser.peek()!r}")
    if isinstance(value, PhasePolynomial):
        return value
    return PhasePolynomial.constant(n, value)
