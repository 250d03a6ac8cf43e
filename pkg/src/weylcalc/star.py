"""Star products: the binary Moyal product, its generic-tensor form, the
standard-order product, and the n-fold product as a sum over labeled graphs.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from .contraction import contract
from .errors import DimensionMismatch
from .poly import PhasePolynomial
from .scalars import half_i_power
from .series import DEFAULT_TRUNCATION_ORDER, HbarSeries, check_order
from .tensors import QuantizationTensor, bracket_k, moyal_tensor, standard_order_tensor


@dataclass(frozen=True)
class StarConfig:
    """Tensor and truncation order shared by the product routines."""

    tensor: QuantizationTensor
    truncation_order: int = DEFAULT_TRUNCATION_ORDER

    def __post_init__(self):
        check_order(self.truncation_order)

    @classmethod
    def moyal(cls, n: int, order: int = DEFAULT_TRUNCATION_ORDER) -> "StarConfig":
        return cls(moyal_tensor(n), order)

    @classmethod
    def standard(cls, n: int, order: int = DEFAULT_TRUNCATION_ORDER) -> "StarConfig":
        return cls(standard_order_tensor(n), order)


def _as_series(c, cfg: StarConfig) -> HbarSeries:
    if isinstance(c, HbarSeries):
        if c.order < cfg.truncation_order:
            raise DimensionMismatch(
                "input series is truncated below the requested order")
        return c.truncated(cfg.truncation_order)
    if isinstance(c, PhasePolynomial):
        return HbarSeries.from_polynomial(c, cfg.truncation_order)
    raise TypeError(f"cannot interpret {type(c).__name__} as a symbol")


def star_product(c, d, cfg: StarConfig) -> HbarSeries:
    """C * D = sum_k (1/k!) (i hbar / 2)^k {C, D}_k, truncated."""
    cs = _as_series(c, cfg)
    ds = _as_series(d, cfg)
    if cs.n != ds.n or cs.n != cfg.tensor.n:
        raise DimensionMismatch("star product operands must share N")
    order = cfg.truncation_order
    out = HbarSeries.zero(cs.n, order)
    for k in range(order + 1):
        lowest = (cs.min_grade() or 0) + (ds.min_grade() or 0) + k
        if lowest > order:
            break
        term = bracket_k(cs, ds, k, cfg.tensor)
        if term.is_zero:
            continue
        scalar = half_i_power(k) * Fraction(1, math.factorial(k))
        shifted = HbarSeries(cs.n, order,
                             [None] * k + [p * scalar for p in term.coeffs[: order + 1 - k]])
        out = out + shifted
    return out


def moyal_product(c, d, cfg: StarConfig | None = None, *, n: int | None = None,
                  order: int = DEFAULT_TRUNCATION_ORDER) -> HbarSeries:
    """Binary Moyal product; builds a Moyal config from the operands if none
    is supplied."""
    if cfg is None:
        if n is None:
            n = c.n
        cfg = StarConfig.moyal(n, order)
    if not cfg.tensor.is_antisymmetric:
        raise ValueError("moyal_product requires the antisymmetric tensor")
    return star_product(c, d, cfg)


def star_standard_order(c, d, *, n: int | None = None,
                        order: int = DEFAULT_TRUNCATION_ORDER) -> HbarSeries:
    """The standard-order star product (non-antisymmetric tensor)."""
    if n is None:
        n = c.n
    return star_product(c, d, StarConfig.standard(n, order))


def star_power(c, k: int, cfg: StarConfig) -> HbarSeries:
    """k-fold star power by left folding."""
    result = HbarSeries.one(cfg.tensor.n, cfg.truncation_order)
    for _ in range(k):
        result = star_product(result, c, cfg)
    return result


def star_fold(symbols, cfg: StarConfig) -> HbarSeries:
    """Left fold of the binary product over a list of symbols."""
    result = HbarSeries.one(cfg.tensor.n, cfg.truncation_order)
    for c in symbols:
        result = star_product(result, c, cfg)
    return result


def star_n_fold(symbols, cfg: StarConfig) -> HbarSeries:
    """n-fold star product as a sum over labeled graphs.

    For k contraction edges the sum runs over every map from the k edge
    labels to vertex pairs, including maps leaving vertices isolated; each
    graph contributes (1/k!) (i hbar/2)^k times its contraction.
    """
    n_args = len(symbols)
    order = cfg.truncation_order
    nq = cfg.tensor.n
    series = [_as_series(c, cfg) for c in symbols]
    for s in series:
        if s.n != nq:
            raise DimensionMismatch("operand dimension mismatch")
    if n_args == 0:
        return HbarSeries.one(nq, order)

    base_grade = sum(s.min_grade() or 0 for s in series)
    out = HbarSeries.zero(nq, order)
    pairs = list(itertools.combinations(range(1, n_args + 1), 2))
    cache: dict = {}
    for k in range(order + 1 - base_grade):
        scalar = half_i_power(k) * Fraction(1, math.factorial(k))
        ksum = HbarSeries.zero(nq, order)
        nonzero = False
        kfact = math.factorial(k)
        # edge maps sharing a pair multiset contract identically; sum the
        # multisets weighted by how many of the k! label orders realize them
        for multiset in itertools.combinations_with_replacement(pairs, k):
            count = kfact
            for pair in set(multiset):
                count //= math.factorial(multiset.count(pair))
            lam = _contract_series(multiset, series, cfg, cache)
            if lam.is_zero:
                continue
            nonzero = True
            ksum = ksum + lam * count
        if nonzero:
            out = out + _shift_series(ksum * scalar, k)
    return out


def _contract_series(edge_map, series, cfg: StarConfig, cache: dict) -> HbarSeries:
    if not edge_map:
        prod = HbarSeries.one(cfg.tensor.n, cfg.truncation_order)
        for s in series:
            prod = prod * s
        return prod
    return contract(edge_map, series, cfg.tensor, cache)


def _shift_series(series: HbarSeries, k: int) -> HbarSeries:
    """Multiply by hbar^k (shift grades up, discarding overflow)."""
    if k == 0:
        return series
    return HbarSeries(series.n, series.order,
                      [None] * k + list(series.coeffs[: series.order + 1 - k]))

