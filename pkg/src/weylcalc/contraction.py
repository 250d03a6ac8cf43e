"""Evaluate the polynomial a graph induces on vertex symbols.

Every directed edge (s, t) contributes one tensor factor J^{mu nu} with
d/dz^mu applied at the source vertex and d/dz^nu at the target.  The sum over
all index assignments is organized edge by edge, merging assignments that
leave identical derivative multisets on every vertex, which keeps the state
count small for low-dimensional phase spaces.

Works on any symbol type with .diff(index), ring operators and truthiness:
polynomials, hbar series, resolvent symbols and the formal split ring.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import DimensionMismatch
from .tensors import QuantizationTensor, bracket_k


def _vertex_count(directed_edges, explicit):
    if explicit is not None:
        return explicit
    top = 0
    for s, t in directed_edges:
        top = max(top, s, t)
    return top


def contract(directed_edges, symbols, tensor: QuantizationTensor,
             derivative_cache: dict | None = None):
    """Contract the graph with the given directed edges against the tensor.

    symbols[i] sits on vertex i+1; the result is multilinear in them.  An
    optional cache maps (vertex index, derivative multiset) to the derived
    symbol and may be shared across contractions of the same assignment.
    """
    nv = _vertex_count(directed_edges, len(symbols))
    if nv == 0:
        raise ValueError("the empty graph has no contraction; its value is "
                         "the empty product and is handled by callers")
    for s, t in directed_edges:
        if not (1 <= s <= nv and 1 <= t <= nv):
            raise DimensionMismatch("edge endpoint outside the vertex range")
        if s == t:
            raise ValueError("self-edges are not allowed")
    for sym in symbols:
        n = getattr(sym, "n", None)
        if n is not None and n != tensor.n:
            raise DimensionMismatch("symbol dimension does not match tensor")

    if derivative_cache is None:
        derivative_cache = {}

    def derived(vertex_idx, multiset):
        # keyed by symbol identity so a shared cache works across graphs
        key = (id(symbols[vertex_idx]), multiset)
        hit = derivative_cache.get(key)
        if hit is None:
            hit = symbols[vertex_idx].diff_multi(multiset)
            derivative_cache[key] = hit
        return hit

    # states: per-vertex sorted index tuples -> accumulated rational weight
    states = {tuple(() for _ in range(nv)): Fraction(1)}
    for s, t in directed_edges:
        nxt: dict = {}
        for profile, weight in states.items():
            for mu, nu, w in tensor.entries:
                prof = list(profile)
                prof[s - 1] = tuple(sorted(prof[s - 1] + (mu,)))
                prof[t - 1] = tuple(sorted(prof[t - 1] + (nu,)))
                key = tuple(prof)
                nxt[key] = nxt.get(key, Fraction(0)) + weight * w
            # drop profiles whose source derivative already vanished
        states = {k: v for k, v in nxt.items() if v}
        if not states:
            break

    # when every vertex carries the same symbol, the product over vertices
    # only depends on the multiset of derivative profiles; merging states on
    # that key shares work across graphs through the common cache
    uniform = symbols and all(s is symbols[0] for s in symbols)
    if uniform:
        merged: dict = {}
        for profile, weight in states.items():
            key = tuple(sorted(profile))
            merged[key] = merged.get(key, Fraction(0)) + weight
        states = {k: v for k, v in merged.items() if v}

    total = None
    zero = None
    for profile, weight in states.items():
        if uniform:
            term = derivative_cache.get(("prod", id(symbols[0]), profile))
            if term is None:
                term = None
                dead = False
                for vertex_idx, multiset in enumerate(profile):
                    d = derived(vertex_idx, multiset)
                    if zero is None:
                        zero = d * 0
                    if not d:
                        dead = True
                        break
                    term = d if term is None else term * d
                if dead:
                    term = zero
                derivative_cache[("prod", id(symbols[0]), profile)] = term
            if zero is None:
                zero = term * 0
            if not term:
                continue
        else:
            term = None
            dead = False
            for vertex_idx, multiset in enumerate(profile):
                d = derived(vertex_idx, multiset)
                if zero is None:
                    zero = d * 0
                if not d:
                    dead = True
                    break
                term = d if term is None else term * d
            if dead:
                continue
        term = term * weight
        total = term if total is None else total + term
    if total is None:
        if zero is None:
            zero = symbols[0] * 0 if symbols else None
        total = zero
    return total


def contract_graph(graph, symbols, tensor: QuantizationTensor,
                   derivative_cache: dict | None = None):
    """Contract a LabeledGraph or UnlabeledGraph in its natural orientation."""
    return contract(graph.directed_edges(), symbols, tensor, derivative_cache)


def contract_uniform(graph, symbol, tensor: QuantizationTensor,
                     derivative_cache: dict | None = None):
    """Contract with the same symbol on every vertex."""
    nv = graph.vertices if hasattr(graph, "vertices") else graph
    return contract_graph(graph, [symbol] * nv, tensor, derivative_cache)


# ---------------------------------------------------------------------------
# verification helpers
# ---------------------------------------------------------------------------

@dataclass
class OrientationCheck:
    """Record of the single-edge-flip antisymmetry verification."""

    edges: tuple
    passed: bool
    flips: list = field(default_factory=list)


def reverse_edge_sign_check(directed_edges, symbols,
                            tensor: QuantizationTensor) -> OrientationCheck:
    """Verify that flipping any single edge negates the contraction.

    Only meaningful for antisymmetric tensors; each flip is evaluated from
    scratch on both orientations.
    """
    if not tensor.is_antisymmetric:
        raise ValueError("orientation check requires an antisymmetric tensor")
    edges = tuple(directed_edges)
    base = contract(edges, symbols, tensor)
    record = OrientationCheck(edges=edges, passed=True)
    for i, (s, t) in enumerate(edges):
        flipped = edges[:i] + ((t, s),) + edges[i + 1:]
        value = contract(flipped, symbols, tensor)
        ok = value == -base
        record.flips.append((i, ok))
        if not ok:
            record.passed = False
    return record


@dataclass
class ArrowExpansion:
    """Both sides of the extra-vertex expansion identity, plus the graphs."""

    lhs: object
    rhs: object
    graphs: list
    passed: bool


def attach_arrows_expand(directed_edges, symbols, k: int, extra_symbol,
                         tensor: QuantizationTensor) -> ArrowExpansion:
    """Contract k arrows from a whole graph polynomial into one new symbol.

    The left side treats the graph's contraction as a single symbol and
    applies the k-fold bracket against extra_symbol.  The right side sums the
    contractions of every graph obtained by adding a new highest-labeled
    vertex and k arrows into it, one arrow source choice at a time.
    """
    nv = len(symbols)
    lam = contract(directed_edges, symbols, tensor)
    lhs = bracket_k(lam, extra_symbol, k, tensor)

    rhs = None
    graphs = []
    import itertools

    for sources in itertools.product(range(1, nv + 1), repeat=k):
        new_edges = tuple(directed_edges) + tuple((s, nv + 1) for s in sources)
        graphs.append(new_edges)
        term = contract(new_edges, list(symbols) + [extra_symbol], tensor)
        rhs = term if rhs is None else rhs + term
    if rhs is None:
        rhs = lam * extra_symbol
    return ArrowExpansion(lhs=lhs, rhs=rhs, graphs=graphs, passed=lhs == rhs)
