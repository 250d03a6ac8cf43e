"""Multigraph combinatorics for the series expansion.

A labeled graph on V vertices with E edges is a map from edge labels 1..E to
unordered vertex pairs; no self-edges.  Each edge carries the natural
orientation from its lower-labeled endpoint to its higher-labeled one.
Unlabeled graphs are orbits under simultaneous vertex and edge relabeling and
are stored in a canonical labeling, so the sign-sum c and the contraction
polynomial attached to a canonical graph are always mutually consistent.
"""

from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass
from functools import lru_cache

from .errors import CapacityError

MAX_EDGES = 8
MAX_SIGN_SUM_VERTICES = 16


# ---------------------------------------------------------------------------
# labeled graphs
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LabeledGraph:
    """Edge-labeled multigraph; edges[i] is the pair of edge label i+1."""

    vertices: int
    edges: tuple

    def __post_init__(self):
        object.__setattr__(self, "edges", tuple((min(u, v), max(u, v))
                                                for u, v in self.edges))
        for u, v in self.edges:
            if u == v:
                raise ValueError("self-edges are not allowed")
            if not (1 <= u <= self.vertices and 1 <= v <= self.vertices):
                raise ValueError("edge endpoint out of range")

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def directed_edges(self):
        """Natural orientation: every edge points to its higher label."""
        return self.edges

    def multiplicity_map(self) -> dict:
        mult: dict = {}
        for e in self.edges:
            mult[e] = mult.get(e, 0) + 1
        return mult

    def relabeled(self, sigma: dict) -> "LabeledGraph":
        """Apply a vertex relabeling (edge labels kept in place)."""
        return LabeledGraph(self.vertices,
                            tuple((sigma[u], sigma[v]) for u, v in self.edges))

    def is_reduced(self) -> bool:
        seen = set()
        for u, v in self.edges:
            seen.add(u)
            seen.add(v)
        return len(seen) == self.vertices

    def to_json_dict(self) -> dict:
        return {"V": self.vertices, "edges": [list(e) for e in self.edges]}

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())

    @classmethod
    def from_json_dict(cls, data: dict) -> "LabeledGraph":
        return cls(int(data["V"]), tuple((int(u), int(v)) for u, v in data["edges"]))

    @classmethod
    def from_json(cls, text: str) -> "LabeledGraph":
        return cls.from_json_dict(json.loads(text))


# ---------------------------------------------------------------------------
# canonicalization of connected multigraphs
# ---------------------------------------------------------------------------

def _canonical_connected(vertex_list, mult):
    """Canonical column-major multiplicity vector and automorphism count.

    Places vertices one at a time keeping every ordering that achieves the
    lexicographically minimal column (multiplicities to already placed
    vertices).  The survivors at the end are exactly the automorphisms of the
    canonical labeling.
    """
    verts = list(vertex_list)
    nv = len(verts)
    states = [()]
    vector = []
    for _ in range(nv):
        best = None
        extended = []
        for state in states:
            used = set(state)
            for v in verts:
                if v in used:
                    continue
                col = tuple(mult.get(frozenset((u, v)), 0) for u in state)
                if best is None or col < best:
                    best = col
                    extended = [state + (v,)]
                elif col == best:
                    extended.append(state + (v,))
        states = extended
        vector.extend(best)
    order = states[0]
    canonical = {}
    pos = {v: i + 1 for i, v in enumerate(order)}
    for pair, m in mult.items():
        u, v = tuple(pair)
        a, b = sorted((pos[u], pos[v]))
        canonical[(a, b)] = m
    return canonical, len(states)


def _components(vertex_list, mult):
    adjacency = {v: set() for v in vertex_list}
    for pair in mult:
        u, v = tuple(pair)
        adjacency[u].add(v)
        adjacency[v].add(u)
    seen = set()
    comps = []
    for start in vertex_list:
        if start in seen:
            continue
        stack = [start]
        comp = set()
        while stack:
            v = stack.pop()
            if v in comp:
                continue
            comp.add(v)
            stack.extend(adjacency[v] - comp)
        seen |= comp
        comps.append(sorted(comp))
    return comps


class UnlabeledGraph:
    """Isomorphism class of a multigraph, held in a canonical labeling.

    Built per connected component (lex-minimal column-major multiplicity
    vector), components sorted by their canonical key and then relabeled
    consecutively.
    """

    __slots__ = ("vertices", "edge_count", "multiplicity", "_aut")

    def __init__(self, vertices, multiplicity, _aut=None):
        object.__setattr__(self, "vertices", vertices)
        object.__setattr__(self, "multiplicity", dict(multiplicity))
        object.__setattr__(self, "edge_count", sum(multiplicity.values()))
        object.__setattr__(self, "_aut", _aut)

    def __setattr__(self, name, value):
        raise AttributeError("UnlabeledGraph is immutable")

    # -- construction ---------------------------------------------------

    @classmethod
    def from_multiplicities(cls, vertex_count: int, mult: dict) -> "UnlabeledGraph":
        """Canonicalize an arbitrary multiplicity map on 1..vertex_count."""
        mult = {frozenset(pair): m for pair, m in mult.items() if m}
        for pair in mult:
            if len(pair) != 2:
                raise ValueError("self-edges are not allowed")
        verts = list(range(1, vertex_count + 1))
        comps = _components(verts, mult)
        canon_comps = []
        for comp in comps:
            local = {p: m for p, m in mult.items() if next(iter(p)) in comp}
            canon, aut = _canonical_connected(comp, local)
            nv = len(comp)
            ne = sum(canon.values())
            key = tuple(sorted(canon.items()))
            canon_comps.append((nv, ne, key, canon, aut))
        canon_comps.sort(key=lambda t: (t[0], t[1], t[2]))
        merged = {}
        offset = 0
        aut_total = 1
        comp_keys = []
        for nv, ne, key, canon, aut in canon_comps:
            for (a, b), m in canon.items():
                merged[(a + offset, b + offset)] = m
            offset += nv
            aut_total *= aut
            comp_keys.append((nv, ne, key))
        for _, group in itertools.groupby(comp_keys):
            aut_total *= math.factorial(len(list(group)))
        return cls(vertex_count, merged, _aut=aut_total)

    @classmethod
    def from_labeled(cls, graph: LabeledGraph) -> "UnlabeledGraph":
        mult = {frozenset(e): m for e, m in graph.multiplicity_map().items()}
        return cls.from_multiplicities(graph.vertices, mult)

    @classmethod
    def from_edge_list(cls, vertex_count: int, edges) -> "UnlabeledGraph":
        return cls.from_labeled(LabeledGraph(vertex_count, tuple(edges)))

    # -- views -----------------------------------------------------------

    def key(self):
        return (self.vertices, self.edge_count, tuple(sorted(self.multiplicity.items())))

    def to_labeled(self) -> LabeledGraph:
        edges = []
        for (u, v), m in sorted(self.multiplicity.items()):
            edges.extend([(u, v)] * m)
        return LabeledGraph(self.vertices, tuple(edges))

    def directed_edges(self):
        return self.to_labeled().directed_edges()

    def __eq__(self, other):
        if not isinstance(other, UnlabeledGraph):
            return NotImplemented
        return self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return f"<UnlabeledGraph V={self.vertices} E={self.edge_count} {sorted(self.multiplicity.items())}>"

    def to_json_dict(self) -> dict:
        return self.to_labeled().to_json_dict()

    # -- structure -------------------------------------------------------

    def connected_components(self):
        """Split into components, each returned as a canonical UnlabeledGraph."""
        comps = _components(list(range(1, self.vertices + 1)),
                            {frozenset(p): m for p, m in self.multiplicity.items()})
        out = []
        for comp in comps:
            relabel = {v: i + 1 for i, v in enumerate(comp)}
            local = {}
            for (u, v), m in self.multiplicity.items():
                if u in relabel and v in relabel:
                    a, b = sorted((relabel[u], relabel[v]))
                    local[(a, b)] = m
            out.append(UnlabeledGraph.from_multiplicities(len(comp), local))
        return out

    @property
    def is_connected(self) -> bool:
        if self.vertices == 0:
            return False
        return len(_components(list(range(1, self.vertices + 1)),
                               {frozenset(p): m for p, m in self.multiplicity.items()})) == 1

    @property
    def is_reduced(self) -> bool:
        touched = set()
        for u, v in self.multiplicity:
            touched.add(u)
            touched.add(v)
        return len(touched) == self.vertices

    def vertex_degrees(self):
        deg = [0] * (self.vertices + 1)
        for (u, v), m in self.multiplicity.items():
            deg[u] += m
            deg[v] += m
        return deg[1:]

    # -- invariants --------------------------------------------------------

    def automorphism_count(self) -> int:
        if self._aut is not None:
            return self._aut
        return UnlabeledGraph.from_multiplicities(
            self.vertices, {frozenset(p): m for p, m in self.multiplicity.items()})._aut

    def symmetry_order(self) -> int:
        """|vertex automorphisms| times the product of edge-multiplicity factorials."""
        s = self.automorphism_count()
        for m in self.multiplicity.values():
            s *= math.factorial(m)
        return s


def canonicalize(graph: LabeledGraph) -> UnlabeledGraph:
    return UnlabeledGraph.from_labeled(graph)


# ---------------------------------------------------------------------------
# the sign-sum c and its recursive cross-check
# ---------------------------------------------------------------------------

def sign_sum_directed(vertex_count: int, directed_edges) -> int:
    """Sum over all vertex orderings of the product of edge orientation signs.

    An edge (s, t) counts +1 in an ordering that ranks s before t and -1
    otherwise.  Subset dynamic programming over the vertices realizes the
    V!-term sum exactly: orderings are built by repeatedly appending the next
    higher rank, so when v joins the placed set every incident edge's sign is
    determined by whether v is its source or its target.
    """
    if vertex_count > MAX_SIGN_SUM_VERTICES:
        raise CapacityError(f"sign sum limited to {MAX_SIGN_SUM_VERTICES} vertices")
    # adjacency[v] lists (bit of u, sign picked up when v is placed after u)
    incidence: dict = {}
    for s, t in directed_edges:
        incidence.setdefault(t, {})
        incidence.setdefault(s, {})
        # v = t placed last: edge realized s -> t, matching its direction: +1
        incidence[t][s] = incidence[t].get(s, 1)
        # v = s placed last: edge realized t -> s, opposite: -1
        incidence[s][t] = incidence[s].get(t, 1) * -1
    adjacency = {
        v: tuple((1 << (u - 1), sign) for u, sign in items.items())
        for v, items in incidence.items()
    }
    table = [0] * (1 << vertex_count)
    table[0] = 1
    full = (1 << vertex_count) - 1
    for mask in range(full):
        base = table[mask]
        if base == 0:
            continue
        for v in range(1, vertex_count + 1):
            bit = 1 << (v - 1)
            if mask & bit:
                continue
            factor = 1
            for ubit, sign in adjacency.get(v, ()):
                if mask & ubit:
                    factor *= sign
            table[mask | bit] += base * factor
    return table[full]


def c_coefficient(graph: UnlabeledGraph) -> int:
    """Sign-sum over vertex relabelings for the stored canonical labeling."""
    return sign_sum_directed(graph.vertices, graph.directed_edges())


def _sign_sum_facts(vertex_count: int, directed: tuple) -> int:
    """Recursive evaluation via the component, parallel-pair and
    highest-label-vertex rules; bottoms out at edgeless graphs."""
    edges = list(directed)
    if not edges:
        return math.factorial(vertex_count)
    if len(edges) % 2 == 1:
        return 0
    # split off connected components
    comps = _components(list(range(1, vertex_count + 1)),
                        _mult_from_directed(edges))
    if len(comps) > 1:
        result = math.factorial(vertex_count)
        for comp in comps:
            relabel = {v: i + 1 for i, v in enumerate(comp)}
            sub = [(relabel[s], relabel[t]) for s, t in edges if s in relabel]
            result //= math.factorial(len(comp))
            result *= _sign_sum_facts(len(comp), tuple(sub))
            if result == 0:
                return 0
        return result
    # erase one parallel pair if present (equal direction pairs only, which
    # is all that occurs along this recursion)
    seen: dict = {}
    for i, e in enumerate(edges):
        if e in seen:
            rest = [f for k, f in enumerate(edges) if k not in (seen[e], i)]
            return _sign_sum_facts(vertex_count, tuple(rest))
        seen[e] = i
    # otherwise recurse on the choice of the highest-labeled vertex
    total = 0
    for v in range(1, vertex_count + 1):
        out_deg = sum(1 for s, _ in edges if s == v)
        rest = [(s, t) for s, t in edges if s != v and t != v]
        relabel = {u: u - (1 if u > v else 0) for u in range(1, vertex_count + 1)}
        sub = tuple((relabel[s], relabel[t]) for s, t in rest)
        term = _sign_sum_facts(vertex_count - 1, sub)
        if term:
            total += (-1) ** out_deg * term
    return total


def _mult_from_directed(edges):
    mult: dict = {}
    for s, t in edges:
        mult[frozenset((s, t))] = mult.get(frozenset((s, t)), 0) + 1
    return mult


def c_via_facts(graph: UnlabeledGraph) -> int:
    """Same sign-sum computed by the recursive rules instead of directly."""
    return _sign_sum_facts(graph.vertices, tuple(graph.directed_edges()))


def symmetry_order_bruteforce(graph: LabeledGraph) -> int:
    """Order of the stabilizer of the labeled graph under vertex and edge
    relabelings; guarded to V! * E! <= 10**6."""
    nv, ne = graph.vertices, graph.edge_count
    if math.factorial(nv) * math.factorial(ne) > 10 ** 6:
        raise CapacityError("stabilizer brute force limited to V!*E! <= 1e6")
    edges = [frozenset(e) for e in graph.edges]
    count = 0
    for sigma in itertools.permutations(range(1, nv + 1)):
        mapped = [frozenset((sigma[u - 1], sigma[v - 1])) for u, v in graph.edges]
        for tau in itertools.permutations(range(ne)):
            if all(edges[tau[i]] == mapped[i] for i in range(ne)):
                count += 1
    return count


# ---------------------------------------------------------------------------
# enumeration
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _connected_classes(edge_count: int) -> tuple:
    """All connected multigraph classes with no isolated vertices and exactly
    edge_count edges, grown one edge (or one pendant vertex) at a time."""
    if edge_count == 0:
        return ()
    if edge_count == 1:
        return (UnlabeledGraph.from_edge_list(2, [(1, 2)]),)
    out = {}
    for parent in _connected_classes(edge_count - 1):
        nv = parent.vertices
        base = {frozenset(p): m for p, m in parent.multiplicity.items()}
        # extend with one edge between existing vertices
        for u in range(1, nv + 1):
            for v in range(u + 1, nv + 1):
                mult = dict(base)
                key = frozenset((u, v))
                mult[key] = mult.get(key, 0) + 1
                g = UnlabeledGraph.from_multiplicities(nv, mult)
                out[g.key()] = g
        # or attach a new pendant vertex
        for u in range(1, nv + 1):
            mult = dict(base)
            mult[frozenset((u, nv + 1))] = 1
            g = UnlabeledGraph.from_multiplicities(nv + 1, mult)
            out[g.key()] = g
    return tuple(sorted(out.values(), key=lambda g: g.key()))


def empty_graph() -> UnlabeledGraph:
    return UnlabeledGraph.from_multiplicities(0, {})


def enumerate_reduced(edge_count: int, *, connected_only: bool = False,
                      max_vertices: int | None = None,
                      even_components_only: bool = True):
    """Isomorphism classes of reduced graphs with the given edge count.

    With even_components_only (the default) only graphs whose every connected
    component has an even number of edges are produced; those are the graphs
    that can contribute to the expansion, the rest having vanishing sign-sum.
    Results are sorted by (V, canonical multiplicity matrix).
    """
    if edge_count < 0:
        raise ValueError("edge count must be non-negative")
    if edge_count > MAX_EDGES:
        raise CapacityError(f"enumeration limited to {MAX_EDGES} edges")
    if edge_count == 0:
        return [] if connected_only else [empty_graph()]

    if connected_only:
        classes = [g for g in _connected_classes(edge_count)]
        if even_components_only and edge_count % 2 == 1:
            classes = []
    else:
        classes = []
        step = 2 if even_components_only else 1
        allowed = [e for e in range(step, edge_count + 1, step)]
        for partition in _partitions(edge_count, allowed):
            for combo in _component_choices(partition):
                total_v = sum(g.vertices for g in combo)
                mult = {}
                offset = 0
                for g in combo:
                    for (u, v), m in g.multiplicity.items():
                        mult[frozenset((u + offset, v + offset))] = m
                    offset += g.vertices
                classes.append(UnlabeledGraph.from_multiplicities(total_v, mult))
        dedup = {g.key(): g for g in classes}
        classes = list(dedup.values())

    if max_vertices is not None:
        classes = [g for g in classes if g.vertices <= max_vertices]
    classes.sort(key=lambda g: g.key())
    return classes


def _partitions(total: int, allowed):
    """Non-increasing partitions of total into parts from allowed."""
    allowed = sorted(set(allowed), reverse=True)

    def rec(remaining, cap):
        if remaining == 0:
            yield ()
            return
        for part in allowed:
            if part > cap or part > remaining:
                continue
            for rest in rec(remaining - part, part):
                yield (part,) + rest

    yield from rec(total, total)


def _component_choices(partition):
    """All multisets of connected classes matching a partition of edges."""
    groups = {}
    for part in partition:
        groups[part] = groups.get(part, 0) + 1
    pools = []
    for part, count in sorted(groups.items()):
        pool = _connected_classes(part)
        pools.append(list(itertools.combinations_with_replacement(pool, count)))
    for combo in itertools.product(*pools):
        yield tuple(g for block in combo for g in block)


# ---------------------------------------------------------------------------
# reduced labeled graphs (grouped by edge multiset)
# ---------------------------------------------------------------------------

def reduced_labeled_multisets(edge_count: int, max_vertices: int | None = None):
    """Yield (vertex_count, edge_tuple, labeling_count) for all reduced
    labeled graphs with edge_count edges, grouped by the multiset of pairs.

    Every labeled graph is an assignment of edge labels to pairs; graphs
    sharing the pair multiset give identical contraction polynomials, so each
    group carries the multinomial count E! / prod(multiplicity!).
    """
    if edge_count > MAX_EDGES:
        raise CapacityError(f"enumeration limited to {MAX_EDGES} edges")
    if edge_count == 0:
        yield 0, (), 1
        return
    top = 2 * edge_count if max_vertices is None else min(max_vertices, 2 * edge_count)
    efact = math.factorial(edge_count)
    for nv in range(2, top + 1):
        pairs = list(itertools.combinations(range(1, nv + 1), 2))

        def rec(idx, remaining, covered, chosen, denom):
            if remaining == 0:
                if len(covered) == nv:
                    yield tuple(chosen), efact // denom
                return
            if idx == len(pairs):
                return
            # vertices smaller than the current pair head can never be
            # covered later; prune
            u, v = pairs[idx]
            missing = nv - len(covered)
            if 2 * remaining < missing:
                return
            for w in range(1, u):
                if w not in covered:
                    return
            # multiplicity 0 branch first
            yield from rec(idx + 1, remaining, covered, chosen, denom)
            new_cov = covered | {u, v}
            for m in range(1, remaining + 1):
                yield from rec(idx + 1, remaining - m, new_cov,
                               chosen + [pairs[idx]] * m,
                               denom * math.factorial(m))

        for edges, count in rec(0, edge_count, frozenset(), [], 1):
            yield nv, edges, count
