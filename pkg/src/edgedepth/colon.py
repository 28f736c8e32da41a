"""Colon ideals of edge-ideal powers by edge products, described on the graph.

For ``f = e_1 ... e_{t-1}`` the colon ``I(G)^t : f`` is generated by the
quadratic monomials ``uv`` with ``u`` and ``v`` even-connected through ``f``.
This module finds those pairs by walk search and builds the resulting graphs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import InvalidArgument, PreconditionFailed
from .graph import Edge, Graph, _norm_edge, induced_subgraph, is_bipartite, make_cycle, make_path
from .monomial import (Monomial, MonomialIdeal, colon_monomial, edge_ideal, edge_monomial,
                       intersect, power)


@dataclass(frozen=True)
class EdgeProduct:
    """A product of edges of ``base`` (repeats allowed)."""

    base: Graph
    factors: tuple[Edge, ...] = ()

    def __post_init__(self):
        norm = tuple(_norm_edge(*e) for e in self.factors)
        for e in norm:
            if e not in self.base.edges:
                raise InvalidArgument(f"factor {e} is not an edge of the graph")
        object.__setattr__(self, "factors", norm)

    @property
    def t(self) -> int:
        """The power whose colon this product describes (``len(factors) + 1``)."""
        return len(self.factors) + 1

    @property
    def support(self) -> frozenset[int]:
        return frozenset(x for e in self.factors for x in e)

    def exponents(self) -> tuple[int, ...]:
        vec = [0] * (self.base.n_vertices + 1)
        for u, v in self.factors:
            vec[u] += 1
            vec[v] += 1
        return tuple(vec)

    def monomial(self) -> Monomial:
        return edge_monomial(self.base.n_vertices, self.factors)

    def extended(self, edge: Edge) -> "EdgeProduct":
        return EdgeProduct(self.base, self.factors + (edge,))


def _walk_ends(ep: EdgeProduct, u: int) -> set[int]:
    """Every vertex ``v`` such that ``u`` and ``v`` are even-connected via the
    factor product (``v == u`` included when a closed walk exists)."""
    G = ep.base
    adj = G.adjacency
    factor_edges = set(ep.factors)
    start_budget = ep.exponents()
    # ends of walks u, x1, ..., x_{2k}: states are (x_{2k}, remaining exponents)
    seen = {(u, start_budget)}
    stack = [(u, start_budget)]
    ends: set[int] = set()
    while stack:
        last, budget = stack.pop()
        ends |= adj[last]
        for a in adj[last]:
            if not budget[a]:
                continue
            for b in adj[a]:
                if budget[b] and _norm_edge(a, b) in factor_edges:
                    nb = list(budget)
                    nb[a] -= 1
                    nb[b] -= 1
                    state = (b, tuple(nb))
                    if state not in seen:
                        seen.add(state)
                        stack.append(state)
    return ends


def even_connected(ep: EdgeProduct, u: int, v: int) -> bool:
    if not (1 <= u <= ep.base.n_vertices and 1 <= v <= ep.base.n_vertices):
        raise InvalidArgument("vertex outside the graph")
    return v in _walk_ends(ep, u)


def _colon_pairs(ep: EdgeProduct) -> tuple[set[Edge], set[int]]:
    pairs: set[Edge] = set()
    squares: set[int] = set()
    for u in ep.base.vertices:
        for v in _walk_ends(ep, u):
            if v == u:
                squares.add(u)
            elif u < v:
                pairs.add((u, v))
    return pairs, squares


def banerjee_colon_squares(ep: EdgeProduct) -> frozenset[int]:
    """Vertices ``u`` with ``u^2`` in the colon; nonempty only when a closed
    odd walk is available, so always empty for bipartite graphs."""
    return frozenset(_colon_pairs(ep)[1])


def banerjee_colon_ideal(ep: EdgeProduct) -> MonomialIdeal:
    """The colon ``I(G)^t : f`` assembled from even-connected pairs."""
    pairs, squares = _colon_pairs(ep)
    n = ep.base.n_vertices
    vecs = []
    for u, v in pairs:
        vec = [0] * n
        vec[u - 1] = vec[v - 1] = 1
        vecs.append(tuple(vec))
    for u in squares:
        vec = [0] * n
        vec[u - 1] = 2
        vecs.append(tuple(vec))
    return MonomialIdeal(n, tuple(vecs))


def monomial_colon(ep: EdgeProduct) -> MonomialIdeal:
    """The same colon computed directly on the monomial side."""
    return colon_monomial(power(edge_ideal(ep.base), ep.t), ep.monomial())


def banerjee_colon_graph(ep: EdgeProduct, check: bool = False) -> Graph:
    """Graph whose edges are the even-connected pairs ``u != v``.

    With ``check=True`` the colon is recomputed from ``I(G)^t`` and compared;
    a mismatch raises ``AssertionError``.
    """
    pairs, _ = _colon_pairs(ep)
    H = Graph(ep.base.n_vertices, frozenset(pairs))
    if check and banerjee_colon_ideal(ep) != monomial_colon(ep):
        raise AssertionError(f"even-connection colon disagrees with the monomial colon for {ep}")
    return H


def _parity_chords(n: int, t: int) -> set[Edge]:
    return {(i, j) for j in range(2, min(t + 2, n) + 1) for i in range(1, j) if (i + j) % 2}


def path_colon_graph(n: int, t: int) -> Graph:
    """``I(P_n)^t : e_2 ... e_t`` as a graph: the path plus every chord
    ``{i, j}`` with ``i < j <= t + 2`` joining vertices of opposite parity."""
    if not 2 <= t <= n - 2:
        raise InvalidArgument(f"path colon graph needs 2 <= t <= n - 2, got n={n}, t={t}")
    return make_path(n).add_edges(_parity_chords(n, t))


def cycle_colon_graph(n: int, t: int) -> Graph:
    if not 2 <= t <= n - 2:
        raise InvalidArgument(f"cycle colon graph needs 2 <= t <= n - 2, got n={n}, t={t}")
    return make_cycle(n).add_edges(_parity_chords(n, t))


def consecutive_factors(G: Graph, first: int, last: int) -> EdgeProduct:
    """Edge product ``e_first ... e_last`` with ``e_i = {i, i+1}`` (and
    ``e_n = {1, n}`` on a cycle)."""
    n = G.n_vertices
    factors = [(i, i + 1) if i < n else (1, n) for i in range(first, last + 1)]
    return EdgeProduct(G, tuple(factors))


def neighborhood_odd_cycle_free(ep: EdgeProduct) -> bool:
    """Whether the subgraph induced on the closed neighbourhood of the
    factor support is bipartite."""
    closed: set[int] = set()
    for x in ep.support:
        closed |= ep.base.closed_neighborhood(x)
    sub, _ = induced_subgraph(ep.base, closed)
    return is_bipartite(sub)


def colon_factorization_check(ep: EdgeProduct, extra: Edge) -> bool:
    """Check ``J_{t+1} = (J_t : u) ∩ (J_t : v)`` on the monomial side, where
    ``J_s = I^s : (e_1 ... e_{s-1})``, ``ep`` holds ``e_1 .. e_{t-1}`` and
    ``extra = uv`` is ``e_t``."""
    extra = _norm_edge(*extra)
    full = ep.extended(extra)
    if len(set(full.factors)) != len(full.factors):
        raise PreconditionFailed("factorization identity needs distinct edges")
    if not neighborhood_odd_cycle_free(full):
        raise PreconditionFailed("closed neighbourhood of the factor support has an odd cycle")
    u, v = extra
    J_t = monomial_colon(ep)
    J_next = monomial_colon(full)
    return J_next == intersect(colon_monomial(J_t, Monomial(((u, 1),))),
                               colon_monomial(J_t, Monomial(((v, 1),))))


def all_factor_sequences(G: Graph, length: int) -> Iterable[EdgeProduct]:
    """Every multiset of ``length`` edges of ``G``, as nondecreasing sequences."""
    edges = G.edge_list()

    def rec(start: int, acc: list[Edge]):
        if len(acc) == length:
            yield EdgeProduct(G, tuple(acc))
            return
        for i in range(start, len(edges)):
            acc.append(edges[i])
            yield from rec(i, acc)
            acc.pop()

    yield from rec(0, [])


def edge_product_from_indices(G: Graph, indices: Sequence[int], labelled_consecutive: bool) -> EdgeProduct:
    """Edge product from 1-based edge indices: ``e_i = {i, i+1}`` for paths and
    cycles, otherwise the ``i``-th edge in sorted order."""
    if labelled_consecutive:
        n = G.n_vertices
        factors = [(i, i + 1) if i < n else (1, n) for i in indices]
    else:
        edges = G.edge_list()
        if any(not 1 <= i <= len(edges) for i in indices):
            raise InvalidArgument(f"edge index out of range 1..{len(edges)}")
        factors = [edges[i - 1] for i in indices]
    return EdgeProduct(G, tuple(factors))
