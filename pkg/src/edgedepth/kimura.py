"""Projective dimension of weakly chordal edge ideals through strongly
disjoint families of complete bipartite subgraphs.

``d(G)`` is the largest value of ``sum |V(B_i)| - g`` over families of
vertex-disjoint complete bipartite subgraphs ``B_1..B_g`` that admit an
induced matching ``e_1..e_g`` with ``e_i`` an edge of ``B_i``. Every member
carries at least one edge.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .config import DEFAULT_CAPS
from .errors import BudgetExceeded, PreconditionFailed
from .graph import Edge, Graph, _norm_edge, is_weakly_chordal


@dataclass(frozen=True)
class BipartiteFamily:
    members: tuple[tuple[frozenset[int], frozenset[int]], ...] = ()
    matching: tuple[Edge, ...] = ()

    @classmethod
    def build(cls, members, matching) -> "BipartiteFamily":
        return cls(tuple((frozenset(A), frozenset(B)) for A, B in members),
                   tuple(_norm_edge(*e) for e in matching))

    @property
    def size(self) -> int:
        return len(self.members)

    @property
    def value(self) -> int:
        return sum(len(A) + len(B) for A, B in self.members) - len(self.members)


def is_induced_matching(G: Graph, edges) -> bool:
    seen: set[int] = set()
    ends = []
    for u, v in edges:
        if not G.has_edge(u, v) or u in seen or v in seen:
            return False
        seen |= {u, v}
        ends.append((u, v))
    for i, (a, b) in enumerate(ends):
        for c, d in ends[i + 1:]:
            if G.has_edge(a, c) or G.has_edge(a, d) or G.has_edge(b, c) or G.has_edge(b, d):
                return False
    return True


def is_strongly_disjoint(G: Graph, fam: BipartiteFamily) -> bool:
    if len(fam.members) != len(fam.matching):
        return False
    used: set[int] = set()
    for (A, B), (u, v) in zip(fam.members, fam.matching):
        if not A or not B or A & B:
            return False
        if any(not G.has_edge(a, b) for a in A for b in B):
            return False
        if used & (A | B):
            return False
        used |= A | B
        if not ((u in A and v in B) or (u in B and v in A)):
            return False
    return is_induced_matching(G, fam.matching)


def induced_matchings(G: Graph) -> Iterator[tuple[Edge, ...]]:
    """All nonempty induced matchings, each once, edges in sorted order."""
    edges = G.edge_list()
    adj = G.adjacency_masks

    def rec(start: int, chosen: list[Edge], blocked: int):
        for i in range(start, len(edges)):
            u, v = edges[i]
            if (blocked >> u) & 1 or (blocked >> v) & 1:
                continue
            chosen.append((u, v))
            yield tuple(chosen)
            # later edges must avoid the closed neighbourhoods of u and v
            yield from rec(i + 1, chosen, blocked | adj[u] | adj[v] | (1 << u) | (1 << v))
            chosen.pop()

    yield from rec(0, [], 0)


def _best_inflation(G: Graph, matching: tuple[Edge, ...], floor: int):
    """Best assignment of the unmatched vertices into the sides of the
    members seeded by ``matching``. Returns ``(value, family)`` or ``None``
    when nothing beats ``floor``."""
    adj = G.adjacency_masks
    g = len(matching)
    sides = [[1 << u, 1 << v] for u, v in matching]
    matched = 0
    for u, v in matching:
        matched |= (1 << u) | (1 << v)
    rest = [w for w in G.vertices if not (matched >> w) & 1]
    # only vertices that could ever join something are worth branching on
    rest = [w for w in rest if any((adj[w] & s[1 - k]) == s[1 - k]
                                   for s in sides for k in (0, 1))]
    best_value = floor
    best: list | None = None

    def rec(idx: int, extra: int):
        nonlocal best_value, best
        if g + extra + (len(rest) - idx) <= best_value:
            return
        if idx == len(rest):
            best_value = g + extra
            best = [list(s) for s in sides]
            return
        w = rest[idx]
        bit = 1 << w
        for s in sides:
            for k in (0, 1):
                other = s[1 - k]
                if (adj[w] & other) == other:
                    s[k] |= bit
                    rec(idx + 1, extra + 1)
                    s[k] ^= bit
        rec(idx + 1, extra)

    rec(0, 0)
    if best is None:
        return None
    members = tuple((_bits(A), _bits(B)) for A, B in best)
    return best_value, BipartiteFamily(members, matching)


def _bits(mask: int) -> frozenset[int]:
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return frozenset(out)


def best_family(G: Graph, max_vertices: int | None = None) -> BipartiteFamily:
    """A strongly disjoint family attaining ``d(G)``."""
    limit = DEFAULT_CAPS.max_search_vertices if max_vertices is None else max_vertices
    if G.n_vertices > limit:
        raise BudgetExceeded("bipartite-family search vertices", limit, G.n_vertices)
    if not G.edges:
        raise PreconditionFailed("d(G) needs a graph with at least one edge")
    best_value = 0
    best = None
    # d(G) never exceeds the number of non-isolated vertices minus one
    ceiling = sum(1 for v in G.vertices if G.degree(v)) - 1
    for matching in induced_matchings(G):
        found = _best_inflation(G, matching, best_value)
        if found is not None:
            best_value, best = found
            if best_value >= ceiling:
                break
    assert best is not None
    return best


def d_value(G: Graph, max_vertices: int | None = None) -> int:
    return best_family(G, max_vertices).value


def pd_weakly_chordal(G: Graph, max_vertices: int | None = None) -> int:
    """Projective dimension of ``S / I(G)`` for a weakly chordal ``G``."""
    if not G.edges:
        raise PreconditionFailed("needs a graph with at least one edge")
    if not is_weakly_chordal(G, max_vertices=max_vertices):
        raise PreconditionFailed("graph is not weakly chordal")
    return d_value(G, max_vertices)
