"""Finite simple graphs on the vertex set ``1..n`` and the families used for
depth computations: paths, cycles, starlike trees and three-vertex-spine
caterpillars."""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from pathlib import Path
from typing import Iterable, Iterator

from .config import DEFAULT_CAPS
from .errors import BudgetExceeded, InvalidArgument

Edge = tuple[int, int]


def _norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph with vertices ``1..n_vertices``.

    Isolated vertices are part of the graph; they count towards the number of
    variables of the ambient polynomial ring.
    """

    n_vertices: int
    edges: frozenset[Edge] = field(default_factory=frozenset)

    def __post_init__(self):
        if self.n_vertices < 0:
            raise InvalidArgument("n_vertices must be non-negative")
        clean = set()
        for e in self.edges:
            u, v = e
            if u == v:
                raise InvalidArgument(f"self-loop at vertex {u}")
            if not (1 <= u <= self.n_vertices and 1 <= v <= self.n_vertices):
                raise InvalidArgument(f"edge {e} has an endpoint outside 1..{self.n_vertices}")
            clean.add(_norm_edge(u, v))
        object.__setattr__(self, "edges", frozenset(clean))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Iterable[int]]) -> "Graph":
        return cls(n, frozenset(tuple(e) for e in edges))

    @property
    def vertices(self) -> range:
        return range(1, self.n_vertices + 1)

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> dict[int, frozenset[int]]:
        adj: dict[int, set[int]] = {v: set() for v in self.vertices}
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return {v: frozenset(s) for v, s in adj.items()}

    @cached_property
    def adjacency_masks(self) -> tuple[int, ...]:
        """Bitmask of neighbours per vertex; bit ``v`` stands for vertex ``v``."""
        masks = [0] * (self.n_vertices + 1)
        for u, v in self.edges:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return tuple(masks)

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adjacency[v]

    def closed_neighborhood(self, v: int) -> frozenset[int]:
        return self.adjacency[v] | {v}

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return _norm_edge(u, v) in self.edges

    def edge_list(self) -> list[Edge]:
        return sorted(self.edges)

    def complement(self) -> "Graph":
        return Graph(self.n_vertices, frozenset(
            e for e in combinations(self.vertices, 2) if e not in self.edges))

    def disjoint_union(self, other: "Graph") -> "Graph":
        shift = self.n_vertices
        moved = {(u + shift, v + shift) for u, v in other.edges}
        return Graph(self.n_vertices + other.n_vertices, self.edges | moved)

    def add_edges(self, extra: Iterable[Edge]) -> "Graph":
        return Graph(self.n_vertices, self.edges | {_norm_edge(*e) for e in extra})

    def __str__(self) -> str:
        body = " ".join(f"{u}-{v}" for u, v in self.edge_list())
        return f"Graph(n={self.n_vertices}; {body})"


@dataclass(frozen=True)
class StarlikeShape:
    """Branch lengths ``(a_1, ..., a_k)`` of a starlike tree, measured in edges."""

    a: tuple[int, ...]

    def __post_init__(self):
        a = tuple(int(x) for x in self.a)
        if not a:
            raise InvalidArgument("a starlike shape needs at least one branch")
        if any(x < 1 for x in a):
            raise InvalidArgument(f"branch lengths must be positive, got {a}")
        object.__setattr__(self, "a", a)

    @property
    def k(self) -> int:
        return len(self.a)

    @property
    def size(self) -> int:
        """``|a|``, the number of edges of the tree."""
        return sum(self.a)

    def alpha(self) -> tuple[int, int, int]:
        """Counts of branch lengths congruent to 0, 1, 2 modulo 3."""
        counts = [0, 0, 0]
        for x in self.a:
            counts[x % 3] += 1
        return tuple(counts)


# ---------------------------------------------------------------- families

def make_path(n: int) -> Graph:
    if n < 1:
        raise InvalidArgument(f"path needs n >= 1, got {n}")
    return Graph(n, frozenset((i, i + 1) for i in range(1, n)))


def make_cycle(n: int) -> Graph:
    if n < 3:
        raise InvalidArgument(f"cycle needs n >= 3, got {n}")
    return Graph(n, frozenset([(i, i + 1) for i in range(1, n)] + [(1, n)]))


def make_starlike(shape: StarlikeShape | Iterable[int]) -> Graph:
    """Join paths of ``a_i`` edges at the root, vertex 1.

    Branches are labelled in order; within a branch the outermost leaf gets
    the smallest label and labels increase towards the root.
    """
    if not isinstance(shape, StarlikeShape):
        shape = StarlikeShape(tuple(shape))
    edges = []
    nxt = 2
    for length in shape.a:
        labels = list(range(nxt, nxt + length))
        nxt += length
        edges.extend(zip(labels, labels[1:]))
        edges.append((1, labels[-1]))
    return Graph(1 + shape.size, frozenset(_norm_edge(*e) for e in edges))


def starlike_branches(shape: StarlikeShape | Iterable[int]) -> list[list[int]]:
    """Vertex labels of each branch of :func:`make_starlike`, leaf first."""
    if not isinstance(shape, StarlikeShape):
        shape = StarlikeShape(tuple(shape))
    out, nxt = [], 2
    for length in shape.a:
        out.append(list(range(nxt, nxt + length)))
        nxt += length
    return out


def make_caterpillar3(d1: int, d2: int, d3: int, allow_bare: bool = False) -> Graph:
    """Spine ``1-2-3`` with ``d_i`` pendant leaves on spine vertex ``i``.

    Leaves are numbered from 4 on: first those of vertex 1, then 2, then 3.
    The leafless case is the bare path ``P_3`` and must be requested with
    ``allow_bare=True``.
    """
    ds = (d1, d2, d3)
    if any(d < 0 for d in ds):
        raise InvalidArgument(f"leaf counts must be non-negative, got {ds}")
    if sum(ds) == 0 and not allow_bare:
        raise InvalidArgument("caterpillar without leaves is a bare path; pass allow_bare=True")
    edges = [(1, 2), (2, 3)]
    nxt = 4
    for spine, d in zip((1, 2, 3), ds):
        for _ in range(d):
            edges.append((spine, nxt))
            nxt += 1
    return Graph(nxt - 1, frozenset(edges))


def random_tree(n: int, rng: random.Random) -> Graph:
    """Uniform random labelled tree on ``n`` vertices (Pruefer decoding)."""
    if n < 1:
        raise InvalidArgument("tree needs n >= 1")
    if n == 1:
        return Graph(1)
    if n == 2:
        return Graph(2, frozenset({(1, 2)}))
    seq = [rng.randint(1, n) for _ in range(n - 2)]
    degree = [1] * (n + 1)
    for x in seq:
        degree[x] += 1
    edges = []
    for x in seq:
        leaf = min(v for v in range(1, n + 1) if degree[v] == 1)
        edges.append(_norm_edge(leaf, x))
        degree[leaf] -= 1
        degree[x] -= 1
    u, v = (w for w in range(1, n + 1) if degree[w] == 1)
    edges.append(_norm_edge(u, v))
    return Graph(n, frozenset(edges))


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    return Graph(n, frozenset(e for e in combinations(range(1, n + 1), 2) if rng.random() < p))


# ------------------------------------------------------------- predicates

def induced_subgraph(G: Graph, S: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Subgraph induced on ``S``, relabelled to ``1..|S|`` in increasing order.

    Returns the graph and the map from old labels to new ones.
    """
    keep = sorted(set(S))
    for v in keep:
        if not 1 <= v <= G.n_vertices:
            raise InvalidArgument(f"vertex {v} not in graph")
    relabel = {v: i for i, v in enumerate(keep, 1)}
    edges = frozenset((relabel[u], relabel[v]) for u, v in G.edges if u in relabel and v in relabel)
    return Graph(len(keep), edges), relabel


def leaves(G: Graph) -> set[int]:
    return {v for v in G.vertices if G.degree(v) == 1}


def connected_components(G: Graph) -> list[set[int]]:
    seen: set[int] = set()
    comps = []
    for s in G.vertices:
        if s in seen:
            continue
        comp = {s}
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in G.neighbors(x):
                if y not in comp:
                    comp.add(y)
                    queue.append(y)
        seen |= comp
        comps.append(comp)
    return comps


def is_connected(G: Graph) -> bool:
    return G.n_vertices > 0 and len(connected_components(G)) == 1


def is_tree(G: Graph) -> bool:
    return is_connected(G) and G.n_edges == G.n_vertices - 1


def is_bipartite(G: Graph) -> bool:
    color: dict[int, int] = {}
    for s in G.vertices:
        if s in color:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in G.neighbors(x):
                if y not in color:
                    color[y] = 1 - color[x]
                    queue.append(y)
                elif color[y] == color[x]:
                    return False
    return True


def _check_budget(G: Graph, max_vertices: int | None, what: str):
    limit = DEFAULT_CAPS.max_search_vertices if max_vertices is None else max_vertices
    if G.n_vertices > limit:
        raise BudgetExceeded(what, limit, G.n_vertices)


def _induced_cycles(G: Graph, min_len: int) -> Iterator[list[int]]:
    """Yield chordless cycles with at least ``min_len`` vertices, each listed
    from its smallest vertex."""
    adj = G.adjacency_masks

    def extend(path: list[int], forbidden: int):
        last = path[-1]
        start = path[0]
        cand = adj[last] & ~forbidden
        while cand:
            low = cand & -cand
            cand ^= low
            nxt = low.bit_length() - 1
            if nxt < start:
                continue
            # nxt must not touch interior path vertices other than ``last``
            interior = 0
            for v in path[1:-1]:
                interior |= 1 << v
            if adj[nxt] & interior:
                continue
            if len(path) >= 2 and (adj[nxt] >> start) & 1:
                if len(path) + 1 >= min_len:
                    yield path + [nxt]
                continue
            yield from extend(path + [nxt], forbidden | (1 << nxt))

    for s in G.vertices:
        yield from extend([s], 1 << s)


def has_long_induced_cycle(G: Graph, min_len: int = 5, max_vertices: int | None = None) -> bool:
    _check_budget(G, max_vertices, "induced-cycle search vertices")
    return next(_induced_cycles(G, min_len), None) is not None


def is_weakly_chordal(G: Graph, max_vertices: int | None = None) -> bool:
    """No induced cycle of length >= 5 in ``G`` or in its complement."""
    _check_budget(G, max_vertices, "induced-cycle search vertices")
    return not (has_long_induced_cycle(G, 5, max_vertices=G.n_vertices)
                or has_long_induced_cycle(G.complement(), 5, max_vertices=G.n_vertices))


# ---------------------------------------------------- independent domination

def q_bruteforce(G: Graph, max_vertices: int | None = None) -> int:
    """Minimum size of a maximal independent set, by enumeration."""
    _check_budget(G, max_vertices, "independent-set enumeration vertices")
    n = G.n_vertices
    if n == 0:
        return 0
    adj = G.adjacency_masks
    everything = sum(1 << v for v in G.vertices)
    for size in range(1, n + 1):
        for S in combinations(G.vertices, size):
            mask = 0
            for v in S:
                mask |= 1 << v
            closed = mask
            ok = True
            for v in S:
                if adj[v] & mask:
                    ok = False
                    break
                closed |= adj[v]
            if ok and closed == everything:
                return size
    raise AssertionError("unreachable: the whole vertex set dominates")


def q_tree(T: Graph) -> int:
    """Independent domination number of a tree by dynamic programming.

    Each vertex carries three costs over its subtree: in the set; outside
    and dominated by a child; outside and waiting for its parent.
    """
    if not is_tree(T):
        raise InvalidArgument("q_tree needs a tree")
    if T.n_vertices == 1:
        return 1
    inf = float("inf")
    root = 1
    parent = {root: 0}
    order = [root]
    for x in order:
        for y in T.neighbors(x):
            if y != parent[x]:
                parent[y] = x
                order.append(y)
    inside: dict[int, float] = {}
    covered: dict[int, float] = {}
    waiting: dict[int, float] = {}
    for v in reversed(order):
        kids = [c for c in T.neighbors(v) if c != parent[v]]
        inside[v] = 1 + sum(min(covered[c], waiting[c]) for c in kids)
        waiting[v] = sum(covered[c] for c in kids)
        if kids:
            base = sum(min(inside[c], covered[c]) for c in kids)
            bump = min(max(0, inside[c] - covered[c]) for c in kids)
            covered[v] = base + bump
        else:
            covered[v] = inf
    return int(min(inside[root], covered[root]))


# ------------------------------------------------------------ text formats

def read_edge_list(path: str | Path) -> Graph:
    return parse_edge_list(Path(path).read_text())


def parse_edge_list(text: str) -> Graph:
    rows = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not rows or len(rows[0]) != 2:
        raise InvalidArgument("edge list must start with a line 'n m'")
    try:
        n, m = int(rows[0][0]), int(rows[0][1])
        edges = [(int(r[0]), int(r[1])) for r in rows[1:]]
    except (ValueError, IndexError):
        raise InvalidArgument("edge list lines must hold two integers") from None
    if len(edges) != m or any(len(r) != 2 for r in rows[1:]):
        raise InvalidArgument(f"edge list announces {m} edges but has {len(edges)}")
    G = Graph.from_edges(n, edges)
    if G.n_edges != m:
        raise InvalidArgument("edge list contains duplicate edges")
    return G


def format_edge_list(G: Graph) -> str:
    lines = [f"{G.n_vertices} {G.n_edges}"] + [f"{u} {v}" for u, v in G.edge_list()]
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class GraphSpec:
    """A parsed graph spec string such as ``cycle:7`` or ``star:3,3,5``."""

    text: str
    kind: str
    params: tuple[int, ...]
    graph: Graph


def parse_graph_spec(text: str) -> GraphSpec:
    kind, sep, rest = text.partition(":")
    kind = kind.strip().lower()
    if not sep:
        raise InvalidArgument(f"graph spec {text!r} must look like kind:args")
    if kind == "file":
        return GraphSpec(text, kind, (), read_edge_list(rest))
    try:
        params = tuple(int(x) for x in rest.split(",") if x.strip())
    except ValueError:
        raise InvalidArgument(f"graph spec {text!r} has non-integer arguments") from None
    if kind == "path" and len(params) == 1:
        G = make_path(params[0])
    elif kind == "cycle" and len(params) == 1:
        G = make_cycle(params[0])
    elif kind == "star" and params:
        G = make_starlike(StarlikeShape(params))
    elif kind == "cat3" and len(params) == 3:
        G = make_caterpillar3(*params, allow_bare=True)
    else:
        raise InvalidArgument(f"unrecognised graph spec {text!r}")
    return GraphSpec(text, kind, params, G)
