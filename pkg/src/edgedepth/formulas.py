"""Closed-form depth values for powers of edge ideals.

All functions return plain integers. ``depth`` always means the depth of
``S / I^t`` where ``S`` has one variable per vertex, isolated ones included.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .errors import InvalidArgument, UnsupportedFamily
from .graph import Graph, GraphSpec, StarlikeShape, is_tree, leaves, q_tree


def ceil_div(a: int, b: int) -> int:
    return -((-a) // b)


def phi(n: int, t: int) -> int:
    """``ceil((n - t + 1) / 3)``, which may be zero or negative."""
    return ceil_div(n - t + 1, 3)


def _need_power(t: int):
    if t < 1:
        raise InvalidArgument(f"power must be >= 1, got {t}")


def depth_path(n: int) -> int:
    if n < 2:
        raise InvalidArgument("path depth needs n >= 2")
    return ceil_div(n, 3)


def depth_cycle(n: int) -> int:
    if n < 3:
        raise InvalidArgument("cycle depth needs n >= 3")
    return ceil_div(n - 1, 3)


def depth_path_power(n: int, t: int) -> int:
    if n < 2:
        raise InvalidArgument("path depth needs n >= 2")
    _need_power(t)
    return max(phi(n, t), 1)


# C_3: the triangle's powers have depth 1 then 0; C_4 is K_{2,2}, always 1.
_SMALL_CYCLES = {3: (1, 0), 4: (1, 1)}


def depth_cycle_power(n: int, t: int) -> int:
    if n < 3:
        raise InvalidArgument("cycle depth needs n >= 3")
    _need_power(t)
    if n in _SMALL_CYCLES:
        first, rest = _SMALL_CYCLES[n]
        return first if t == 1 else rest
    if t == 1:
        return ceil_div(n - 1, 3)
    if t < ceil_div(n + 1, 2):
        return phi(n, t)
    return 1 if n % 2 == 0 else 0


def g_value(a: StarlikeShape | Sequence[int]) -> int:
    shape = a if isinstance(a, StarlikeShape) else StarlikeShape(tuple(a))
    alpha0, alpha1, alpha2 = shape.alpha()
    base = sum(ceil_div(x - 1, 3) for x in shape.a)
    return base if (alpha1 == 0 and alpha2 != 0) else base + 1


@dataclass(frozen=True)
class BetaSplit:
    """How ``t - 1`` is spread over the branches: ``beta1`` branches of
    residue 2 lose one vertex, ``beta2`` of residue 0 lose two, and
    ``beta3`` counts leftover triples. ``a`` is the reordered shape and ``b``
    the reduced one."""

    t: int
    a: tuple[int, ...]
    alpha: tuple[int, int, int]
    beta1: int
    beta2: int
    beta3: int
    b: tuple[int, ...]


def canonical_order(a: Sequence[int]) -> tuple[int, ...]:
    """Residue-2 branches, then residue 0, then residue 1; longer first."""
    rank = {2: 0, 0: 1, 1: 2}
    return tuple(sorted(a, key=lambda x: (rank[x % 3], -x)))


def beta_split(a: StarlikeShape | Sequence[int], t: int) -> BetaSplit:
    _need_power(t)
    shape = a if isinstance(a, StarlikeShape) else StarlikeShape(tuple(a))
    ordered = canonical_order(shape.a)
    alpha0, alpha1, alpha2 = shape.alpha()
    beta1 = min(alpha2, t - 1)
    beta2 = min(alpha0, max(0, t - 1 - alpha2) // 2)
    beta3 = max(0, t - 1 - beta1 - 2 * beta2) // 3
    b = list(ordered)
    for i in range(beta1):
        b[i] -= 1
    for i in range(alpha2, alpha2 + beta2):
        b[i] -= 2
    return BetaSplit(t, ordered, (alpha0, alpha1, alpha2), beta1, beta2, beta3, tuple(b))


def starlike_theorem_range(a: StarlikeShape | Sequence[int]) -> int:
    """Largest power covered by the starlike formula, ``|a| - k``; beyond it
    the depth has reached its limit value 1."""
    shape = a if isinstance(a, StarlikeShape) else StarlikeShape(tuple(a))
    return shape.size - shape.k


def min_g_reduction(a: StarlikeShape | Sequence[int], r: int) -> int:
    """Smallest ``g(a - x)`` over ``0 <= x_i <= a_i - 1`` with ``|x| = r``.

    ``g`` only sees the sum of ``ceil((b_i - 1) / 3)`` and whether residues
    1 and 2 mod 3 occur, so a dynamic program over the branches suffices.
    """
    shape = a if isinstance(a, StarlikeShape) else StarlikeShape(tuple(a))
    if not 0 <= r <= shape.size - shape.k:
        raise InvalidArgument(f"cannot remove {r} vertices from the branches of {shape.a}")
    # (used, residue 1 seen, residue 2 seen) -> least ceiling sum
    states: dict[tuple[int, bool, bool], int] = {(0, False, False): 0}
    for length in shape.a:
        nxt: dict[tuple[int, bool, bool], int] = {}
        for (used, r1, r2), base in states.items():
            for x in range(min(length - 1, r - used) + 1):
                b = length - x
                key = (used + x, r1 or b % 3 == 1, r2 or b % 3 == 2)
                value = base + ceil_div(b - 1, 3)
                if value < nxt.get(key, value + 1):
                    nxt[key] = value
        states = nxt
    return min(base + (0 if (not r1 and r2) else 1)
               for (used, r1, r2), base in states.items() if used == r)


def depth_starlike_closed_form(a: StarlikeShape | Sequence[int], t: int) -> int:
    """``g(b) - beta3`` from :func:`beta_split`, for ``1 <= t <= |a| - k``.

    This evaluates the minimum in :func:`min_g_reduction` in closed form. It
    agrees with it on most shapes but overshoots by one on some, for example
    ``(3,)`` and ``(3, 3, 3)`` at ``t = 2``; :func:`depth_starlike_power`
    therefore uses the minimum directly.
    """
    _need_power(t)
    if t > starlike_theorem_range(a):
        raise InvalidArgument("the closed form covers 1 <= t <= |a| - k only")
    split = beta_split(a, t)
    return g_value(split.b) - split.beta3


def depth_starlike_power(a: StarlikeShape | Sequence[int], t: int) -> int:
    """Depth of ``S / I(T_a)^t``: ``min g(a - x)`` over reductions removing
    ``t - 1`` vertices for ``t <= |a| - k``, and the limit value 1 after."""
    _need_power(t)
    if t > starlike_theorem_range(a):
        return 1
    return min_g_reduction(a, t - 1)


def _check_caterpillar(d1: int, d2: int, d3: int, allow_bare: bool):
    if min(d1, d2, d3) < 0:
        raise InvalidArgument("leaf counts must be non-negative")
    if d1 + d2 + d3 == 0 and not allow_bare:
        raise InvalidArgument("caterpillar without leaves is a bare path; pass allow_bare=True")


def depth_caterpillar3_power(d1: int, d2: int, d3: int, t: int, allow_bare: bool = False) -> int:
    _check_caterpillar(d1, d2, d3, allow_bare)
    _need_power(t)
    if t == 1:
        return min(d1 + d3 + 1, d2 + 2)
    if t == 2:
        return min(d1 + 1, d2 + 2, d3 + 1)
    return 1


def depth_tree(T: Graph) -> int:
    if not is_tree(T):
        raise InvalidArgument("depth_tree needs a tree")
    return q_tree(T)


def dstab_tree(T: Graph) -> int:
    """Index of depth stability, ``n`` minus the number of leaves (at least 1)."""
    if not is_tree(T) or T.n_vertices < 2:
        raise InvalidArgument("dstab_tree needs a tree with at least one edge")
    return max(1, T.n_vertices - len(leaves(T)))


def dstab_cycle(n: int) -> int:
    if n < 5:
        raise InvalidArgument("dstab_cycle needs n >= 5")
    return ceil_div(n + 1, 2)


def _at(d: Sequence[int] | Mapping[int, int], t: int, name: str) -> int:
    try:
        return d[t] if isinstance(d, Mapping) else d[t - 1]
    except (IndexError, KeyError):
        raise InvalidArgument(f"{name} has no depth value for power {t}") from None


def depth_sum_powers(dI: Sequence[int] | Mapping[int, int], dJ: Sequence[int] | Mapping[int, int],
                     s: int) -> int:
    """Depth of ``(I + J)^s`` for ideals in disjoint sets of variables, from
    the depth profiles of ``I`` and ``J``.

    Sequences are read with position 0 holding power 1; mappings are keyed by
    the power itself.
    """
    _need_power(s)
    terms = [_at(dI, s - j + 1, "dI") + _at(dJ, j, "dJ") for j in range(1, s + 1)]
    terms += [_at(dI, s - i, "dI") + _at(dJ, i, "dJ") + 1 for i in range(1, s)]
    return min(terms)


@dataclass(frozen=True)
class DepthProfile:
    """Depth values for powers ``1..len(values)`` with the known limit."""

    values: tuple[int, ...]
    stable_value: int | None = None
    stable_index: int | None = None
    source: str = "formula"
    notes: tuple[str, ...] = field(default=())

    def __post_init__(self):
        if self.stable_index is not None and self.stable_value is not None:
            for t in range(self.stable_index, len(self.values) + 1):
                if self.values[t - 1] != self.stable_value:
                    raise InvalidArgument(f"profile value at power {t} differs from the stable value")

    def at(self, t: int) -> int:
        if 1 <= t <= len(self.values):
            return self.values[t - 1]
        if self.stable_index is not None and t >= self.stable_index and self.stable_value is not None:
            return self.stable_value
        raise InvalidArgument(f"no profile value for power {t}")


# ---------------------------------------------------------------- dispatch

FORMULA_FAMILIES = ("path", "cycle", "star", "cat3")


def formula_for_spec(spec: GraphSpec, t: int) -> int:
    """Closed-form depth for a parsed graph spec; arbitrary trees are
    supported at ``t = 1`` only."""
    _need_power(t)
    p = spec.params
    if spec.kind == "path":
        return depth_path_power(p[0], t) if p[0] >= 2 else _single_vertex()
    if spec.kind == "cycle":
        return depth_cycle_power(p[0], t)
    if spec.kind == "star":
        return depth_starlike_power(p, t)
    if spec.kind == "cat3":
        return depth_caterpillar3_power(*p, t, allow_bare=True)
    if t == 1 and is_tree(spec.graph) and spec.graph.n_vertices >= 2:
        return depth_tree(spec.graph)
    raise UnsupportedFamily(
        f"no closed form for {spec.text!r} at power {t}; use the 'oracle' subcommand")


def _single_vertex() -> int:
    raise UnsupportedFamily("a single vertex has the zero edge ideal; use the 'oracle' subcommand")


def dstab_for_spec(spec: GraphSpec) -> tuple[int, int] | None:
    """``(stable_index, stable_value)`` where a formula is known."""
    G = spec.graph
    if spec.kind == "cycle" and spec.params[0] >= 5:
        n = spec.params[0]
        return dstab_cycle(n), (1 if n % 2 == 0 else 0)
    if spec.kind == "cycle":
        first, rest = _SMALL_CYCLES[spec.params[0]]
        return (1 if first == rest else 2), rest
    if is_tree(G) and G.n_vertices >= 2:
        return dstab_tree(G), 1
    return None


def profile_for_spec(spec: GraphSpec, t_max: int) -> DepthProfile:
    if t_max < 1:
        raise InvalidArgument("max power must be >= 1")
    values = tuple(formula_for_spec(spec, t) for t in range(1, t_max + 1))
    stab = dstab_for_spec(spec)
    notes: tuple[str, ...] = ()
    if spec.kind == "star":
        s = starlike_theorem_range(spec.params)
        if t_max > s:
            notes = (f"powers above {s} use the limit value 1",)
    if stab is None:
        return DepthProfile(values, notes=notes)
    return DepthProfile(values, stable_value=stab[1], stable_index=stab[0], notes=notes)
