"""Exact multigraded Betti numbers, projective dimension and depth.

The default route walks the lcm lattice and reads ``beta_{i,m}(I)`` off the
reduced homology of the upper Koszul complex
``K^m = {F ⊆ supp m : x^(m - F) ∈ I}`` in degree ``i - 1``; only lattice
elements can contribute. Each complex is first collapsed through dominated
vertices, which leaves only a small fraction to feed into linear algebra.

The ``order`` route computes the same numbers from order complexes of open
lattice intervals and is only practical for small ideals.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..config import DEFAULT_CAPS, Caps
from ..errors import BudgetExceeded, InvalidArgument
from ..graph import Graph
from ..monomial import Monomial, MonomialIdeal, edge_ideal, power
from . import _backend
from .homology import certified_betti
from .lattice import lcm_lattice, order_complex_homology

METHODS = ("koszul", "order")


@dataclass(frozen=True)
class BettiTable:
    """Nonzero ``beta_{i,m}(I)`` keyed by ``(i, exponent vector)``.

    Indices are those of the ideal, so ``i = 0`` counts minimal generators;
    the quotient ``S/I`` has ``beta_{i+1,m}(S/I) = beta_{i,m}(I)``.
    """

    n_vars: int
    raw: dict[tuple[int, tuple[int, ...]], int] = field(default_factory=dict)
    lattice_size: int = 0

    @property
    def entries(self) -> dict[tuple[int, Monomial], int]:
        return {(i, Monomial.from_vector(m)): b for (i, m), b in self.raw.items()}

    def get(self, i: int, m: Monomial | tuple[int, ...]) -> int:
        vec = m.vector(self.n_vars) if isinstance(m, Monomial) else tuple(m)
        return self.raw.get((i, vec), 0)

    def quotient_entry(self, i: int, m: Monomial | tuple[int, ...]) -> int:
        """``beta_{i,m}(S/I)``; ``beta_{0,1}(S/I) = 1``."""
        vec = m.vector(self.n_vars) if isinstance(m, Monomial) else tuple(m)
        if i == 0:
            return 1 if not any(vec) else 0
        return self.raw.get((i - 1, vec), 0)

    def totals(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for (i, _), b in self.raw.items():
            out[i] = out.get(i, 0) + b
        return dict(sorted(out.items()))

    @property
    def pd_ideal(self) -> int | None:
        return max((i for i, _ in self.raw), default=None)

    @property
    def pd(self) -> int:
        """Projective dimension of ``S/I`` (0 for the zero ideal)."""
        top = self.pd_ideal
        return 0 if top is None else top + 1

    @property
    def depth(self) -> int:
        return self.n_vars - self.pd

    def to_json(self) -> dict:
        rows = [{"i": i, "m": str(Monomial.from_vector(m)), "beta": b}
                for (i, m), b in sorted(self.raw.items(), key=lambda kv: (kv[0][0], sum(kv[0][1]), kv[0][1]))]
        return {"n_vars": self.n_vars, "pd": self.pd, "depth": self.depth,
                "totals": {str(i): b for i, b in self.totals().items()}, "entries": rows}


def _support_compression(I: MonomialIdeal) -> tuple[list[int], list[tuple[int, ...]]]:
    used = sorted({j for g in I.vectors for j, e in enumerate(g) if e})
    return used, [tuple(g[j] for j in used) for g in I.vectors]


def _expand(vec: tuple[int, ...], used: list[int], n_vars: int) -> tuple[int, ...]:
    out = [0] * n_vars
    for j, e in zip(used, vec):
        out[j] = e
    return tuple(out)


def betti_numbers(I: MonomialIdeal, caps: Caps = DEFAULT_CAPS, method: str = "koszul",
                  backend: str | None = None) -> BettiTable:
    if method not in METHODS:
        raise InvalidArgument(f"unknown method {method!r}; choose from {METHODS}")
    if I.is_zero:
        return BettiTable(I.n_vars)
    if I.is_unit:
        raise InvalidArgument("the unit ideal has a zero quotient")
    if len(I) > caps.max_generators:
        raise BudgetExceeded("minimal generators", caps.max_generators, len(I))
    if method == "order":
        return _betti_order(I, caps)
    used, gens = _support_compression(I)
    count, cores = _backend.koszul_cores(gens, len(used), caps.max_lattice, backend)
    raw: dict[tuple[int, tuple[int, ...]], int] = {}
    for m, facets, modular in cores:
        full = _expand(m, used, I.n_vars)
        for d, h in certified_betti(facets, modular).items():
            raw[(d + 1, full)] = h
    return BettiTable(I.n_vars, raw, count)


def _betti_order(I: MonomialIdeal, caps: Caps) -> BettiTable:
    L = lcm_lattice(I, caps)
    raw = {}
    for m in L.vectors:
        if not any(m):
            continue
        for d, h in order_complex_homology(L, m, caps.max_faces).items():
            # open interval in degree d - 1 of S/I  <->  degree d + 1 of I
            raw[(d + 1, m)] = h
    return BettiTable(I.n_vars, raw, len(L) - 1)


def pd_oracle(I: MonomialIdeal, caps: Caps = DEFAULT_CAPS, **kw) -> int:
    return betti_numbers(I, caps, **kw).pd


def depth_oracle(I: MonomialIdeal, caps: Caps = DEFAULT_CAPS, **kw) -> int:
    """``n_vars - pd(S/I)`` by Auslander-Buchsbaum."""
    return betti_numbers(I, caps, **kw).depth


def depth_power_oracle(G: Graph, t: int, caps: Caps = DEFAULT_CAPS, **kw) -> int:
    if t < 1:
        raise InvalidArgument(f"power must be >= 1, got {t}")
    return depth_oracle(power(edge_ideal(G), t), caps, **kw)


def power_generator_count(G: Graph, t: int) -> int:
    return len(power(edge_ideal(G), t))
