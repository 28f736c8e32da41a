"""The lcm lattice of a monomial ideal and its open-interval order
complexes, kept as a slow independent route to Betti numbers."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from ..config import DEFAULT_CAPS, Caps
from ..errors import BudgetExceeded, InvalidArgument
from ..monomial import Monomial, MonomialIdeal, Vector
from .homology import homology_from_faces


def _lcm(a: Vector, b: Vector) -> Vector:
    return tuple(x if x > y else y for x, y in zip(a, b))


def _divides(a: Vector, b: Vector) -> bool:
    return all(x <= y for x, y in zip(a, b))


@dataclass(frozen=True)
class LcmLattice:
    """All lcms of nonempty sets of minimal generators, plus the bottom
    element ``1`` (the zero vector)."""

    n_vars: int
    vectors: frozenset[Vector]

    @cached_property
    def bottom(self) -> Vector:
        return (0,) * self.n_vars

    @property
    def elements(self) -> frozenset[Monomial]:
        return frozenset(Monomial.from_vector(v) for v in self.vectors)

    def __len__(self) -> int:
        return len(self.vectors)

    def __contains__(self, m) -> bool:
        vec = m.vector(self.n_vars) if isinstance(m, Monomial) else tuple(m)
        return vec in self.vectors

    def below(self, m: Vector) -> list[Vector]:
        """Elements strictly between the bottom and ``m``."""
        return [x for x in self.vectors if x != m and any(x) and _divides(x, m)]


def lcm_lattice(I: MonomialIdeal, caps: Caps = DEFAULT_CAPS) -> LcmLattice:
    """Close the generators under pairwise lcm, breadth first."""
    if I.is_zero:
        raise InvalidArgument("the zero ideal has no lcm lattice")
    gens = I.vectors
    if len(gens) > caps.max_generators:
        raise BudgetExceeded("minimal generators", caps.max_generators, len(gens))
    seen = set(gens)
    frontier = list(gens)
    while frontier:
        fresh = []
        for x in frontier:
            for g in gens:
                y = _lcm(x, g)
                if y not in seen:
                    seen.add(y)
                    fresh.append(y)
                    if len(seen) + 1 > caps.max_lattice:
                        raise BudgetExceeded("lcm lattice size", caps.max_lattice, len(seen) + 1)
        frontier = fresh
    seen.add((0,) * I.n_vars)
    return LcmLattice(I.n_vars, frozenset(seen))


def interval_faces(L: LcmLattice, m: Vector, max_faces: int) -> dict[int, list[tuple]]:
    """Faces of the order complex of the open interval ``(1, m)``: all chains,
    each listed bottom-up, grouped by dimension."""
    inside = sorted(L.below(m), key=lambda v: (sum(v), v))
    up = {x: [y for y in inside if y != x and _divides(x, y)] for x in inside}
    faces: dict[int, list[tuple]] = {-1: [()]}
    total = 1

    def extend(chain: tuple):
        nonlocal total
        for y in up[chain[-1]]:
            longer = chain + (y,)
            faces.setdefault(len(longer) - 1, []).append(longer)
            total += 1
            if total > max_faces:
                raise BudgetExceeded("order complex faces", max_faces, total)
            extend(longer)

    for x in inside:
        faces.setdefault(0, []).append((x,))
        total += 1
        if total > max_faces:
            raise BudgetExceeded("order complex faces", max_faces, total)
        extend((x,))
    # boundary matrices look faces up as sorted tuples under one key
    return {d: sorted(tuple(sorted(f, key=_vkey)) for f in lst) for d, lst in faces.items()}


def _vkey(v):
    return (1, v)


def order_complex_homology(L: LcmLattice, m: Vector, max_faces: int) -> dict[int, int]:
    return homology_from_faces(interval_faces(L, m, max_faces), exact=True)
