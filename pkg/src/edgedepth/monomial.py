"""Monomials and monomial ideals with canonical minimal generating sets.

Ideals keep their generators as dense exponent vectors sorted in
graded-lexicographic order, so two ideals are equal exactly when their
stored generator tuples are equal.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .errors import InvalidArgument
from .graph import Graph

Vector = tuple[int, ...]

_TOKEN = re.compile(r"^x(\d+)(?:\^(\d+))?$")


@dataclass(frozen=True)
class Monomial:
    """Product of variables ``x_i``; ``powers`` holds sorted ``(i, e)`` pairs
    with ``e > 0``. The empty tuple is the unit monomial."""

    powers: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        merged: dict[int, int] = {}
        for var, exp in self.powers:
            if var < 1:
                raise InvalidArgument(f"variable index must be >= 1, got {var}")
            if exp < 0:
                raise InvalidArgument(f"negative exponent for x{var}")
            merged[var] = merged.get(var, 0) + exp
        object.__setattr__(self, "powers", tuple(sorted((v, e) for v, e in merged.items() if e)))

    @classmethod
    def of(cls, exponents: Mapping[int, int] | None = None, **_) -> "Monomial":
        return cls(tuple((exponents or {}).items()))

    @classmethod
    def from_vector(cls, vec: Sequence[int]) -> "Monomial":
        return cls(tuple((i, e) for i, e in enumerate(vec, 1) if e))

    @classmethod
    def parse(cls, text: str) -> "Monomial":
        text = text.strip()
        if text in ("", "1"):
            return cls()
        pairs = []
        for tok in text.split("*"):
            m = _TOKEN.match(tok.strip())
            if not m:
                raise InvalidArgument(f"cannot parse monomial factor {tok!r}")
            pairs.append((int(m.group(1)), int(m.group(2) or 1)))
        return cls(tuple(pairs))

    @property
    def exponents(self) -> dict[int, int]:
        return dict(self.powers)

    @property
    def degree(self) -> int:
        return sum(e for _, e in self.powers)

    @property
    def support(self) -> frozenset[int]:
        return frozenset(v for v, _ in self.powers)

    @property
    def max_var(self) -> int:
        return self.powers[-1][0] if self.powers else 0

    def vector(self, n_vars: int) -> Vector:
        if self.max_var > n_vars:
            raise InvalidArgument(f"monomial {self} uses x{self.max_var} beyond {n_vars} variables")
        vec = [0] * n_vars
        for v, e in self.powers:
            vec[v - 1] = e
        return tuple(vec)

    def __mul__(self, other: "Monomial") -> "Monomial":
        return Monomial(self.powers + other.powers)

    def divides(self, other: "Monomial") -> bool:
        theirs = other.exponents
        return all(theirs.get(v, 0) >= e for v, e in self.powers)

    def lcm(self, other: "Monomial") -> "Monomial":
        out = self.exponents
        for v, e in other.powers:
            out[v] = max(out.get(v, 0), e)
        return Monomial(tuple(out.items()))

    def gcd(self, other: "Monomial") -> "Monomial":
        theirs = other.exponents
        return Monomial(tuple((v, min(e, theirs.get(v, 0))) for v, e in self.powers))

    def quotient(self, other: "Monomial") -> "Monomial":
        """``self / gcd(self, other)``."""
        theirs = other.exponents
        return Monomial(tuple((v, max(0, e - theirs.get(v, 0))) for v, e in self.powers))

    def __truediv__(self, other: "Monomial") -> "Monomial":
        if not other.divides(self):
            raise InvalidArgument(f"{other} does not divide {self}")
        return self.quotient(other)

    def __str__(self) -> str:
        if not self.powers:
            return "1"
        return "*".join(f"x{v}" if e == 1 else f"x{v}^{e}" for v, e in self.powers)

    __repr__ = __str__


def _divides(a: Vector, b: Vector) -> bool:
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def _glex_key(vec: Vector):
    return (sum(vec), tuple(-e for e in vec))


def minimalize(vectors: Iterable[Vector]) -> tuple[Vector, ...]:
    """Minimal elements of a set of exponent vectors under divisibility,
    in graded-lex order."""
    ordered = sorted(set(vectors), key=_glex_key)
    kept: list[Vector] = []
    by_degree: list[tuple[int, Vector]] = []
    for vec in ordered:
        deg = sum(vec)
        # equal-degree distinct vectors never divide each other
        if any(d < deg and _divides(g, vec) for d, g in by_degree):
            continue
        kept.append(vec)
        by_degree.append((deg, vec))
    return tuple(kept)


@dataclass(frozen=True)
class MonomialIdeal:
    """Monomial ideal in ``k[x_1..x_n_vars]`` given by its minimal generators.

    ``vectors`` is the canonical tuple of exponent vectors; construct through
    :meth:`from_generators` or :func:`ideal` to get minimalization.
    """

    n_vars: int
    vectors: tuple[Vector, ...] = ()

    def __post_init__(self):
        if self.n_vars < 0:
            raise InvalidArgument("n_vars must be non-negative")
        vecs = []
        for v in self.vectors:
            v = tuple(int(x) for x in v)
            if len(v) != self.n_vars:
                raise InvalidArgument(f"exponent vector {v} has wrong length for {self.n_vars} variables")
            if any(x < 0 for x in v):
                raise InvalidArgument(f"negative exponent in {v}")
            vecs.append(v)
        object.__setattr__(self, "vectors", minimalize(vecs))

    @classmethod
    def from_generators(cls, n_vars: int, gens: Iterable[Monomial | Vector]) -> "MonomialIdeal":
        vecs = [g.vector(n_vars) if isinstance(g, Monomial) else tuple(g) for g in gens]
        return cls(n_vars, tuple(vecs))

    @classmethod
    def parse(cls, text: str, n_vars: int | None = None) -> "MonomialIdeal":
        body = text.strip()
        if body.startswith("(") and body.endswith(")"):
            body = body[1:-1]
        gens = [Monomial.parse(t) for t in body.split(",") if t.strip() and t.strip() != "0"]
        if n_vars is None:
            n_vars = max((g.max_var for g in gens), default=0)
        return cls.from_generators(n_vars, gens)

    @property
    def generators(self) -> tuple[Monomial, ...]:
        return tuple(Monomial.from_vector(v) for v in self.vectors)

    @property
    def is_zero(self) -> bool:
        return not self.vectors

    @property
    def is_unit(self) -> bool:
        return any(not any(v) for v in self.vectors)

    def __len__(self) -> int:
        return len(self.vectors)

    def support(self) -> frozenset[int]:
        return frozenset(i + 1 for v in self.vectors for i, e in enumerate(v) if e)

    def contains(self, f: Monomial | Vector) -> bool:
        vec = f.vector(self.n_vars) if isinstance(f, Monomial) else tuple(f)
        return any(_divides(g, vec) for g in self.vectors)

    def is_subset(self, other: "MonomialIdeal") -> bool:
        _same_ring(self, other)
        return all(other.contains(g) for g in self.vectors)

    def with_vars(self, n_vars: int) -> "MonomialIdeal":
        """Same generators in a polynomial ring with more variables."""
        if n_vars < self.n_vars:
            raise InvalidArgument("cannot drop variables")
        pad = (0,) * (n_vars - self.n_vars)
        return MonomialIdeal(n_vars, tuple(v + pad for v in self.vectors))

    def __add__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        return ideal_sum(self, other)

    def __mul__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        return product(self, other)

    def __and__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        return intersect(self, other)

    def __str__(self) -> str:
        return "(" + ", ".join(str(g) for g in self.generators) + ")"


def _same_ring(I: MonomialIdeal, J: MonomialIdeal):
    if I.n_vars != J.n_vars:
        raise InvalidArgument(f"ideals live in rings with {I.n_vars} and {J.n_vars} variables")


def ideal(n_vars: int, *gens: str | Monomial | Vector) -> MonomialIdeal:
    """Convenience constructor: ``ideal(3, "x1*x2", "x2*x3")``."""
    parsed = [Monomial.parse(g) if isinstance(g, str) else g for g in gens]
    return MonomialIdeal.from_generators(n_vars, parsed)


def edge_ideal(G: Graph) -> MonomialIdeal:
    n = G.n_vertices
    vecs = []
    for u, v in G.edges:
        vec = [0] * n
        vec[u - 1] = vec[v - 1] = 1
        vecs.append(tuple(vec))
    return MonomialIdeal(n, tuple(vecs))


def product(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _same_ring(I, J)
    return MonomialIdeal(I.n_vars, tuple(
        tuple(a + b for a, b in zip(g, h)) for g in I.vectors for h in J.vectors))


def power(I: MonomialIdeal, t: int) -> MonomialIdeal:
    """``I^t`` by repeated multiplication, minimalizing after each step."""
    if t < 1:
        raise InvalidArgument(f"power needs t >= 1, got {t}")
    result = I
    for _ in range(t - 1):
        result = product(result, I)
    return result


def colon_monomial(I: MonomialIdeal, f: Monomial | Vector) -> MonomialIdeal:
    """``I : f``, generated by ``g / gcd(g, f)`` over the generators ``g``."""
    fv = f.vector(I.n_vars) if isinstance(f, Monomial) else tuple(f)
    return MonomialIdeal(I.n_vars, tuple(
        tuple(max(0, a - b) for a, b in zip(g, fv)) for g in I.vectors))


def colon_variable(I: MonomialIdeal, var: int) -> MonomialIdeal:
    return colon_monomial(I, Monomial(((var, 1),)))


def ideal_sum(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _same_ring(I, J)
    return MonomialIdeal(I.n_vars, I.vectors + J.vectors)


def intersect(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _same_ring(I, J)
    return MonomialIdeal(I.n_vars, tuple(
        tuple(max(a, b) for a, b in zip(g, h)) for g in I.vectors for h in J.vectors))


def equals(I: MonomialIdeal, J: MonomialIdeal) -> bool:
    _same_ring(I, J)
    return I.vectors == J.vectors


def direct_sum(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    """``I + J`` with the variables of ``J`` placed after those of ``I``."""
    zi, zj = (0,) * I.n_vars, (0,) * J.n_vars
    return MonomialIdeal(I.n_vars + J.n_vars,
                         tuple(g + zj for g in I.vectors) + tuple(zi + h for h in J.vectors))


def edge_monomial(n_vars: int, edges: Iterable[tuple[int, int]]) -> Monomial:
    """Product of the edge monomials ``x_u x_v`` (with multiplicity)."""
    pairs = []
    for u, v in edges:
        pairs += [(u, 1), (v, 1)]
    m = Monomial(tuple(pairs))
    if m.max_var > n_vars:
        raise InvalidArgument("edge endpoint beyond the ring")
    return m
