"""Simplicial complexes and their reduced homology over the rationals.

Ranks of boundary matrices are computed exactly over the rationals, either
by sparse elimination or by dense fraction-free (Bareiss) elimination on
Python integers. A faster modular rank is also provided; it can only
under-estimate the rational rank, which is what the certification in
:func:`certified_betti` relies on.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

from ..errors import BudgetExceeded

MOD_PRIME = 2_147_483_647


def rank_fraction_free(rows: list[list[int]]) -> int:
    """Exact rank of an integer matrix by Bareiss elimination."""
    m = [list(r) for r in rows if any(r)]
    if not m:
        return 0
    n_cols = len(m[0])
    rank = 0
    prev = 1
    for col in range(n_cols):
        pivot = next((r for r in range(rank, len(m)) if m[r][col]), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        p = m[rank][col]
        for r in range(rank + 1, len(m)):
            a = m[r][col]
            row, top = m[r], m[rank]
            for c in range(col + 1, n_cols):
                row[c] = (row[c] * p - a * top[c]) // prev
            row[col] = 0
        prev = p
        rank += 1
        if rank == len(m):
            break
    return rank


def rank_mod_p(rows: list[list[int]], p: int = MOD_PRIME) -> int:
    m = [[x % p for x in r] for r in rows]
    m = [r for r in m if any(r)]
    if not m:
        return 0
    n_cols = len(m[0])
    rank = 0
    for col in range(n_cols):
        pivot = next((r for r in range(rank, len(m)) if m[r][col]), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        top = m[rank]
        inv = pow(top[col], p - 2, p)
        for r in range(rank + 1, len(m)):
            a = m[r][col]
            if a:
                f = a * inv % p
                row = m[r]
                for c in range(col, n_cols):
                    if top[c]:
                        row[c] = (row[c] - f * top[c]) % p
        rank += 1
        if rank == len(m):
            break
    return rank


@dataclass(frozen=True)
class SimplicialComplex:
    """Complex given by its facets; faces are implied by closure.

    The complex with the single facet ``frozenset()`` is ``{∅}``, whose reduced
    homology is one-dimensional in degree -1. With no facets at all the
    complex is void and has no homology.
    """

    facets: frozenset[frozenset]

    @classmethod
    def from_facets(cls, facets: Iterable[Iterable]) -> "SimplicialComplex":
        sets = {frozenset(f) for f in facets}
        maximal = frozenset(f for f in sets if not any(f < g for g in sets))
        return cls(maximal)

    @cached_property
    def vertices(self) -> frozenset:
        return frozenset(v for f in self.facets for v in f)

    @cached_property
    def dimension(self) -> int:
        return max((len(f) for f in self.facets), default=0) - 1

    def faces(self, max_faces: int | None = None) -> dict[int, list[tuple]]:
        """Faces grouped by dimension (-1 for the empty face), each as a
        sorted tuple, in a fixed order."""
        seen: set[tuple] = set()
        for f in self.facets:
            items = sorted(f, key=_sort_key)
            n = len(items)
            for mask in range(1 << n):
                seen.add(tuple(items[i] for i in range(n) if (mask >> i) & 1))
                if max_faces is not None and len(seen) > max_faces:
                    raise BudgetExceeded("complex faces", max_faces, len(seen))
        by_dim: dict[int, list[tuple]] = {}
        for face in seen:
            by_dim.setdefault(len(face) - 1, []).append(face)
        for d in by_dim:
            by_dim[d].sort(key=lambda face: [_sort_key(x) for x in face])
        return by_dim

    def reduced_homology(self, exact: bool = True, max_faces: int | None = None) -> dict[int, int]:
        """Nonzero reduced Betti numbers ``{dimension: rank}``."""
        if not self.facets:
            return {}
        return homology_from_faces(self.faces(max_faces), exact)


def sparse_boundary(faces: dict[int, list[tuple]], d: int) -> list[dict[int, int]]:
    """Boundary map from dimension ``d`` to ``d - 1`` as sparse rows
    ``{column: ±1}``, one per ``d``-face; faces are sorted tuples."""
    lower = {f: i for i, f in enumerate(faces.get(d - 1, []))}
    rows = []
    for face in faces.get(d, []):
        rows.append({lower[face[:pos] + face[pos + 1:]]: -1 if pos % 2 else 1
                     for pos in range(len(face))})
    return rows


def boundary_rows(faces: dict[int, list[tuple]], d: int) -> list[list[int]]:
    """Dense version of :func:`sparse_boundary`."""
    width = len(faces.get(d - 1, []))
    dense = []
    for row in sparse_boundary(faces, d):
        r = [0] * width
        for c, x in row.items():
            r[c] = x
        dense.append(r)
    return dense


def rank_sparse_exact(rows: list[dict[int, int]]) -> int:
    """Exact rational rank of a sparse integer matrix.

    Rows are reduced one at a time against normalized pivot rows; all
    arithmetic is in :class:`fractions.Fraction` so nothing is rounded.
    """
    pivots: dict[int, dict[int, Fraction]] = {}
    for raw in rows:
        row = {c: Fraction(x) for c, x in raw.items() if x}
        while row:
            col = min(row)
            piv = pivots.get(col)
            if piv is None:
                lead = row[col]
                pivots[col] = {c: x / lead for c, x in row.items()}
                break
            f = row[col]
            for c, x in piv.items():
                y = row.get(c, 0) - f * x
                if y:
                    row[c] = y
                else:
                    row.pop(c, None)
    return len(pivots)


def homology_from_faces(faces: dict[int, list[tuple]], exact: bool = True) -> dict[int, int]:
    """Nonzero reduced Betti numbers from the full face list (closed under
    taking subsets, including the empty face at dimension -1).

    ``exact=False`` switches to dense ranks modulo a prime, which can only
    overstate homology.
    """
    if not faces:
        return {}
    top = max(faces)
    if exact:
        ranks = {d: rank_sparse_exact(sparse_boundary(faces, d)) if d >= 0 else 0
                 for d in range(-1, top + 2)}
    else:
        ranks = {d: rank_mod_p(boundary_rows(faces, d)) if d >= 0 else 0
                 for d in range(-1, top + 2)}
    out = {}
    for d in range(-1, top + 1):
        h = len(faces.get(d, [])) - ranks[d] - ranks[d + 1]
        if h:
            out[d] = h
    return out


def _sort_key(x):
    return (0, x) if isinstance(x, int) else (1, x)


def mask_complex(facets: Sequence[int]) -> SimplicialComplex:
    """Complex from facets given as vertex bitmasks."""
    return SimplicialComplex.from_facets(
        [i for i in range(f.bit_length()) if (f >> i) & 1] for f in facets)


def euler_reduced(facets: Sequence[int]) -> int:
    """Reduced Euler characteristic of a bitmask complex."""
    seen = set()
    for f in facets:
        sub = f
        while True:
            seen.add(sub)
            if sub == 0:
                break
            sub = (sub - 1) & f
    return sum(-1 if bin(s).count("1") % 2 == 0 else 1 for s in seen)


def certified_betti(facets: Sequence[int], modular: Sequence[int]) -> dict[int, int]:
    """Rational reduced homology of a bitmask complex, given its homology
    modulo a prime indexed by face size (``modular[k]`` is the degree
    ``k - 1`` rank).

    Rational ranks never exceed modular ones, and both share the Euler
    characteristic, so when the modular homology sits in at most one degree
    it already equals the rational homology. Otherwise ranks are recomputed
    exactly.
    """
    nonzero = {k - 1: h for k, h in enumerate(modular) if h}
    if len(nonzero) <= 1:
        return nonzero
    return mask_complex(facets).reduced_homology(exact=True)
