"""Pure-Python lattice walk and core reduction.

Same contract as the compiled kernel: :func:`koszul_cores` walks every
element ``m`` of the lcm lattice of the given generators and, for each one
whose upper Koszul complex is not obviously contractible, reports the
collapsed complex together with its reduced homology modulo a prime.
"""

from __future__ import annotations

from ..errors import BudgetExceeded
from .homology import MOD_PRIME


def reduce_facets(facets: list[int]) -> list[int] | None:
    """Collapse dominated vertices. Returns ``None`` when the complex turns
    out to be a cone (hence acyclic), otherwise the reduced facet list."""
    facets = list(set(facets))
    while True:
        facets = [f for f in facets if not any(f != g and f & g == f for g in facets)]
        common = ~0
        union = 0
        for f in facets:
            common &= f
            union |= f
        if common:
            return None
        changed = False
        v = 0
        while union >> v:
            bit = 1 << v
            if union & bit:
                meet = ~0
                for f in facets:
                    if f & bit:
                        meet &= f
                if meet & ~bit:
                    facets = list({f & ~bit for f in facets})
                    changed = True
                    break
            v += 1
        if not changed:
            return facets


def _faces_by_size(facets: list[int]) -> list[list[int]]:
    seen = set()
    for f in facets:
        sub = f
        while True:
            seen.add(sub)
            if sub == 0:
                break
            sub = (sub - 1) & f
    top = max(bin(f).count("1") for f in facets)
    out: list[list[int]] = [[] for _ in range(top + 1)]
    for s in seen:
        out[bin(s).count("1")].append(s)
    for lst in out:
        lst.sort()
    return out


def _rank_mod(rows: list[dict[int, int]], p: int) -> int:
    """Rank of a sparse matrix given as ``{column: value}`` rows."""
    pivots: dict[int, dict[int, int]] = {}
    rank = 0
    for row in rows:
        row = {c: x % p for c, x in row.items() if x % p}
        while row:
            col = min(row)
            if col not in pivots:
                inv = pow(row[col], p - 2, p)
                pivots[col] = {c: x * inv % p for c, x in row.items()}
                rank += 1
                break
            piv = pivots[col]
            f = row[col]
            for c, x in piv.items():
                y = (row.get(c, 0) - f * x) % p
                if y:
                    row[c] = y
                else:
                    row.pop(c, None)
    return rank


def homology_modp(facets: list[int], n_vars: int | None = None, p: int = MOD_PRIME) -> list[int]:
    """Reduced homology ranks modulo ``p`` of a bitmask complex, indexed by
    face size (entry ``k`` is the degree ``k - 1`` rank)."""
    faces = _faces_by_size(facets)
    index = [{f: i for i, f in enumerate(lst)} for lst in faces]
    ranks = [0] * (len(faces) + 1)
    for k in range(1, len(faces)):
        rows = []
        for f in faces[k]:
            row = {}
            sign = 1
            rest = f
            while rest:
                low = rest & -rest
                rest ^= low
                row[index[k - 1][f ^ low]] = sign
                sign = -sign
            rows.append(row)
        ranks[k] = _rank_mod(rows, p)
    return [len(faces[k]) - ranks[k] - ranks[k + 1] for k in range(len(faces))]


def koszul_cores(gens: list[tuple[int, ...]], n_vars: int, max_elements: int):
    """Walk the lcm lattice of ``gens`` (distinct exponent vectors).

    Returns ``(lattice_size, cores)`` where ``lattice_size`` counts the
    non-bottom lattice elements and each core is ``(m, facets, modular)``:
    the lattice element, the reduced facets of its upper Koszul complex as
    variable bitmasks, and the modular homology from :func:`homology_modp`.
    """
    rho = [max((g[k] for g in gens), default=0) for k in range(n_vars)]
    cores = []
    count = 0
    m = [0] * n_vars

    def leaf(lst):
        nonlocal count
        facets = []
        covered = 0
        for g in lst:
            T = 0
            for j in range(n_vars):
                if g[j] < m[j]:
                    T |= 1 << j
                else:
                    covered |= 1 << j
            facets.append(T)
        support = 0
        for j in range(n_vars):
            if m[j]:
                support |= 1 << j
        if covered & support != support:
            return
        count += 1
        if count > max_elements:
            raise BudgetExceeded("lcm lattice size", max_elements, count)
        reduced = reduce_facets(facets)
        if reduced is not None:
            cores.append((tuple(m), tuple(sorted(reduced)), tuple(homology_modp(reduced))))

    def walk(k, lst, need):
        if k == n_vars:
            leaf(lst)
            return
        buckets: list[list] = [[] for _ in range(rho[k] + 1)]
        for g in lst:
            buckets[g[k]].append(g)
        acc: list = []
        seen_need = set()
        for v in range(rho[k] + 1):
            new = buckets[v]
            acc = acc + new
            for g in new:
                for j in need:
                    if g[j] == m[j]:
                        seen_need.add(j)
            if not acc or (v > 0 and not new):
                continue
            if len(seen_need) != len(need):
                continue
            m[k] = v
            walk(k + 1, acc, need + (k,) if v else need)
        m[k] = 0

    if gens:
        walk(0, list(gens), ())
    return count, cores
