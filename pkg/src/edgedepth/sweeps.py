"""Verification sweeps: closed forms and combinatorial procedures against the
Betti-number oracle over bounded families of graphs.

A sweep is a list of picklable :class:`Case` values; :func:`run_case` turns
one into a :class:`RunReport`, so cases can be spread over worker processes.
"""

from __future__ import annotations

import random
import time
from dataclasses import asdict, dataclass, field
from typing import Iterable, Iterator

from .colon import (EdgeProduct, banerjee_colon_graph, banerjee_colon_ideal, consecutive_factors,
                    cycle_colon_graph, monomial_colon, path_colon_graph)
from .config import Caps
from .errors import BudgetExceeded, EdgeDepthError
from .formulas import (ceil_div, depth_caterpillar3_power, depth_cycle_power, depth_path_power,
                       depth_starlike_power, phi)
from .graph import (Graph, StarlikeShape, is_weakly_chordal, make_caterpillar3, make_cycle,
                    make_path, make_starlike, q_tree, random_graph, random_tree)
from .kimura import d_value
from .oracle import depth_oracle, depth_power_oracle
from .monomial import edge_ideal

FAMILIES = ("paths", "cycles", "starlike", "caterpillars", "trees", "kimura", "colon")


@dataclass(frozen=True)
class Case:
    family: str
    label: str
    power: int
    params: tuple = ()

    @property
    def key(self):
        return (FAMILIES.index(self.family) if self.family in FAMILIES else 99, self.label, self.power)


@dataclass
class RunReport:
    """Outcome of one case. ``agreement`` compares the two depths when both
    are known; structural checks (colon sweeps) report ``match`` instead."""

    spec: str
    power: int
    formula_depth: int | None = None
    oracle_depth: int | None = None
    match: bool | None = None
    status: str = "ok"
    note: str = ""
    timing_ms: float | None = field(default=None, compare=False)

    @property
    def agreement(self) -> bool | None:
        if self.formula_depth is not None and self.oracle_depth is not None:
            return self.formula_depth == self.oracle_depth
        return self.match

    def record(self, timing: bool = False) -> dict:
        out = asdict(self)
        out["agreement"] = self.agreement
        if not timing:
            out.pop("timing_ms")
        out = {k: v for k, v in out.items() if v is not None and v != ""}
        return out


# ------------------------------------------------------------ case builders

def path_cases(max_n: int, max_t: int) -> list[Case]:
    return [Case("paths", f"path:{n}", t, (n,))
            for n in range(2, max_n + 1) for t in range(1, min(n - 1, max_t) + 1)]


def cycle_cases(max_n: int, max_t: int) -> list[Case]:
    return [Case("cycles", f"cycle:{n}", t, (n,))
            for n in range(3, max_n + 1) for t in range(1, min(ceil_div(n + 1, 2) + 1, max_t) + 1)]


def starlike_shapes(max_k: int, max_size: int) -> Iterator[tuple[int, ...]]:
    def rec(prefix: tuple[int, ...], cap: int, left: int):
        if prefix:
            yield prefix
        if len(prefix) == max_k:
            return
        for a in range(min(cap, left), 0, -1):
            yield from rec(prefix + (a,), a, left - a)

    yield from rec((), max_size, max_size)


def starlike_cases(max_size: int, max_t: int, max_k: int = 3) -> list[Case]:
    return [Case("starlike", "star:" + ",".join(map(str, a)), t, a)
            for a in sorted(starlike_shapes(max_k, max_size)) for t in range(1, max_t + 1)]


def caterpillar_cases(max_d: int, max_t: int) -> list[Case]:
    return [Case("caterpillars", f"cat3:{d1},{d2},{d3}", t, (d1, d2, d3))
            for d1 in range(max_d + 1) for d2 in range(max_d + 1) for d3 in range(max_d + 1)
            for t in range(1, max_t + 1)]


def _edges_label(G: Graph) -> str:
    return f"edges:{G.n_vertices};" + ",".join(f"{u}-{v}" for u, v in G.edge_list())


def _parse_edges_label(label: str) -> Graph:
    head, _, body = label.partition(";")
    n = int(head.split(":")[1])
    edges = [tuple(map(int, e.split("-"))) for e in body.split(",") if e]
    return Graph.from_edges(n, edges)


def tree_cases(samples: int, max_n: int, seed: int) -> list[Case]:
    rng = random.Random(seed)
    out = []
    for i in range(samples):
        T = random_tree(rng.randint(2, max_n), rng)
        out.append(Case("trees", f"#{i:03d} " + _edges_label(T), 1))
    return out


def weakly_chordal_sample(samples: int, max_n: int, seed: int, min_n: int = 2) -> list[Graph]:
    rng = random.Random(seed)
    out = []
    while len(out) < samples:
        n = rng.randint(min_n, max_n)
        G = random_graph(n, rng.uniform(0.2, 0.8), rng)
        if G.edges and is_weakly_chordal(G):
            out.append(G)
    return out


def kimura_cases(samples: int, max_n: int, seed: int) -> list[Case]:
    out = [Case("kimura", f"#{i:03d} " + _edges_label(G), 1)
           for i, G in enumerate(weakly_chordal_sample(samples, max_n, seed))]
    out += [Case("kimura", f"path-colon:{n},{t}", 1, (n, t))
            for n in range(4, max_n + 2) for t in range(2, n - 1)]
    return out


def colon_cases(max_n: int, max_t: int) -> list[Case]:
    out = []
    for n in range(3, max_n + 1):
        for kind in ("path", "cycle"):
            for t in range(1, max_t + 1):
                if t - 1 <= (n - 1 if kind == "path" else n) - 1:
                    out.append(Case("colon", f"{kind}:{n}", t, (kind, n)))
    return out


def build_cases(family: str, caps: Caps, samples: int | None = None, seed: int = 0,
                max_n: int | None = None, max_t: int | None = None) -> list[Case]:
    n = caps.max_n if max_n is None else max_n
    t = caps.max_t if max_t is None else max_t
    if family == "paths":
        return path_cases(n, t)
    if family == "cycles":
        return cycle_cases(n, t)
    if family == "starlike":
        return starlike_cases(n - 2, min(t, 3))
    if family == "caterpillars":
        return caterpillar_cases(2, min(t, 3))
    if family == "trees":
        return tree_cases(50 if samples is None else samples, n, seed)
    if family == "kimura":
        return kimura_cases(100 if samples is None else samples, min(n, 7), seed)
    if family == "colon":
        return colon_cases(min(n, 8), min(t, 3))
    raise EdgeDepthError(f"unknown family {family!r}")


# --------------------------------------------------------------- evaluation

def _depth_case(case: Case, caps: Caps, backend: str | None) -> RunReport:
    p = case.params
    if case.family == "paths":
        G, f = make_path(p[0]), depth_path_power(p[0], case.power)
    elif case.family == "cycles":
        G, f = make_cycle(p[0]), depth_cycle_power(p[0], case.power)
    elif case.family == "starlike":
        G, f = make_starlike(StarlikeShape(p)), depth_starlike_power(p, case.power)
    elif case.family == "caterpillars":
        G = make_caterpillar3(*p, allow_bare=True)
        f = depth_caterpillar3_power(*p, case.power, allow_bare=True)
    else:
        G = _parse_edges_label(case.label.split(" ", 1)[1])
        f = q_tree(G)
    report = RunReport(case.label, case.power, formula_depth=f)
    report.oracle_depth = depth_power_oracle(G, case.power, caps, backend=backend)
    return report


def _kimura_case(case: Case, caps: Caps, backend: str | None) -> RunReport:
    if case.label.startswith("path-colon"):
        n, t = case.params
        G = path_colon_graph(n, t)
        report = RunReport(case.label, 1, formula_depth=phi(n, t),
                           note=f"d(G)={d_value(G)}")
    else:
        G = _parse_edges_label(case.label.split(" ", 1)[1])
        d = d_value(G)
        report = RunReport(case.label, 1, formula_depth=G.n_vertices - d, note=f"d(G)={d}")
    report.oracle_depth = depth_oracle(edge_ideal(G), caps, backend=backend)
    return report


def _colon_case(case: Case) -> RunReport:
    kind, n = case.params
    G = make_path(n) if kind == "path" else make_cycle(n)
    ep = consecutive_factors(G, 2, case.power) if case.power >= 2 else EdgeProduct(G)
    ok = banerjee_colon_ideal(ep) == monomial_colon(ep)
    notes = []
    if 2 <= case.power <= n - 2:
        rule = (path_colon_graph if kind == "path" else cycle_colon_graph)(n, case.power)
        same = rule == banerjee_colon_graph(ep)
        ok = ok and same
        notes.append("rule graph " + ("matches" if same else "differs"))
    return RunReport(case.label, case.power, match=ok, note="; ".join(notes))


def run_case(case: Case, caps: Caps, backend: str | None = None) -> RunReport:
    start = time.perf_counter()
    try:
        if case.family == "colon":
            report = _colon_case(case)
        elif case.family == "kimura":
            report = _kimura_case(case, caps, backend)
        else:
            report = _depth_case(case, caps, backend)
    except BudgetExceeded as exc:
        report = RunReport(case.label, case.power, status="budget", note=str(exc))
    except EdgeDepthError as exc:
        report = RunReport(case.label, case.power, status="error", note=str(exc))
    report.timing_ms = round((time.perf_counter() - start) * 1000, 1)
    return report


def _run_packed(args):
    case, caps, backend = args
    return case, run_case(case, caps, backend)


def run_cases(cases: Iterable[Case], caps: Caps, workers: int = 1,
              backend: str | None = None) -> list[RunReport]:
    """Evaluate cases, optionally in a process pool; the result order is the
    canonical case order whatever the completion order."""
    cases = sorted(cases, key=lambda c: c.key)
    if workers <= 1:
        pairs = [(c, run_case(c, caps, backend)) for c in cases]
    else:
        from concurrent.futures import ProcessPoolExecutor
        with ProcessPoolExecutor(max_workers=workers) as pool:
            pairs = list(pool.map(_run_packed, [(c, caps, backend) for c in cases]))
    return [r for _, r in sorted(pairs, key=lambda cr: cr[0].key)]
