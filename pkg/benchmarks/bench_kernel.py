"""Compare the compiled and pure-Python lattice kernels.

    python benchmarks/bench_kernel.py [--repeat N]

Each case is the power of an edge ideal; both kernels must return identical
cores, and the script prints wall-clock times and the speedup.
"""

from __future__ import annotations

import argparse
import sys
import time

from edgedepth.graph import make_cycle, make_path, make_starlike, StarlikeShape
from edgedepth.monomial import edge_ideal, power
from edgedepth.oracle import _backend

CASES = [
    ("path:7", make_path(7), 3),
    ("cycle:6", make_cycle(6), 4),
    ("cycle:7", make_cycle(7), 3),
    ("star:3,3,5", make_starlike(StarlikeShape((3, 3, 5))), 2),
]


def _time(fn, repeat: int) -> tuple[float, object]:
    best, out = float("inf"), None
    for _ in range(repeat):
        start = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - start)
    return best, out


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=1)
    args = ap.parse_args(argv)
    if not _backend.compiled_available():
        print("compiled kernel not built; only the Python kernel is available", file=sys.stderr)
        return 1
    print(f"{'case':<14}{'t':>3}{'lattice':>10}{'cores':>8}{'compiled s':>12}{'python s':>11}{'speedup':>9}")
    for label, G, t in CASES:
        gens = list(power(edge_ideal(G), t).vectors)
        n = G.n_vertices
        tc, rc = _time(lambda: _backend.koszul_cores(gens, n, 10**9, "compiled"), args.repeat)
        tp, rp = _time(lambda: _backend.koszul_cores(gens, n, 10**9, "python"), args.repeat)
        if rc != rp:
            print(f"{label}: kernels disagree", file=sys.stderr)
            return 1
        print(f"{label:<14}{t:>3}{rc[0]:>10}{len(rc[1]):>8}{tc:>12.3f}{tp:>11.3f}{tp / tc:>8.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
