"""Command-line interface.

Exit status: 0 on success, 1 when a verification found a disagreement, 2 on
usage errors, 3 when the only failures were cap overruns.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Sequence

from .colon import (banerjee_colon_graph, banerjee_colon_ideal, banerjee_colon_squares,
                    edge_product_from_indices, monomial_colon)
from .config import Caps, load_caps
from .errors import BudgetExceeded, EdgeDepthError, InvalidArgument, PreconditionFailed
from .formulas import dstab_for_spec, formula_for_spec, profile_for_spec
from .graph import GraphSpec, parse_graph_spec
from .kimura import best_family, pd_weakly_chordal
from .monomial import edge_ideal, power
from .oracle import betti_numbers, default_backend
from .sweeps import FAMILIES, RunReport, build_cases, run_cases

SCHEMA = 1

EXIT_OK, EXIT_DISAGREE, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


def _emit(args, command: str, records: list[dict], extra: dict | None = None):
    if args.json:
        doc = {"schema": SCHEMA, "command": command, "records": records}
        if extra:
            doc.update(extra)
        print(json.dumps(doc, sort_keys=True, indent=2))
        return
    columns: list[str] = []
    for rec in records:
        for key in rec:
            if key not in columns:
                columns.append(key)
    print("\t".join(columns))
    for rec in records:
        print("\t".join(_cell(rec.get(c)) for c in columns))
    if extra:
        for key, value in extra.items():
            print(f"# {key}: {json.dumps(value, sort_keys=True)}")


def _cell(v) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


def _caps(args) -> Caps:
    return load_caps(args.config, max_generators=args.max_generators, max_lattice=args.max_lattice,
                     max_faces=args.max_faces, max_search_vertices=args.max_search_vertices,
                     max_n=args.max_n, max_t=args.max_t)


def _spec(text: str) -> GraphSpec:
    return parse_graph_spec(text)


# ----------------------------------------------------------------- commands

def cmd_formula(spec_text: str, t: int) -> RunReport:
    spec = _spec(spec_text)
    return RunReport(spec.text, t, formula_depth=formula_for_spec(spec, t))


def cmd_oracle(args, caps: Caps) -> int:
    spec = _spec(args.graph)
    start = time.perf_counter()
    I = power(edge_ideal(spec.graph), args.power)
    table = betti_numbers(I, caps, method=args.method, backend=args.backend)
    rec = {"spec": spec.text, "power": args.power, "n_vars": I.n_vars, "generators": len(I),
           "lattice_size": table.lattice_size, "pd": table.pd, "depth": table.depth}
    if args.timing:
        rec["timing_ms"] = round((time.perf_counter() - start) * 1000, 1)
    extra = {"betti": table.to_json()} if args.table else None
    _emit(args, "oracle", [rec], extra)
    return EXIT_OK


def cmd_profile(args, caps: Caps) -> int:
    spec = _spec(args.graph)
    prof = profile_for_spec(spec, args.max_power)
    records = [{"t": t, "depth": d, "source": "formula"} for t, d in enumerate(prof.values, 1)]
    status = EXIT_OK
    if args.oracle:
        budget_only = False
        for t in range(1, args.max_power + 1):
            try:
                d = betti_numbers(power(edge_ideal(spec.graph), t), caps, backend=args.backend).depth
                records.append({"t": t, "depth": d, "source": "oracle"})
                if d != prof.values[t - 1]:
                    status = EXIT_DISAGREE
            except BudgetExceeded as exc:
                records.append({"t": t, "source": "oracle", "status": "budget", "note": str(exc)})
                budget_only = True
        if budget_only and status == EXIT_OK:
            status = EXIT_BUDGET
        records.sort(key=lambda r: (r["t"], r["source"]))
    extra = {}
    if prof.stable_index is not None:
        extra["dstab"] = prof.stable_index
        extra["stable_value"] = prof.stable_value
    if prof.notes:
        extra["notes"] = list(prof.notes)
    _emit(args, "profile", records, extra or None)
    return status


def cmd_colon(args, caps: Caps) -> int:
    spec = _spec(args.graph)
    try:
        indices = [int(x) for x in args.edges.split(",") if x.strip()]
    except ValueError:
        raise InvalidArgument("--edges expects comma-separated edge indices") from None
    ep = edge_product_from_indices(spec.graph, indices, spec.kind in ("path", "cycle"))
    H = banerjee_colon_graph(ep)
    records = [{"u": u, "v": v} for u, v in H.edge_list()]
    extra = {"spec": spec.text, "power": ep.t, "factors": [list(e) for e in ep.factors],
             "squares": sorted(banerjee_colon_squares(ep))}
    status = EXIT_OK
    if args.verify:
        ok = banerjee_colon_ideal(ep) == monomial_colon(ep)
        extra["verified"] = ok
        status = EXIT_OK if ok else EXIT_DISAGREE
    _emit(args, "colon", records, extra)
    return status


def cmd_pd(args, caps: Caps) -> int:
    spec = _spec(args.graph)
    G = spec.graph
    rec: dict = {"spec": spec.text, "n_vars": G.n_vertices, "via": args.via}
    if args.via == "kimura":
        rec["pd"] = pd_weakly_chordal(G, max_vertices=caps.max_search_vertices)
        fam = best_family(G, caps.max_search_vertices)
        rec["family"] = [{"A": sorted(A), "B": sorted(B), "edge": list(e)}
                         for (A, B), e in zip(fam.members, fam.matching)]
    else:
        rec["pd"] = betti_numbers(edge_ideal(G), caps, backend=args.backend).pd
    rec["depth"] = G.n_vertices - rec["pd"]
    _emit(args, "pd", [rec])
    return EXIT_OK


def cmd_dstab(args, caps: Caps) -> int:
    spec = _spec(args.graph)
    stab = dstab_for_spec(spec)
    if stab is None:
        raise InvalidArgument(f"no stability index formula for {spec.text!r} (trees and cycles only)")
    index, value = stab
    rec = {"spec": spec.text, "dstab": index, "stable_value": value}
    status = EXIT_OK
    if args.oracle:
        seen = []
        for t in range(1, index + 2):
            seen.append(betti_numbers(power(edge_ideal(spec.graph), t), caps, backend=args.backend).depth)
        rec["oracle_profile"] = seen
        tail_ok = seen[index - 1] == value and seen[index] == value
        first = next(t for t in range(1, index + 2) if all(d == value for d in seen[t - 1:]))
        rec["agreement"] = tail_ok and first == index
        status = EXIT_OK if rec["agreement"] else EXIT_DISAGREE
    _emit(args, "dstab", [rec])
    return status


def cmd_verify(family: str, caps: Caps, workers: int = 1, samples: int | None = None,
               seed: int = 0, max_n: int | None = None, max_t: int | None = None,
               backend: str | None = None) -> list[RunReport]:
    cases = build_cases(family, caps, samples=samples, seed=seed, max_n=max_n, max_t=max_t)
    return run_cases(cases, caps, workers=workers, backend=backend)


def verify_status(reports: Sequence[RunReport]) -> int:
    if any(r.agreement is False for r in reports):
        return EXIT_DISAGREE
    if any(r.status == "error" for r in reports):
        return EXIT_DISAGREE
    if any(r.status == "budget" for r in reports):
        return EXIT_BUDGET
    return EXIT_OK


# ------------------------------------------------------------------ parser

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    fmt = common.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", help="emit JSON")
    fmt.add_argument("--tsv", action="store_true", help="emit tab-separated rows (default)")
    common.add_argument("--config", help="key = value file with caps and sweep bounds")
    common.add_argument("--timing", action="store_true", help="include wall-clock timings")
    common.add_argument("--backend", choices=("auto", "compiled", "python"), default="auto",
                        help="oracle kernel")
    for name in ("max-generators", "max-lattice", "max-faces", "max-search-vertices"):
        common.add_argument(f"--{name}", type=int, default=None)

    p = argparse.ArgumentParser(prog="edgedepth", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("formula", parents=[common], help="closed-form depth of S/I^t")
    s.add_argument("--graph", required=True)
    s.add_argument("--power", type=int, required=True)
    s.set_defaults(max_n=None, max_t=None)

    s = sub.add_parser("oracle", parents=[common], help="depth and pd from exact Betti numbers")
    s.add_argument("--graph", required=True)
    s.add_argument("--power", type=int, default=1)
    s.add_argument("--table", action="store_true", help="include the Betti table")
    s.add_argument("--method", choices=("koszul", "order"), default="koszul")
    s.set_defaults(max_n=None, max_t=None)

    s = sub.add_parser("profile", parents=[common], help="depth for powers 1..T")
    s.add_argument("--graph", required=True)
    s.add_argument("--max-power", type=int, required=True)
    s.add_argument("--oracle", action="store_true", help="also compute oracle values")
    s.set_defaults(max_n=None, max_t=None)

    s = sub.add_parser("colon", parents=[common], help="colon graph by a product of edges")
    s.add_argument("--graph", required=True)
    s.add_argument("--edges", default="", help="1-based edge indices, e.g. 2,3,4")
    s.add_argument("--verify", action="store_true", help="compare with the monomial colon")
    s.set_defaults(max_n=None, max_t=None)

    s = sub.add_parser("pd", parents=[common], help="projective dimension of S/I(G)")
    s.add_argument("--graph", required=True)
    s.add_argument("--via", choices=("kimura", "oracle"), default="kimura")
    s.set_defaults(max_n=None, max_t=None)

    s = sub.add_parser("dstab", parents=[common], help="index of depth stability")
    s.add_argument("--graph", required=True)
    s.add_argument("--oracle", action="store_true", help="confirm with oracle depths")
    s.set_defaults(max_n=None, max_t=None)

    s = sub.add_parser("verify", parents=[common], help="run a verification sweep")
    s.add_argument("family", choices=FAMILIES)
    s.add_argument("--max-n", type=int, default=None)
    s.add_argument("--max-t", type=int, default=None)
    s.add_argument("--samples", type=int, default=None)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--workers", type=int, default=1)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    if args.backend == "auto":
        args.backend = None
    try:
        caps = _caps(args)
        if args.command == "formula":
            report = cmd_formula(args.graph, args.power)
            _emit(args, "formula", [{**report.record(), "source": "formula"}])
            return EXIT_OK
        if args.command == "verify":
            reports = cmd_verify(args.family, caps, workers=args.workers, samples=args.samples,
                                 seed=args.seed, max_n=args.max_n, max_t=args.max_t,
                                 backend=args.backend)
            records = [r.record(args.timing) for r in reports]
            summary = {"family": args.family, "cases": len(reports),
                       "agreements": sum(r.agreement is True for r in reports),
                       "disagreements": sum(r.agreement is False for r in reports),
                       "budget": sum(r.status == "budget" for r in reports),
                       "backend": args.backend or default_backend()}
            _emit(args, "verify", records, {"summary": summary})
            return verify_status(reports)
        handler = {"oracle": cmd_oracle, "profile": cmd_profile, "colon": cmd_colon,
                   "pd": cmd_pd, "dstab": cmd_dstab}[args.command]
        return handler(args, caps)
    except BudgetExceeded as exc:
        print(f"edgedepth: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (InvalidArgument, PreconditionFailed, EdgeDepthError, OSError) as exc:
        print(f"edgedepth: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
