"""Command-line interface: ``dsq {build,spectrum,invariants,census,verify,search}``."""

from __future__ import annotations

import argparse
import csv
import hashlib
import inspect
import json
import sys
import time
from dataclasses import asdict

from . import __version__
from .graph import FAMILIES, Graph, build
from .graph6 import Graph6Error, decode, encode_str
from .invariants import (
    degree_moment_sums,
    derive_basic_invariants,
    solve_degree_distribution,
)
from .spectral import char_poly, eigenvalues_float, matrix_of, power_traces
from .suites import SUITES, run_verification_suite
from .trees import triangle_path
from .walks import census_of


def parse_graph(spec: str) -> Graph:
    """``kind:size`` for a builder (plus ``tpath:k`` for a k-triangle chain), else graph6."""
    if ":" in spec:
        kind, _, size = spec.partition(":")
        if kind == "tpath":
            return triangle_path(int(size))
        return build(kind, int(size))
    return decode(spec)


def parse_orders(spec: str) -> list[int]:
    """``8``, ``4,6,8``, ``4-18`` or ``4-18:2``."""
    out: list[int] = []
    for part in spec.split(","):
        step = 1
        if ":" in part:
            part, s = part.split(":")
            step = int(s)
        if "-" in part:
            lo, hi = part.split("-")
            out += range(int(lo), int(hi) + 1, step)
        else:
            out.append(int(part))
    return sorted(set(out))


def _emit(obj: dict, path: str | None) -> None:
    text = json.dumps(obj, indent=2)
    if path:
        with open(path, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def cmd_build(args) -> int:
    g = build(args.kind, args.n)
    if args.format == "g6":
        print(encode_str(g))
    else:
        print(g.n, g.m)
        for u, v in g.edges():
            print(u, v)
    return 0


def cmd_spectrum(args) -> int:
    g = parse_graph(args.graph)
    m = matrix_of(g, args.matrix)
    p = char_poly(m)
    out = {
        "graph6": encode_str(g),
        "matrix": args.matrix,
        "char_poly": list(p.coeffs),
        "char_poly_str": str(p),
        "eigenvalues": list(eigenvalues_float(m).values),
    }
    if args.traces:
        out["power_traces"] = power_traces(m, args.traces)
    _emit(out, args.json)
    return 0


def cmd_invariants(args) -> int:
    g = parse_graph(args.graph)
    p = char_poly(matrix_of(g, "laplacian"))
    basic = derive_basic_invariants(p)
    triangles = power_traces(matrix_of(g, "adjacency"), 3)[3] // 6
    mom = degree_moment_sums(p, triangles)
    sols = solve_degree_distribution(basic.n, basic.m, mom.s2, mom.s3, dmax=args.dmax,
                                     allow_isolated=basic.c > 1)
    _emit({
        "graph6": encode_str(g),
        "basic": asdict(basic),
        "moments": asdict(mom),
        "degree_distributions": [list(s.counts) for s in sorted(sols)],
    }, args.json)
    return 0


def cmd_census(args) -> int:
    g = parse_graph(args.graph)
    c = census_of(g)
    _emit({
        "graph6": encode_str(g),
        "profile": asdict(c.profile),
        "counts": dict(zip(["T", "T1", "T2", "T3", "T4"], c.counts)),
        "predicted": dict(zip(["T", "T1", "T2", "T3", "T4"], c.predicted)),
        "closed_walks_7": power_traces(matrix_of(g, "adjacency"), 7)[7],
    }, args.json)
    return 0


def cmd_verify(args) -> int:
    params: dict = {}
    if args.t is not None:
        params["tmax"] = args.t
    if args.n is not None:
        params["nmax"] = args.n
    if args.corpus is not None:
        params["corpus"] = args.corpus
    if args.workers > 1:
        params["workers"] = args.workers
    accepted = inspect.signature(SUITES[args.suite]).parameters
    for key in list(params):
        if key not in accepted:
            flag = {"tmax": "--t", "nmax": "--n"}.get(key, "--" + key)
            print(f"note: {args.suite} ignores {flag}", file=sys.stderr)
            del params[key]
    start = time.perf_counter()
    results = run_verification_suite(args.suite, **params)
    elapsed = time.perf_counter() - start
    failed = [r for r in results if not r.passed]
    for r in results if args.verbose else failed:
        print(f"{r.status.upper():4}  {r.check}" + (f"  witness={r.witness}" if r.witness else ""))
    print(f"{args.suite}: {len(results) - len(failed)}/{len(results)} checks passed "
          f"in {elapsed:.2f}s", file=sys.stderr)
    if args.json:
        _emit({
            "suite": args.suite,
            "params": params,
            "checks": [asdict(r) for r in results],
            "version": __version__,
            "timing": elapsed,
        }, args.json)
    return 0 if not failed else 1


def cmd_search(args) -> int:
    from .search import run_cospectral_search

    graph_class = args.graph_class
    if graph_class == "tchains":
        orders = parse_orders(args.t) if args.t else None
    else:
        orders = parse_orders(args.n) if args.n else None
    target = parse_graph(args.target) if args.target else None
    rep = run_cospectral_search(graph_class, orders, args.matrix, target=target,
                                workers=args.workers, skip_bad=args.skip_bad,
                                keep_all=args.all_members)
    for e in rep.errors:
        print(f"skipped: {e}", file=sys.stderr)
    nontriv = rep.nontrivial()
    print(f"scanned {rep.scanned} graphs, {len(rep.classes)} classes, "
          f"{len(nontriv)} with more than one member ({rep.timing:.2f}s)")
    if rep.target is not None:
        print(f"target {rep.target.graph6}: class size {rep.target.class_size}")
        for w in rep.target.members:
            print(f"  member {w}")
    if args.json:
        with open(args.json, "w") as fh:
            fh.write(rep.to_json() + "\n")
    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            wr = csv.writer(fh)
            wr.writerow(["fingerprint_hash", "class_size"])
            for c in rep.classes:
                h = hashlib.sha256(",".join(map(str, c.fingerprint)).encode()).hexdigest()[:16]
                wr.writerow([h, c.size])
    return 0


def make_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="dsq", description=__doc__)
    ap.add_argument("--version", action="version", version=__version__)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="print a named graph")
    p.add_argument("kind", choices=FAMILIES)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=["g6", "edges"], default="g6")
    p.set_defaults(func=cmd_build)

    graph_help = "graph as kind:size (e.g. centipede:8, tpath:3) or a graph6 string"

    p = sub.add_parser("spectrum", help="exact characteristic polynomial and eigenvalues")
    p.add_argument("graph", help=graph_help)
    p.add_argument("--matrix", choices=["laplacian", "adjacency"], default="laplacian")
    p.add_argument("--traces", type=int, default=0, metavar="K", help="also print tr(M^1..K)")
    p.add_argument("--json")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("invariants", help="invariants read off the Laplacian spectrum")
    p.add_argument("graph", help=graph_help)
    p.add_argument("--dmax", type=int, default=5)
    p.add_argument("--json")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("census", help="motif census of a triangle chain")
    p.add_argument("graph", help=graph_help)
    p.add_argument("--json")
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", choices=sorted(SUITES))
    p.add_argument("--t", type=int, help="largest triangle count")
    p.add_argument("--n", type=int, help="largest order")
    p.add_argument("--corpus", type=int, help="random corpus size")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--json")
    p.add_argument("-v", "--verbose", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search", help="group a graph class by exact char poly")
    p.add_argument("--class", dest="graph_class", default="trees",
                   help="trees, tchains or g6:<path>")
    p.add_argument("--n", help="orders, e.g. 8 or 4-18:2")
    p.add_argument("--t", help="triangle counts for tchains")
    p.add_argument("--matrix", choices=["laplacian", "adjacency"], default="laplacian")
    p.add_argument("--target", help=graph_help)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--json")
    p.add_argument("--csv")
    p.add_argument("--skip-bad", action="store_true")
    p.add_argument("--all-members", action="store_true", help="keep every class member")
    p.set_defaults(func=cmd_search)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = make_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError, Graph6Error) as exc:
        print(f"dsq: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
