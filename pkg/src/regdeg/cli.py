"""``regdeg`` command line.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 input
parse error.  Machine output is JSON (compact unless ``--pretty``) or CSV.
"""

from __future__ import annotations

import argparse
import logging
import os
import sys
from pathlib import Path

from . import constructions as cons
from .atlas import (
    CensusError,
    asymptotics_probe,
    census_paths,
    connected_graph6,
    count_cw,
    lattice_CW,
    load_census,
    run_census,
)
from .graph import Graph, GraphError
from .graph6 import Graph6Error
from .invariants import SizeError, invariant_record
from .io import ParseError, dumps, format_edge_list, iter_graph6, read_edge_list
from .verify import SUITES, run_check

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_PARSE = 0, 1, 2, 3

log = logging.getLogger("regdeg")


class UsageError(Exception):
    pass


def parse_range(text: str) -> tuple[int, int]:
    """``"5..8"`` -> (5, 8); a single integer gives a one-point range."""
    try:
        if ".." in text:
            lo, hi = (int(x) for x in text.split("..", 1))
        else:
            lo = hi = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected N or LO..HI, got {text!r}") from None
    if lo > hi:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return lo, hi


def _out(args, obj) -> None:
    sys.stdout.write(dumps(obj, args.pretty) + "\n")


def _directory(args) -> Path | None:
    return Path(args.dir) if getattr(args, "dir", None) else None


# --------------------------------------------------------------------------
# invariants
# --------------------------------------------------------------------------

def _read_graphs(args) -> list[Graph]:
    if args.graph6 is not None:
        return list(iter_graph6(args.graph6))
    if args.input == "-":
        return _parse_stream(sys.stdin, args.format)
    path = Path(args.input)
    if not path.exists():
        raise UsageError(f"no such file: {path}")
    with path.open() as fh:
        return _parse_stream(fh, args.format)


def _parse_stream(stream, fmt: str) -> list[Graph]:
    if fmt == "edgelist":
        return [read_edge_list(stream)]
    return list(iter_graph6(stream))


def cmd_invariants(args) -> int:
    for g in _read_graphs(args):
        rec = invariant_record(g)
        if args.no_betti:
            rec.pop("betti")
        _out(args, rec)
    return EXIT_OK


# --------------------------------------------------------------------------
# construct
# --------------------------------------------------------------------------

def _ints(text: str) -> tuple[int, ...]:
    return tuple(int(x) for x in text.split(",") if x.strip())


def _core_edges(text: str) -> tuple[tuple[int, int], ...]:
    out = []
    for part in text.split(","):
        if part.strip():
            i, j = part.split("-")
            out.append((int(i), int(j)))
    return tuple(out)


def _build(args) -> tuple[Graph, dict]:
    fam = args.family
    if fam == "dr":
        return cons.build_Dr(args.r), {"r": args.r}
    if fam == "ribbon":
        return cons.build_ribbon(), {}
    if fam == "star":
        return cons.build_star(args.k), {"k": args.k}
    if fam == "startriangle":
        return cons.build_star_triangle(args.k), {"k": args.k}
    if fam == "kab":
        return cons.build_complete_bipartite(args.a, args.b), {"a": args.a, "b": args.b}
    if fam == "gabc":
        return cons.build_G_abc(args.a, args.b, args.c), {"a": args.a, "b": args.b, "c": args.c}
    if fam == "cw":
        try:
            spec = cons.CwSpec(args.m, args.p, _core_edges(args.core), _ints(args.s), _ints(args.t))
        except ValueError:
            raise UsageError("--core takes i-j pairs, --s/--t comma-separated integers") from None
        return cons.build_cw(spec), {"m": spec.m, "p": spec.p,
                                     "core": [list(e) for e in spec.core_edges],
                                     "s": list(spec.s), "t": list(spec.t)}
    if fam == "realize":
        return cons.realize_rd(args.r, args.d), {"r": args.r, "d": args.d}
    if fam == "realize-cw":
        return cons.realize_cw(args.r, args.d, args.n), {"r": args.r, "d": args.d, "n": args.n}
    if fam == "pad":
        base = Graph.from_graph6(args.graph6)
        return cons.pad_to_n(base, args.n), {"graph6": args.graph6, "n": args.n}
    raise UsageError(f"unknown family {fam!r}")


def cmd_construct(args) -> int:
    g, params = _build(args)
    if args.format == "graph6":
        sys.stdout.write(g.to_graph6() + "\n")
    elif args.format == "edgelist":
        sys.stdout.write(format_edge_list(g))
    else:
        rec = {"family": args.family, "params": params}
        rec.update(invariant_record(g) if args.invariants else
                   {"graph6": g.to_graph6(), "n": g.n, "edges": [list(e) for e in g.edges()]})
        _out(args, rec)
    return EXIT_OK


# --------------------------------------------------------------------------
# enumerate / census / plot-data / count
# --------------------------------------------------------------------------

def cmd_enumerate(args) -> int:
    for s in connected_graph6(args.n, args.allow_large, _directory(args)):
        sys.stdout.write(s.decode() + "\n")
    return EXIT_OK


def cmd_census(args) -> int:
    graphs = None
    if args.input:
        path = Path(args.input)
        if not path.exists():
            raise UsageError(f"no such file: {path}")
        with path.open() as fh:
            graphs = [g.to_graph6() for g in iter_graph6(fh)]
        bad = [s for s in graphs if Graph.from_graph6(s).n != args.n]
        if bad:
            raise UsageError(f"{len(bad)} input graphs do not have n={args.n} vertices")
    directory = Path(args.out) if args.out else None
    census = run_census(args.n, threads=args.threads, allow_large=args.allow_large,
                        directory=directory, use_cache=not args.recompute, graphs=graphs)
    paths = census_paths(args.n, directory)
    _out(args, {
        "n": census.n,
        "total_graphs": census.total_graphs,
        "points": [list(p) for p in sorted(census.rd_set())],
        "cw_points": [list(p) for p in sorted(census.cw_set())],
        "violations": census.violations,
        "files": {k: str(paths[k]) for k in ("json", "csv", "cw_csv")},
    })
    return EXIT_FAIL if census.violations else EXIT_OK


def cmd_plot_data(args) -> int:
    census = load_census(args.n, _directory(args))
    if census is None:
        raise UsageError(f"no census for n={args.n}; run 'regdeg census {args.n}' first")
    sys.stdout.write(census.plot_csv())
    return EXIT_OK


def cmd_count(args) -> int:
    lo, hi = args.n
    if lo < 5:
        raise UsageError("counting is defined for n >= 5")
    if args.probe:
        if hi < 10:
            raise UsageError("--probe needs an upper end of at least 10")
        _out(args, asymptotics_probe(hi, lo))
        return EXIT_OK
    rows = [{"n": n, "count_cw": count_cw(n), "lattice": len(lattice_CW(n))}
            for n in range(lo, hi + 1)]
    _out(args, rows)
    return EXIT_OK if all(r["count_cw"] == r["lattice"] for r in rows) else EXIT_FAIL


# --------------------------------------------------------------------------
# verify
# --------------------------------------------------------------------------

DEFAULT_RANGES = {
    "lemma2.1": (3, 8), "lemma2.2": (2, 9), "lemma2.3": (2, 10), "thm3.6": (3, 8),
    "thm4.3": (2, 10), "thm5.1": (5, 8), "thm5.2": (5, 8), "thm5.4": (5, 500),
}


def cmd_verify(args) -> int:
    lo, hi = args.n if args.n else DEFAULT_RANGES[args.suite]
    report = run_check(args.suite, lo, hi, samples=args.samples, n_max=args.n_max,
                       seed=args.seed, threads=args.threads, allow_large=args.allow_large,
                       directory=_directory(args), progress=log.info)
    status = "PASS" if report.passed else "FAIL"
    print(f"{args.suite}: {status} ({report.cases} cases, "
          f"{len(report.failures)} failures)", file=sys.stderr)
    for line in report.failures[:20]:
        print(f"  {line}", file=sys.stderr)
    _out(args, report.to_dict())
    return EXIT_OK if report.passed else EXIT_FAIL


# --------------------------------------------------------------------------
# parser
# --------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--pretty", action="store_true", help="indented JSON")
    common.add_argument("-v", "--verbose", action="store_true")

    p = argparse.ArgumentParser(prog="regdeg", description=(
        "Regularity and h-polynomial degree of edge ideals of small graphs."))
    sub = p.add_subparsers(dest="command", required=True)

    inv = sub.add_parser("invariants", parents=[common],
                         help="full invariant record for each input graph")
    inv.add_argument("input", nargs="?", default="-", help="file or '-' for stdin")
    inv.add_argument("--graph6", action="append", metavar="G6",
                     help="graph6 string (repeatable; overrides input)")
    inv.add_argument("--format", choices=("graph6", "edgelist"), default="graph6")
    inv.add_argument("--no-betti", action="store_true", help="omit the Betti table")
    inv.set_defaults(func=cmd_invariants)

    shape = argparse.ArgumentParser(add_help=False, parents=[common])
    shape.add_argument("--format", choices=("json", "graph6", "edgelist"), default="json")
    shape.add_argument("--invariants", action="store_true",
                       help="attach the full invariant record (json format)")
    con = sub.add_parser("construct", help="build a named family member")
    fams = con.add_subparsers(dest="family", required=True)

    def family(name: str, help: str) -> argparse.ArgumentParser:
        return fams.add_parser(name, help=help, parents=[shape])

    family("dr", "r disjoint edges").add_argument("r", type=int)
    family("ribbon", "two triangles sharing a vertex")
    family("star", "K_{1,k}").add_argument("k", type=int)
    family("startriangle", "k triangles sharing a vertex").add_argument("k", type=int)
    kab = family("kab", "complete bipartite K_{a,b}")
    kab.add_argument("a", type=int)
    kab.add_argument("b", type=int)
    gabc = family("gabc", "Cameron-Walker G_{a,b,c}")
    for name in "abc":
        gabc.add_argument(name, type=int)
    cw = family("cw", "Cameron-Walker graph from core, leaves, triangles")
    cw.add_argument("--m", type=int, required=True)
    cw.add_argument("--p", type=int, required=True)
    cw.add_argument("--core", required=True, help="core edges as i-j,i-j,...")
    cw.add_argument("--s", required=True, help="leaf counts s_1,...,s_m")
    cw.add_argument("--t", required=True, help="triangle counts t_1,...,t_p")
    rz = family("realize", "connected graph with (reg, deg h) = (r, d)")
    rz.add_argument("r", type=int)
    rz.add_argument("d", type=int)
    rzc = family("realize-cw", "Cameron-Walker graph on n vertices with (r, d)")
    rzc.add_argument("r", type=int)
    rzc.add_argument("d", type=int)
    rzc.add_argument("n", type=int)
    pad = family("pad", "suspend a graph up to n vertices keeping (r, d)")
    pad.add_argument("graph6")
    pad.add_argument("n", type=int)
    con.set_defaults(func=cmd_construct)

    en = sub.add_parser("enumerate", parents=[common],
                        help="canonical graph6 of all connected graphs on n vertices")
    en.add_argument("n", type=int)
    en.add_argument("--allow-large", action="store_true", help="permit n = 9")
    en.add_argument("--dir", help="cache directory for levels and checkpoints")
    en.set_defaults(func=cmd_enumerate)

    ce = sub.add_parser("census", parents=[common], help="(reg, deg h) census for n")
    ce.add_argument("n", type=int)
    ce.add_argument("--threads", type=int, default=os.cpu_count() or 1)
    ce.add_argument("--allow-large", action="store_true", help="permit n = 9 enumeration")
    ce.add_argument("--input", help="graph6 file to use instead of the internal generator")
    ce.add_argument("--out", help="output directory (default: REGDEG_CACHE_DIR)")
    ce.add_argument("--recompute", action="store_true", help="ignore a saved census")
    ce.set_defaults(func=cmd_census)

    ve = sub.add_parser("verify", parents=[common], help="run a named verification suite")
    ve.add_argument("suite", choices=SUITES)
    ve.add_argument("--n", type=parse_range, help="vertex range LO..HI")
    ve.add_argument("--samples", type=int)
    ve.add_argument("--n-max", type=int, dest="n_max")
    ve.add_argument("--seed", type=int, default=0)
    ve.add_argument("--threads", type=int, default=os.cpu_count() or 1)
    ve.add_argument("--allow-large", action="store_true")
    ve.add_argument("--dir", help="census directory (default: REGDEG_CACHE_DIR)")
    ve.set_defaults(func=cmd_verify)

    co = sub.add_parser("count", parents=[common],
                        help="closed-form Cameron-Walker pair count")
    co.add_argument("n", type=parse_range, help="N or LO..HI")
    co.add_argument("--probe", action="store_true", help="asymptotic diagnostics")
    co.set_defaults(func=cmd_count)

    pl = sub.add_parser("plot-data", parents=[common], help="scatter CSV from a saved census")
    pl.add_argument("n", type=int)
    pl.add_argument("--dir", help="census directory (default: REGDEG_CACHE_DIR)")
    pl.set_defaults(func=cmd_plot_data)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"regdeg: parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except Graph6Error as exc:
        print(f"regdeg: parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (UsageError, GraphError, SizeError, CensusError, cons.ConstructionError) as exc:
        print(f"regdeg: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
