"""Command-line interface: ``ecpoly <subcommand> ...``.

Data goes to stdout, diagnostics to stderr.  Exit status is 0 on success,
1 when a verification or golden comparison fails, 2 on usage or input
errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable, Sequence, TextIO

from . import census, engines, identities
from .canon import canonical_code
from .errors import EcpolyError
from .graph import Graph, corona_empty, iter_edgelist, iter_graph6, to_edgelist, to_graph6
from .polynomial import ECPolynomial

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _workers() -> int:
    raw = os.environ.get("ECP_THREADS", "").strip()
    if not raw:
        return 1
    try:
        n = int(raw)
    except ValueError:
        raise UsageError(f"ECP_THREADS must be a positive integer, got {raw!r}") from None
    if n < 1:
        raise UsageError(f"ECP_THREADS must be a positive integer, got {raw!r}")
    return n


def _map(fn: Callable, items: Sequence) -> list:
    """Ordered map, fanned out over processes when ECP_THREADS > 1."""
    workers = min(_workers(), len(items))
    if workers <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


def _read_graphs(path: str, fmt: str) -> list[Graph]:
    if path == "-":
        lines = sys.stdin.read().splitlines()
    else:
        try:
            with open(path) as fh:
                lines = fh.read().splitlines()
        except OSError as exc:
            raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    reader = iter_graph6 if fmt == "g6" else iter_edgelist
    return list(reader(lines))


def _format_poly(p: ECPolynomial) -> str:
    if p.is_zero:
        return "rho=0 m=0 coeffs=0"
    return f"rho={p.rho} m={p.degree} coeffs={','.join(str(c) for c in p.support_vector())}"


class _Poly:
    def __init__(self, engine: str):
        self.engine = engine

    def __call__(self, g: Graph) -> ECPolynomial:
        return engines.edge_cover_polynomial(g, self.engine)


def _emit(out: TextIO, lines: Iterable[str]) -> None:
    for line in lines:
        out.write(line + "\n")


# --- subcommands ------------------------------------------------------------


def cmd_compute(args, out: TextIO, err: TextIO) -> int:
    graphs = _read_graphs(args.input, args.format)
    polys = _map(_Poly(args.engine), graphs)
    for p in polys:
        out.write((json.dumps(p.to_json()) if args.json else _format_poly(p)) + "\n")
    return EXIT_OK


def cmd_rhosets(args, out: TextIO, err: TextIO) -> int:
    for idx, g in enumerate(_read_graphs(args.input, args.format)):
        covers = engines.enumerate_minimum_covers(g)
        out.write(f"# graph {idx} rho={len(covers[0]) if covers else 0} count={len(covers)}\n")
        _emit(out, (engines.format_cover(c) for c in covers))
    return EXIT_OK


def cmd_census(args, out: TextIO, err: TextIO) -> int:
    report = census.census_report(args.order, args.degree, args.engine)
    if args.json:
        out.write(json.dumps(report.to_json(), indent=1) + "\n")
    else:
        out.write(report.to_csv())
    unique = sum(c.unique for c in report.classes)
    err.write(f"graphs: {len(report.graphs)} ({sum(report.connected)} connected); classes: {len(report.classes)} ({unique} singleton)\n")
    if args.golden is None:
        return EXIT_OK
    try:
        golden = census.load_golden(args.golden)
    except (OSError, ValueError, KeyError) as exc:
        raise UsageError(f"cannot read golden table {args.golden}: {exc}") from None
    cmp = census.compare_with_golden(report, golden)
    _emit(err, cmp.lines())
    ok = cmp.ok and len(cmp.assignment) == len(golden)
    if not ok and not cmp.unmatched:
        err.write(f"row count differs: computed {len(report.graphs)}, golden {len(golden)}\n")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_equiv(args, out: TextIO, err: TextIO) -> int:
    graphs = _read_graphs(args.input, args.format)
    polys = _map(_Poly(args.engine), graphs)
    groups: dict[ECPolynomial, set[str]] = {}
    for g, p in zip(graphs, polys):
        groups.setdefault(p, set()).add(canonical_code(g))
    classes = sorted(groups.items(), key=lambda kv: kv[0].sort_key())
    for p, members in classes:
        out.write(f"{len(members)}\t{_format_poly(p)}\t{' '.join(sorted(members))}\n")
    err.write(f"{len(graphs)} graphs, {len(classes)} classes\n")
    return EXIT_OK


def cmd_corona(args, out: TextIO, err: TextIO) -> int:
    if args.i < 1:
        raise UsageError("--i must be a positive integer")
    status = EXIT_OK
    for idx, g in enumerate(_read_graphs(args.input, args.format)):
        h = corona_empty(g, args.i)
        out.write(to_graph6(h) + "\n" if args.format == "g6" else to_edgelist(h))
        if args.check:
            ok = identities.check_corona_identity(g, args.i, args.engine)
            err.write(f"graph {idx}: corona identity {'pass' if ok else 'FAIL'}\n")
            if not ok:
                status = EXIT_FAIL
    return status


def _verify_one(item: tuple[Graph, str]) -> dict:
    g, engine = item
    p = engines.edge_cover_polynomial(g, engine)
    rep = identities.verify(g, p)
    return {"ok": rep.ok, **rep.to_json()}


def cmd_verify(args, out: TextIO, err: TextIO) -> int:
    graphs = _read_graphs(args.input, args.format)
    reports = _map(_verify_one, [(g, args.engine) for g in graphs])
    status = EXIT_OK
    for idx, rep in enumerate(reports):
        out.write(json.dumps(rep) + "\n")
        if not rep["ok"]:
            status = EXIT_FAIL
            bad = [c["check"] for c in rep["checks"] if c["status"] == identities.FAIL]
            err.write(f"graph {idx}: failed {', '.join(bad)}\n")
    return status


def cmd_gen_cubic(args, out: TextIO, err: TextIO) -> int:
    _emit(out, (to_graph6(g) for g in census.generate_cubic(args.order)))
    return EXIT_OK


# --- parser -----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ecpoly", description="Exact edge cover polynomials of small graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    def graph_input(p: argparse.ArgumentParser) -> None:
        p.add_argument("--in", dest="input", required=True, help="input file, '-' for stdin")
        p.add_argument("--format", choices=("g6", "edgelist"), default="g6")

    def engine(p: argparse.ArgumentParser) -> None:
        p.add_argument("--engine", choices=engines.ENGINE_TAGS, default="dp")

    p = sub.add_parser("compute", help="edge cover polynomial of each input graph")
    graph_input(p)
    engine(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("rhosets", help="list every minimum edge cover (1-based labels)")
    graph_input(p)
    p.set_defaults(func=cmd_rhosets)

    p = sub.add_parser("census", help="polynomials of all k-regular graphs of one order")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--degree", type=int, default=3, choices=(3,))
    engine(p)
    p.add_argument("--golden", nargs="?", const=str(census.default_golden_path()), default=None,
                   help="golden CSV to compare against (bundled order-10 table if no path given)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("equiv", help="group a corpus into classes with equal polynomials")
    graph_input(p)
    engine(p)
    p.set_defaults(func=cmd_equiv)

    p = sub.add_parser("corona", help="attach i pendant vertices to every vertex")
    graph_input(p)
    engine(p)
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--check", action="store_true", help="also verify x^(i n) (1+x)^m")
    p.set_defaults(func=cmd_corona)

    p = sub.add_parser("verify", help="run every applicable identity check")
    graph_input(p)
    engine(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gen-cubic", help="all cubic graphs of one order as graph6")
    p.add_argument("--order", type=int, required=True)
    p.set_defaults(func=cmd_gen_cubic)
    return parser


def run(argv: Sequence[str] | None = None, out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out, err)
    except (UsageError, EcpolyError) as exc:
        err.write(f"ecpoly {args.command}: {exc}\n")
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
