"""Command-line interface.

Exit codes: 0 ok, 1 a check failed, 2 usage error, 3 budget exceeded,
4 input could not be parsed.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Sequence

from . import __version__
from .certificate import build_certificate, dumps, verify_certificate
from .classify import classify_vertices, is_almost_triangle_free
from .constructions import (
    check_predictions,
    collapse,
    delete_edge,
    join_at_vertex,
    remove_clique,
)
from .graph import GraphError, degree_profile
from .io import ParseError, from_graph6, iter_catalog, read_graph, to_graph6
from .oracle import CapExceeded, brute_force_v
from .solver import (
    Budget,
    BudgetExceeded,
    bounds,
    linear_intersection_number,
    reduced_linear_intersection_number,
    verify_efl,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET, EXIT_PARSE = 0, 1, 2, 3, 4


def _fmt_set(c) -> str:
    return "{" + ",".join(map(str, sorted(c))) + "}"


def _budget(args) -> Budget | None:
    if args.budget_nodes is None and args.budget_secs is None:
        return None
    return Budget(args.budget_nodes, args.budget_secs)


def cmd_solve(args, out) -> int:
    g = read_graph(args.file, args.format)
    budget = _budget(args)
    if args.reduced:
        result = reduced_linear_intersection_number(g, budget)
    else:
        result = linear_intersection_number(g, budget)
    if args.json:
        doc = build_certificate(g, result, deterministic=args.deterministic, budget=budget)
        out.write(dumps(doc))
        return EXIT_OK
    name = "vbar" if args.reduced else "v"
    out.write(f"{name} = {result.value}\n")
    out.write("cliques: " + " ".join(_fmt_set(c) for c in result.certificate.cliques) + "\n")
    if result.realization is not None:
        lines = " ".join(_fmt_set(line) for line in result.realization.lines)
        out.write(f"realization: {result.realization.v} points; lines {lines}\n")
    out.write(f"nodes: {result.stats.nodes}\n")
    return EXIT_OK


def cmd_bounds(args, out) -> int:
    g = read_graph(args.file, args.format)
    rep = bounds(g)
    out.write(f"n = {rep.n}, m = {rep.m}\n")
    for name, val in rep.lower_bounds().items():
        mark = "  <- binding" if name == rep.binding else ""
        out.write(f"  lower {name:<14} {val}{mark}\n")
    out.write(f"  upper {'edge_bound':<14} {rep.edge_bound}\n")
    out.write(f"best lower = {rep.best_lower}\n")
    return EXIT_OK


def cmd_classify(args, out) -> int:
    g = read_graph(args.file, args.format)
    cls = classify_vertices(g, _budget(args))
    out.write("vertex  L  I  Int  Int_s  Int_e  Int_es\n")
    for x, f in enumerate(cls.flags):
        row = [f.in_L, f.in_I, f.interior, f.strongly_interior, f.extremal_interior,
               f.extremal_strongly_interior]
        out.write(f"{x:>6}  " + "  ".join("x" if b else "." for b in row) + "\n")
    atf = is_almost_triangle_free(g)
    if atf is None:
        out.write("almost triangle-free: no\n")
    else:
        out.write(f"almost triangle-free: yes; base {_fmt_set(atf.base_vertices)}\n")
        for t in atf.triangles:
            out.write(f"  triangle at {t.attachment} with new vertices {t.new_vertices}\n")
        out.write(f"  extremal vertices {_fmt_set(atf.extremal_vertices)}\n")
    return EXIT_OK


def cmd_efl(args, out) -> int:
    g = read_graph(args.file, args.format)
    rep = verify_efl(g, _budget(args))
    if rep.holds:
        out.write(f"chi = {rep.chi}, v = {rep.v}, EFL holds (margin {rep.margin})\n")
        return EXIT_OK
    out.write(f"chi = {rep.chi}, v = {rep.v}, EFL COUNTEREXAMPLE (margin {rep.margin})\n")
    out.write(f"graph6: {to_graph6(g)}\n")
    return EXIT_FAIL


def cmd_surgery(args, out) -> int:
    budget = _budget(args)
    if args.op == "join":
        g1 = read_graph(args.file, args.format)
        g2 = read_graph(args.other, args.format)
        res = join_at_vertex(g1, g2, args.a, args.b, budget=budget)
    else:
        g = read_graph(args.file, args.format)
        if args.op == "collapse":
            res = collapse(g, args.a, args.b, budget=budget)
        elif args.op == "delete-edge":
            res = delete_edge(g, (args.a, args.b), budget=budget)
        else:
            res = remove_clique(g, args.vertices, budget=budget)
    out.write(f"{res.tag}\n")
    out.write(f"result graph6: {to_graph6(res.graph)}  (n={res.graph.n}, m={res.graph.m})\n")
    for i, vmap in enumerate(res.vertex_maps):
        out.write(f"vertex map {i}: " + " ".join(f"{k}->{v}" for k, v in sorted(vmap.items())) + "\n")
    for p in res.predictions:
        out.write(f"predict: {p}\n")
    if not args.verify:
        return EXIT_OK
    status = EXIT_OK
    for p, actual, ok in check_predictions(res, budget):
        out.write(f"check: {p.quantity} = {actual}: {'ok' if ok else 'FAILED'}\n")
        if not ok:
            status = EXIT_FAIL
    return status


def _check_one(item: tuple[int, str, str]) -> tuple[int, str, str, str]:
    lineno, g6, check = item
    try:
        g = from_graph6(g6)
        if check == "efl":
            rep = verify_efl(g)
            return lineno, g6, "ok" if rep.holds else "fail", f"chi={rep.chi} v={rep.v}"
        v = linear_intersection_number(g, fast_path=False).value
        if check == "oracle":
            b = brute_force_v(g)
            return lineno, g6, "ok" if b == v else "fail", f"solver={v} oracle={b}"
        prof = degree_profile(g)
        edge_bound = g.m + prof.n_leaves + 2 * prof.n_isolated
        if check == "atf":
            atf = is_almost_triangle_free(g) is not None
            ok = (v == edge_bound) == atf
            return lineno, g6, "ok" if ok else "fail", f"v={v} edge_bound={edge_bound} atf={atf}"
        rep = bounds(g)
        bad = [k for k, b in rep.lower_bounds().items() if b > v]
        ok = not bad and v <= rep.edge_bound
        return lineno, g6, "ok" if ok else "fail", f"v={v} best_lower={rep.best_lower}" + (
            f" violated={bad}" if bad else "")
    except ParseError as exc:
        return lineno, g6, "parse", str(exc)
    except CapExceeded as exc:
        return lineno, g6, "fail", str(exc)
    except BudgetExceeded as exc:
        return lineno, g6, "budget", str(exc)


def worker_count() -> int:
    env = os.environ.get("LINSPECT_THREADS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def cmd_batch(args, out) -> int:
    items = [(lineno, g6, args.check) for lineno, g6 in iter_catalog(args.catalog)]
    workers = min(worker_count(), max(1, len(items)))
    if workers == 1:
        results = map(_check_one, items)
    else:
        pool = ProcessPoolExecutor(workers)
        results = pool.map(_check_one, items, chunksize=8)
    counts: dict[str, int] = {}
    try:
        for lineno, g6, status, detail in results:
            counts[status] = counts.get(status, 0) + 1
            out.write(f"{lineno}\t{g6}\t{status}\t{detail}\n")
    finally:
        if workers > 1:
            pool.shutdown()
    ok = counts.get("ok", 0)
    out.write(f"{ok}/{len(items)} ok\n")
    if counts.get("fail"):
        return EXIT_FAIL
    if counts.get("parse"):
        return EXIT_PARSE
    if counts.get("budget"):
        return EXIT_BUDGET
    return EXIT_OK


def cmd_verify(args, out) -> int:
    try:
        with open(args.certificate) as fh:
            doc = json.load(fh)
    except json.JSONDecodeError as exc:
        out.write(f"not valid JSON: {exc}\n")
        return EXIT_PARSE
    verdict = verify_certificate(doc)
    if verdict:
        out.write("certificate OK\n")
        for note in verdict.notes:
            out.write(f"note: {note}\n")
        return EXIT_OK
    out.write("certificate REJECTED\n")
    for err in verdict.errors:
        out.write(f"  {err}\n")
    return EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="linspect", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"linspect {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    def graph_input(sp):
        sp.add_argument("--format", choices=("auto", "graph6", "edgelist"), default="auto")
        sp.add_argument("--budget-nodes", type=int)
        sp.add_argument("--budget-secs", type=float)

    sp = sub.add_parser("solve", help="compute v (or vbar) with a certificate")
    sp.add_argument("file")
    sp.add_argument("--reduced", action="store_true", help="compute vbar instead of v")
    sp.add_argument("--json", action="store_true", help="emit a certificate document")
    sp.add_argument("--deterministic", action="store_true", help="omit the timestamp")
    graph_input(sp)
    sp.set_defaults(func=cmd_solve)

    for name, func, help_ in (
        ("bounds", cmd_bounds, "lower and upper bounds on v"),
        ("classify", cmd_classify, "interior-vertex flags and almost-triangle-free test"),
        ("efl", cmd_efl, "check chi <= v"),
    ):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("file")
        graph_input(sp)
        sp.set_defaults(func=func)

    sp = sub.add_parser("surgery", help="graph surgeries with predicted effect on v")
    ops = sp.add_subparsers(dest="op", required=True)
    for name, extra in (("join", "other"), ("collapse", None), ("delete-edge", None)):
        op = ops.add_parser(name)
        op.add_argument("file")
        if extra:
            op.add_argument(extra)
        op.add_argument("a", type=int)
        op.add_argument("b", type=int)
        op.add_argument("--verify", action="store_true")
        graph_input(op)
        op.set_defaults(func=cmd_surgery)
    op = ops.add_parser("remove-clique")
    op.add_argument("file")
    op.add_argument("vertices", type=int, nargs="+")
    op.add_argument("--verify", action="store_true")
    graph_input(op)
    op.set_defaults(func=cmd_surgery)

    sp = sub.add_parser("batch", help="run a check over a graph6 catalog")
    sp.add_argument("catalog")
    sp.add_argument("--check", choices=("efl", "oracle", "atf", "bounds"), required=True)
    sp.set_defaults(func=cmd_batch)

    sp = sub.add_parser("verify", help="re-check a certificate document")
    sp.add_argument("certificate")
    sp.set_defaults(func=cmd_verify)
    return p


def run_command(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args, out)
    except (ParseError, OSError) as exc:
        out.write(f"error: {exc}\n")
        return EXIT_PARSE
    except BudgetExceeded as exc:
        out.write(f"budget exceeded: v in [{exc.lower}, {exc.upper}]\n")
        return EXIT_BUDGET
    except GraphError as exc:
        out.write(f"error: {exc}\n")
        return EXIT_USAGE


def main() -> None:
    sys.exit(run_command())


if __name__ == "__main__":
    main()
