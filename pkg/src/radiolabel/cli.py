"""Command-line interface.

Exit codes: 0 success, 1 semantic failure (violation, disagreement,
unproven optimum), 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import logging
import os
import sys
from pathlib import Path

from .construction import ConstructionError, lower_bound_mpn, mpn_instance, mpn_labeling, rn_mpn_formula
from .documents import DocumentError, LabelingDocument, read_graph, read_labeling, to_dot, write_graph
from .graph import GraphError, all_pairs_distances
from .labeling import is_L21_labeling, is_radio_labeling, span
from .report import result_row, rows_to_csv
from .solver import SolverBudget, exact_lambda, exact_radio_number

log = logging.getLogger("radiolabel")

OK, FAILED, USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def parse_range(text: str) -> range:
    for sep in ("..", "-", ":"):
        if sep in text:
            lo, _, hi = text.partition(sep)
            break
    else:
        lo = hi = text
    try:
        a, b = int(lo), int(hi)
    except ValueError:
        raise UsageError(f"bad range {text!r}; expected A..B") from None
    if b < a:
        raise UsageError(f"empty range {text!r}")
    return range(a, b + 1)


def _budget(args: argparse.Namespace) -> SolverBudget:
    return SolverBudget(args.budget_nodes, args.budget_seconds)


def cmd_construct(args: argparse.Namespace) -> int:
    n = args.n
    if n < 2:
        raise UsageError(f"--n must be >= 2, got {n}")
    g, dist, levels = mpn_instance(n)
    labels = mpn_labeling(n)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    graph_file = out / f"mpn{n}.graph"
    write_graph(graph_file, g)
    doc = LabelingDocument.from_labeling(g, labels, "radio", graph_path=graph_file.name)
    (out / f"mpn{n}.labeling").write_text(doc.dumps())
    s, formula, bound = span(labels), rn_mpn_formula(n), lower_bound_mpn(g, dist, levels)
    valid = not is_radio_labeling(g, dist, labels)
    print(f"M(P_{n}): span={s} formula={formula} lower_bound={bound} valid={'yes' if valid else 'no'}")
    print(f"wrote {graph_file} and {out / f'mpn{n}.labeling'}")
    return OK if valid and s == formula == bound else FAILED


def cmd_verify(args: argparse.Namespace) -> int:
    g = read_graph(args.graph)
    doc = read_labeling(args.labeling)
    kind = args.kind or doc.kind
    labels = doc.to_labeling(g)
    dist = all_pairs_distances(g)
    check = is_radio_labeling if kind == "radio" else is_L21_labeling
    violations = check(g, dist, labels)
    if not violations:
        print(f"valid {kind} labeling, span={span(labels)}")
        return OK
    print(f"{len(violations)} violation(s) of the {kind} condition:")
    for v in violations:
        print("  " + v.describe(g))
    return FAILED


def cmd_solve(args: argparse.Namespace) -> int:
    g = read_graph(args.graph)
    dist = all_pairs_distances(g)
    if args.kind == "radio":
        res = exact_radio_number(g, dist, _budget(args), threads=args.threads)
    else:
        res = exact_lambda(g, dist, _budget(args))
    status = "proven" if res.proven_optimal else "upper bound (budget exhausted)"
    print(f"optimum={res.optimum} {status} nodes={res.nodes_explored}")
    if args.out:
        kind = "radio" if args.kind == "radio" else "L21"
        ref = os.path.relpath(Path(args.graph).resolve(), Path(args.out).resolve().parent)
        doc = LabelingDocument.from_labeling(g, res.witness, kind, graph_path=ref)
        Path(args.out).write_text(doc.dumps())
        print(f"witness written to {args.out}")
    return OK if res.proven_optimal else FAILED


def cmd_table(args: argparse.Namespace) -> int:
    ns = parse_range(args.range)
    if ns.start < 2:
        raise UsageError("range must start at n >= 2")
    rows, unproven = [], []
    for n in ns:
        row, proven = result_row(n, args.exact, _budget(args), args.threads)
        rows.append(row)
        if not proven:
            unproven.append(n)
    text = rows_to_csv(rows)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    bad = [r.n for r in rows if not r.agreement]
    if bad:
        log.error("disagreement at n = %s", bad)
    if unproven:
        log.error("exact value not proven within budget at n = %s", unproven)
    return FAILED if bad or unproven else OK


def cmd_export(args: argparse.Namespace) -> int:
    dot = to_dot(read_graph(args.graph))
    if args.out:
        Path(args.out).write_text(dot)
    else:
        sys.stdout.write(dot)
    return OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="radiolabel", description="Radio labelings of middle graphs of paths.")
    sub = parser.add_subparsers(dest="command", required=True)

    def budget_flags(p: argparse.ArgumentParser) -> None:
        p.add_argument("--budget-nodes", type=int, default=None, help="node limit for exact search")
        p.add_argument("--budget-seconds", type=float, default=None, help="wall-clock limit for exact search")
        p.add_argument("--threads", type=int, default=1, help="worker processes for the radio search")

    p = sub.add_parser("construct", help="write M(P_n) and its optimal radio labeling")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--out", default=".", help="output directory")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="check a labeling against a graph")
    p.add_argument("graph")
    p.add_argument("labeling")
    p.add_argument("--kind", choices=["radio", "L21"], default=None, help="defaults to the document's kind")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("solve", help="exact radio number or lambda number")
    p.add_argument("graph")
    p.add_argument("--kind", choices=["radio", "lambda"], default="radio")
    p.add_argument("--out", default=None, help="witness labeling file")
    budget_flags(p)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("table", help="CSV comparison of bound, construction and formula")
    p.add_argument("--range", required=True, help="inclusive n range, e.g. 2..10")
    p.add_argument("--exact", action="store_true", help="add the exact solver's value")
    p.add_argument("--out", default=None, help="CSV file (default stdout)")
    budget_flags(p)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("export", help="DOT rendering of a graph document")
    p.add_argument("graph")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_export)
    return parser


def main(argv: list[str] | None = None) -> int:
    logging.basicConfig(level=logging.INFO, format="%(levelname)s: %(message)s")
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, DocumentError, GraphError, ConstructionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
