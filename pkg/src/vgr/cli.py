"""Command line interface.

Exit codes: 0 on success, 2 on malformed input, 3 when the requested
generation parameters are proven impossible.
"""
from __future__ import annotations

import argparse
import csv
import json
import random
import sys

from .bounds import best_lower_bound, lambda_max
from .canon import canonical_graph
from .codec import (
    MalformedLineError,
    OrderTooLargeError,
    encode_graph6,
    read_graph6,
)
from .constructions import (
    PreconditionViolated,
    cartesian_product,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    double_complete,
    generalized_truncation,
)
from .generator import (
    ParameterImpossible,
    SearchOptions,
    find_extremal,
    generate_all,
)
from .graph import DisconnectedGraphError, classify

EXIT_OK = 0
EXIT_MALFORMED = 2
EXIT_IMPOSSIBLE = 3


def _profile_str(prof) -> str:
    if not prof:
        return f"not-vgr reason={prof.reason} witness={prof.witness}"
    s = f"v={prof.v} k={prof.k} g={prof.g} lambda={prof.lam}"
    s += f" egr={'yes' if prof.is_egr else 'no'}"
    if prof.lambda_edge is not None:
        s += f" lambda_edge={prof.lambda_edge}"
    s += f" bipartite={'yes' if prof.is_bipartite else 'no'}"
    return s


def cmd_generate(args) -> int:
    opts = SearchOptions(threads=args.threads)
    if args.all_orders_up_to is not None:
        orders = range(1, args.all_orders_up_to + 1)
    elif args.v is None:
        print("error: need -v or --all-orders-up-to", file=sys.stderr)
        return EXIT_MALFORMED
    else:
        orders = [args.v]
    total = 0
    for v in orders:
        try:
            graphs = generate_all(v, args.k, args.g, args.l, options=opts)
        except ParameterImpossible as exc:
            print(f"impossible: {exc}", file=sys.stderr)
            return EXIT_IMPOSSIBLE
        total += len(graphs)
        if args.count_only:
            if args.all_orders_up_to is not None:
                print(f"{v}\t{len(graphs)}")
        else:
            for g_ in graphs:
                print(encode_graph6(canonical_graph(g_)))
    if args.count_only and args.all_orders_up_to is None:
        print(total)
    return EXIT_OK


def cmd_bounds(args) -> int:
    report = best_lower_bound(args.k, args.g, args.l)
    rules = []
    for name, fired in report.verdicts:
        if fired:
            rules.append({"name": name, "value": "impossible"})
    for name, value in report.lower_bounds:
        rules.append({"name": name, "value": value})
    record = {
        "k": report.k,
        "g": report.g,
        "lambda": report.lam,
        "rules": rules,
        "best_lb": report.best_lb,
        "status": "impossible" if report.impossible else "bounded",
    }
    if args.json:
        print(json.dumps(record))
        return EXIT_OK
    print(f"k={report.k} g={report.g} lambda={report.lam}")
    print(f"moore bound     {report.moore}")
    print(f"cycle capacity  {report.lambda_cap}")
    if report.impossible:
        rule = next(name for name, fired in report.verdicts if fired)
        print(f"impossible      ({rule})")
        return EXIT_OK
    for name, value in report.lower_bounds:
        print(f"{name:<22} {value}")
    print(f"best lower bound {report.best_lb}")
    if report.moore_required:
        print("note: only the Moore graph can attain this cycle count")
    return EXIT_OK


def _iter_inputs(paths):
    if not paths or paths == ["-"]:
        yield from read_graph6(sys.stdin)
        return
    for path in paths:
        with open(path) as fh:
            yield from read_graph6(fh)


def cmd_filter(args) -> int:
    matched = 0
    try:
        for g_ in _iter_inputs(args.files):
            try:
                prof = classify(g_)
            except DisconnectedGraphError:
                continue
            if not prof:
                continue
            if args.k is not None and prof.k != args.k:
                continue
            if args.g is not None and prof.g != args.g:
                continue
            if args.l is not None and prof.lam != args.l:
                continue
            matched += 1
            print(f"{encode_graph6(g_)}\t{_profile_str(prof)}")
    except (MalformedLineError, OrderTooLargeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MALFORMED
    print(f"matched {matched}", file=sys.stderr)
    return EXIT_OK


def cmd_check(args) -> int:
    try:
        for i, g_ in enumerate(_iter_inputs(args.files)):
            try:
                prof = classify(g_)
            except DisconnectedGraphError:
                print(f"{i}\tdisconnected")
                continue
            print(f"{i}\t{_profile_str(prof)}")
    except (MalformedLineError, OrderTooLargeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MALFORMED
    return EXIT_OK


def _load_operand(token: str):
    """K<n>, C<n>, KB<a>,<b>, or a path to a one-graph graph6 file."""
    if token.startswith("K") and token[1:].isdigit():
        return complete_graph(int(token[1:]))
    if token.startswith("C") and token[1:].isdigit():
        return cycle_graph(int(token[1:]))
    if token.startswith("KB"):
        parts = token[2:].split(",")
        if len(parts) == 2 and all(p.isdigit() for p in parts):
            return complete_bipartite(int(parts[0]), int(parts[1]))
    with open(token) as fh:
        for g_ in read_graph6(fh):
            return g_
    raise MalformedLineError(1, f"no graph in {token}")


def cmd_construct(args) -> int:
    try:
        if args.kind == "cycle":
            out = cycle_graph(args.n)
        elif args.kind == "double-complete":
            out = double_complete(args.k)
        elif args.kind == "truncation":
            rng = random.Random(args.seed) if args.seed is not None else None
            out = generalized_truncation(
                _load_operand(args.operands[0]),
                _load_operand(args.operands[1]),
                rng=rng,
            )
        else:
            out = cartesian_product(
                _load_operand(args.operands[0]), _load_operand(args.operands[1])
            )
    except (MalformedLineError, OrderTooLargeError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MALFORMED
    except (PreconditionViolated, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MALFORMED
    print(encode_graph6(out))
    try:
        print(_profile_str(classify(out)), file=sys.stderr)
    except DisconnectedGraphError:
        print("disconnected", file=sys.stderr)
    return EXIT_OK


def cmd_table(args) -> int:
    rows = []
    for g_ in range(args.gmin, args.gmax + 1):
        for lam in range(1, lambda_max(args.k, g_) + 1):
            rows.append((g_, lam))
    per_row = args.budget / len(rows) if rows else 0.0
    opts = SearchOptions(threads=args.threads)
    out = open(args.output, "w", newline="") if args.output else sys.stdout
    writer = csv.writer(out)
    writer.writerow(["k", "g", "lambda", "lb", "ub", "status"])
    for g_, lam in rows:
        res = find_extremal(
            args.k, g_, lam, v_max=args.max_order, budget=per_row, options=opts
        )
        if res.status == "found":
            writer.writerow([args.k, g_, lam, res.n, res.n, "exact"])
        elif res.status == "impossible":
            writer.writerow([args.k, g_, lam, "", "", "impossible"])
        else:
            writer.writerow([args.k, g_, lam, res.verified_lb, "", "open"])
    if args.output:
        out.close()
    return EXIT_OK


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="vgr",
        description="Generate, bound and classify vertex-girth-regular graphs",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="exhaustively generate graphs")
    p.add_argument("-v", type=int, help="order")
    p.add_argument("-k", type=int, required=True, help="degree")
    p.add_argument("-g", type=int, required=True, help="girth")
    p.add_argument("-l", type=int, required=True, help="cycles per vertex")
    p.add_argument("--count-only", action="store_true")
    p.add_argument("--all-orders-up-to", type=int, metavar="N")
    p.add_argument("--threads", type=int, default=1)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("bounds", help="lower bounds and verdicts")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("-g", type=int, required=True)
    p.add_argument("-l", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("filter", help="keep vertex-girth-regular inputs")
    p.add_argument("-k", type=int)
    p.add_argument("-g", type=int)
    p.add_argument("-l", type=int)
    p.add_argument("files", nargs="*", help="graph6 files (default stdin)")
    p.set_defaults(func=cmd_filter)

    p = sub.add_parser("check", help="classify each input graph")
    p.add_argument("files", nargs="*", help="graph6 files (default stdin)")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("construct", help="build known families")
    kind = p.add_subparsers(dest="kind", required=True)
    q = kind.add_parser("cycle")
    q.add_argument("-n", type=int, required=True)
    q = kind.add_parser("double-complete")
    q.add_argument("-k", type=int, required=True)
    q = kind.add_parser("truncation")
    q.add_argument("operands", nargs=2, metavar="GRAPH")
    q.add_argument("--seed", type=int)
    q = kind.add_parser("product")
    q.add_argument("operands", nargs=2, metavar="GRAPH")
    for q_ in kind.choices.values():
        q_.set_defaults(func=cmd_construct)

    p = sub.add_parser("table", help="bounds table for a degree")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--gmin", type=int, default=3)
    p.add_argument("--gmax", type=int, required=True)
    p.add_argument("--budget", type=float, default=60.0, help="total seconds")
    p.add_argument("--max-order", type=int)
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_table)

    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
