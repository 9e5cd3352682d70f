"""``tcomp`` command line.

Exit codes: 0 for YES / valid / avoided, 1 for NO / violations / witness
found, 2 for unreadable or malformed input.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import instances, oracle, patterns
from .implication import Strategy
from .model import (
    TemporalGraph,
    VertexOrder,
    parse_graph,
    parse_order,
    parse_orientation,
    serialize_graph,
    serialize_order,
    serialize_orientation,
    temporalize,
)
from .recognize import recognize, recognize_multilabel
from .verify import Variant, verify

EXIT_OK, EXIT_NO, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _read(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror or exc}") from None


def _load_graph(path: str) -> TemporalGraph:
    text = _read(path)
    try:
        return parse_graph(text)
    except ValueError as exc:
        raise InputError(f"{path}: {exc}") from None


def _load(path: str, parser, g: TemporalGraph):
    text = _read(path)
    try:
        return parser(text, g)
    except ValueError as exc:
        raise InputError(f"{path}: {exc}") from None


def _emit(obj) -> None:
    print(json.dumps(obj, indent=2))


# ---------------------------------------------------------------------------


def cmd_recognize(args) -> int:
    g = _load_graph(args.graph)
    if not args.multilabel and not g.is_simple:
        raise InputError(f"{args.graph}: multilabel edges present; pass --multilabel")
    run = recognize_multilabel if args.multilabel else recognize
    report = run(g, args.strategy)
    if args.json:
        print(report.to_json())
    elif report.is_yes:
        print("YES")
        print("order: " + " ".join(report.order.names(g)))
        sys.stdout.write(serialize_orientation(report.orientation))
    else:
        arcs = report.witness_arcs()
        print("NO")
        print("witness: " + " -> ".join([u for u, _ in arcs] + [arcs[0][0]]))
    return EXIT_OK if report.is_yes else EXIT_NO


def cmd_verify(args) -> int:
    g = _load_graph(args.graph)
    o = _load(args.orientation, parse_orientation, g)
    if not o.is_total:
        raise InputError(f"{args.orientation}: orientation does not cover every edge")
    try:
        found = verify(g, o, args.variant, limit=args.limit)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    if args.json:
        _emit({"variant": args.variant, "valid": not found, "violations": [v.to_dict() for v in found]})
    else:
        for v in found:
            print(v)
        if not found:
            print(f"valid {args.variant}")
    return EXIT_NO if found else EXIT_OK


def _pattern_check(g, order, which):
    try:
        if which == "tto":
            return patterns.avoids_tto_pattern(g, order)
        return patterns.avoids_strict_patterns(g, order)
    except ValueError as exc:
        raise InputError(str(exc)) from None


def cmd_order_check(args) -> int:
    g = _load_graph(args.graph)
    order = _load(args.order, parse_order, g)
    w = _pattern_check(g, order, args.patterns)
    if args.json:
        _emit({"patterns": args.patterns, "avoided": w is None, "witness": None if w is None else w.to_dict(g)})
    elif w is None:
        print(f"order avoids the {args.patterns} patterns")
    else:
        labs = " ".join(f"t{i + 1}={t}" for i, t in enumerate(w.labels))
        print(f"{w.pattern} {' '.join(w.names(g))} {labs}")
    return EXIT_OK if w is None else EXIT_NO


def cmd_order_orient(args) -> int:
    g = _load_graph(args.graph)
    order = _load(args.order, parse_order, g)
    try:
        if args.patterns == "tto":
            o, variant = patterns.orient_by_order(g, order), Variant.TTO
        else:
            o, variant = patterns.strict_orient_by_order(g, order), Variant.STRICT
        found = verify(g, o, variant, limit=1)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    sys.stdout.write(serialize_orientation(o))
    if found:
        print(f"warning: result is not a {variant.value} orientation: {found[0]}", file=sys.stderr)
        return EXIT_NO
    return EXIT_OK


def cmd_temporalize(args) -> int:
    g = _load_graph(args.graph)
    order = _load(args.order, parse_order, g) if args.order else VertexOrder.identity(g.n)
    sys.stdout.write(serialize_graph(temporalize(g, order)))
    return EXIT_OK


def cmd_oracle(args) -> int:
    g = _load_graph(args.graph)
    try:
        res = oracle.enumerate_orientations(
            g, args.variant, limit_m=args.limit_m, materialize=args.list, threads=args.threads
        )
    except ValueError as exc:
        raise InputError(str(exc)) from None
    _emit(res.to_dict(g))
    return EXIT_OK if res.count else EXIT_NO


def cmd_instances(args) -> int:
    if args.action == "list":
        for inst in instances.CATALOG.values():
            print(f"{inst.name}\t{inst.description}")
        return EXIT_OK
    if not args.name:
        raise InputError("instances show needs a NAME")
    try:
        inst = instances.get(args.name)
    except KeyError as exc:
        raise InputError(exc.args[0]) from None
    if args.drawn:
        o = inst.drawn_orientation()
        if o is None:
            raise InputError(f"{inst.name} has no drawn orientation")
        sys.stdout.write(serialize_orientation(o))
    else:
        sys.stdout.write(inst.tgr)
    return EXIT_OK


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="tcomp", description="temporal transitive orientation toolkit")
    sub = p.add_subparsers(dest="command", required=True)

    r = sub.add_parser("recognize", help="decide T-comparability and build a TTO")
    r.add_argument("graph")
    r.add_argument("--multilabel", action="store_true", help="compare label sets (MTTO)")
    r.add_argument("--strategy", choices=[s.value for s in Strategy], default="auto")
    r.add_argument("--json", action="store_true")
    r.set_defaults(func=cmd_recognize)

    v = sub.add_parser("verify", help="check an orientation against a variant")
    v.add_argument("graph")
    v.add_argument("orientation")
    v.add_argument("--variant", choices=[x.value for x in Variant], default="tto")
    v.add_argument("--limit", type=int, default=1000, help="stop after this many violations")
    v.add_argument("--json", action="store_true")
    v.set_defaults(func=cmd_verify)

    for name, func, helptext in (
        ("order-check", cmd_order_check, "look for a forbidden pattern under an order"),
        ("order-orient", cmd_order_orient, "orient edges from a vertex order"),
    ):
        s = sub.add_parser(name, help=helptext)
        s.add_argument("graph")
        s.add_argument("order")
        s.add_argument("--patterns", choices=["tto", "strict"], default="tto")
        if name == "order-check":
            s.add_argument("--json", action="store_true")
        s.set_defaults(func=func)

    t = sub.add_parser("temporalize", help="label a static graph so an order is transitive")
    t.add_argument("graph")
    t.add_argument("--order", help="order file (default: first-appearance order)")
    t.set_defaults(func=cmd_temporalize)

    o = sub.add_parser("oracle", help="enumerate all orientations (small graphs)")
    o.add_argument("graph")
    o.add_argument("--variant", choices=[x.value for x in Variant], default="tto")
    o.add_argument("--limit-m", type=int, default=oracle.DEFAULT_LIMIT_M)
    o.add_argument("--threads", type=int, default=1)
    mode = o.add_mutually_exclusive_group()
    mode.add_argument("--count", action="store_true", help="only count (default)")
    mode.add_argument("--list", action="store_true", help="also list every valid orientation")
    o.set_defaults(func=cmd_oracle)

    i = sub.add_parser("instances", help="built-in example graphs")
    i.add_argument("action", choices=["list", "show"])
    i.add_argument("name", nargs="?")
    i.add_argument("--drawn", action="store_true", help="print the drawn orientation instead")
    i.set_defaults(func=cmd_instances)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse usage errors exit with 2 already
        return int(exc.code or 0)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
