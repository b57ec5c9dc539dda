"""Command line interface.

Exit codes: 0 success (or property true), 1 property false for ``check``,
``validate`` and ``continuity``, 2 bad input or usage.
"""
from __future__ import annotations

import argparse
import sys

from . import analysis, builders, core, formats
from .errors import TopologyError

EXIT_OK, EXIT_FALSE, EXIT_INPUT = 0, 1, 2


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _bool(x: bool) -> str:
    return "true" if x else "false"


def cmd_validate(args, out):
    shape, masks = formats.read_family(_read(args.file))
    try:
        t = core.validate_topology(shape, masks)
    except TopologyError as e:
        print(f"invalid: {type(e).__name__}: {e}", file=out)
        return EXIT_FALSE
    print(f"valid: {len(t)} open parts over {shape.n} points", file=out)
    return EXIT_OK


def cmd_from_preorder(args, out):
    pre = formats.parse_preorder(_read(args.file), strict=args.strict)
    out.write(formats.serialize_topology(core.topology_from_preorder(pre)))
    return EXIT_OK


def cmd_to_preorder(args, out):
    t = formats.parse_topology(_read(args.file))
    out.write(formats.serialize_preorder(core.preorder_from_topology(t)))
    return EXIT_OK


def cmd_minimal_opens(args, out):
    t = formats.parse_topology(_read(args.file))
    for lab in t.shape.labels:
        print(f"{lab}: {' '.join(core.minimal_open_part(t, lab).labels)}", file=out)
    return EXIT_OK


def cmd_basis(args, out):
    t = formats.parse_topology(_read(args.file))
    out.write(formats.serialize_basis(core.minimal_basis(t)))
    return EXIT_OK


_CHECKS = {
    "t0": ("T0", analysis.is_t0),
    "t1": ("T1", analysis.is_t1),
    "discrete": ("discrete", analysis.is_discrete),
    "connected": ("connected", analysis.is_connected),
}


def cmd_check(args, out):
    wanted = [k for k in _CHECKS if getattr(args, k)]
    if not wanted:
        raise _Usage("check: give at least one of --t0 --t1 --discrete --connected")
    t = formats.parse_topology(_read(args.file))
    ok = True
    for k in wanted:
        name, fn = _CHECKS[k]
        v = fn(t)
        ok &= v
        print(f"{name}: {_bool(v)}", file=out)
    return EXIT_OK if ok else EXIT_FALSE


def cmd_from_graph(args, out):
    g = formats.parse_graph(_read(args.file))
    out.write(formats.serialize_topology(builders.topology_from_graph(g.shape, g.edges)))
    return EXIT_OK


def cmd_from_derivation(args, out):
    shape, trace = formats.parse_derivation(_read(args.file))
    out.write(formats.serialize_topology(builders.topology_from_derivation(shape, trace)))
    return EXIT_OK


def cmd_from_matrix(args, out):
    m = formats.parse_matrix(_read(args.file))
    out.write(formats.serialize_topology(builders.topology_from_relation_matrix(m)))
    return EXIT_OK


def cmd_enumerate(args, out):
    tops = analysis.enumerate_topologies(args.n, args.t0_only, method=args.method)
    if args.count_only:
        print(sum(1 for _ in tops), file=out)
        return EXIT_OK
    for i, t in enumerate(tops):
        if i:
            out.write("\n")
        out.write(formats.serialize_topology(t))
    return EXIT_OK


def cmd_hasse(args, out):
    text = _read(args.file)
    first = next(formats.content_lines(text), (0, ""))[1]
    if first.startswith("topology over"):
        pre = core.preorder_from_topology(formats.parse_topology(text))
    else:
        pre = formats.parse_preorder(text)
    d = analysis.hasse_edges(pre)
    out.write(formats.hasse_to_dot(d) if args.dot else formats.hasse_to_text(d))
    return EXIT_OK


def cmd_continuity(args, out):
    src = formats.parse_topology(_read(args.source))
    dst = formats.parse_topology(_read(args.target))
    fmap = formats.parse_map(_read(args.map), src.shape, dst.shape)
    v = analysis.is_continuous(fmap, src, dst)
    print(f"continuous: {_bool(v)}", file=out)
    return EXIT_OK if v else EXIT_FALSE


class _Usage(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="pointtopo", description="Order topology on finite shapes made with points.")
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, fn, help, file_help="input file, '-' for stdin"):
        p = sub.add_parser(name, help=help)
        if file_help:
            p.add_argument("file", help=file_help)
        p.set_defaults(func=fn)
        return p

    add("validate", cmd_validate, "check a topology file against the axioms")
    p = add("from-preorder", cmd_from_preorder, "order topology of a preorder file")
    p.add_argument("--strict", action="store_true", help="reject input that is not already transitive")
    add("to-preorder", cmd_to_preorder, "specialization preorder of a topology file")
    add("minimal-opens", cmd_minimal_opens, "minimal open part of every point")
    add("basis", cmd_basis, "minimal basis of a topology")
    p = add("check", cmd_check, "test separation and connectedness properties")
    for k in _CHECKS:
        p.add_argument(f"--{k}", action="store_true")
    add("from-graph", cmd_from_graph, "order topology of a directed graph (edge p -> q gives q <= p)")
    add("from-derivation", cmd_from_derivation, "order topology of a set-grammar derivation trace")
    add("from-matrix", cmd_from_matrix, "order topology of a partial-order relation matrix")
    p = add("enumerate", cmd_enumerate, "list every labelled topology on n points", file_help=None)
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--t0-only", action="store_true")
    p.add_argument("--count-only", action="store_true")
    p.add_argument("--method", choices=("preorder", "families"), default="preorder")
    p = add("hasse", cmd_hasse, "covering diagram of a preorder or topology file")
    p.add_argument("--dot", action="store_true", help="emit graphviz DOT")
    p = add("continuity", cmd_continuity, "is a point map continuous between two topologies", file_help=None)
    p.add_argument("map", help="map file, lines '<source> => <target>'")
    p.add_argument("source", help="source topology file")
    p.add_argument("target", help="target topology file")
    return ap


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_INPUT
    try:
        return args.func(args, out)
    except (TopologyError, _Usage, OSError) as e:
        print(f"pointtopo {args.command}: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_INPUT


def main_entry():
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
