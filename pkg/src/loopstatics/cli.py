"""Command-line interface.

Subcommands: `gen` writes built-in example structures, `cycles` reports
the spanning tree and fundamental cycle basis, `axial` runs the
equilibrium-matrix analysis and reconstructs the axial state through the
loop formalism, `check` evaluates a supplied stress state, and `export`
writes form/force diagram mesh files.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .cycles import fundamental_cycles, spanning_tree
from .diagrams import export_diagrams, realize_state
from .document import (
    generate_k5,
    generate_prism,
    load_structure,
    parse_state,
    serialize_structure,
)
from .errors import StateError, StructureError
from .report import build_report
from .statics import analyze_statics, axial_to_state
from .structures import prism_critical_twist


def _parse_node_id(text: str):
    """Interpret a node id flag: JSON scalars stay typed, else a string."""
    try:
        value = json.loads(text)
    except json.JSONDecodeError:
        return text
    return value if isinstance(value, (str, int)) else text


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text()


def _emit(text: str, out: str | None):
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _load(path: str):
    doc, graph = load_structure(_read_text(path))
    return doc, graph


def _report_text(report, fmt: str) -> str:
    return report.to_text() if fmt == "text" else report.to_json()


def _add_common(p):
    p.add_argument("structure", help="structure document path ('-' for stdin)")
    p.add_argument("--tree-root", type=_parse_node_id, default=None,
                   help="override the spanning-tree root node")
    p.add_argument("--tol", type=float, default=1e-9,
                   help="relative tolerance for rank and axial checks")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.add_argument("-o", "--out", default=None, help="write output to a file")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="loopstatics",
        description="Loop-based graphic statics for 3D frames.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="write a built-in example structure")
    gen_sub = gen.add_subparsers(dest="example", required=True)
    gen_k5 = gen_sub.add_parser("k5", help="complete five-node frame")
    gen_k5.add_argument("--center", type=float, nargs=3, default=(0.0, 0.0, 0.0),
                        metavar=("X", "Y", "Z"))
    gen_k5.add_argument("-o", "--out", default=None)
    gen_prism = gen_sub.add_parser("prism", help="three-prism tensegrity")
    gen_prism.add_argument("--radius", type=float, default=1.0)
    gen_prism.add_argument("--half-height", type=float, default=0.5)
    twist = gen_prism.add_mutually_exclusive_group()
    twist.add_argument("--twist", type=float, default=0.0,
                       help="top-triangle twist in radians")
    twist.add_argument("--critical", action="store_true",
                       help="use the self-stressable twist found by the "
                            "singular-value search")
    gen_prism.add_argument("-o", "--out", default=None)

    cycles = sub.add_parser("cycles", help="spanning tree and cycle basis report")
    _add_common(cycles)

    axial = sub.add_parser(
        "axial", help="equilibrium-matrix analysis and loop reconstruction"
    )
    _add_common(axial)

    check = sub.add_parser("check", help="evaluate a supplied stress state")
    _add_common(check)
    check.add_argument("--state", required=True, help="stress-state document path")

    export = sub.add_parser("export", help="write form/force diagram meshes")
    _add_common(export)
    source = export.add_mutually_exclusive_group()
    source.add_argument("--state", default=None, help="stress-state document path")
    source.add_argument("--axial", action="store_true",
                        help="realize the first axial self-stress from the oracle")
    export.add_argument("--loops", choices=("bars", "cycles"), default="bars",
                        help="one dual loop per bar or per basis cycle")
    export.add_argument("--share-vertex", action="store_true",
                        help="translate loops so they share a central node")
    export.add_argument("--merge-loops", action="store_true",
                        help="splice rectangle chains into connected loops")
    export.add_argument("--out-dir", default=".", help="output directory")
    return parser


def _cmd_gen(args) -> int:
    if args.example == "k5":
        doc = generate_k5(center=tuple(args.center))
    else:
        twist = prism_critical_twist(args.radius, args.half_height) \
            if args.critical else args.twist
        doc = generate_prism(args.radius, args.half_height, twist)
    _emit(serialize_structure(doc), args.out)
    return 0


def _cmd_cycles(args) -> int:
    _, graph = _load(args.structure)
    tree = spanning_tree(graph, root=args.tree_root)
    basis = fundamental_cycles(graph, tree)
    report = build_report(graph, tree=tree, basis=basis, with_statics=False)
    _emit(_report_text(report, args.format), args.out)
    return 0


def _cmd_axial(args) -> int:
    _, graph = _load(args.structure)
    tree = spanning_tree(graph, root=args.tree_root)
    basis = fundamental_cycles(graph, tree)
    summary = analyze_statics(graph, rtol=args.tol)
    state = None
    if summary.s > 0:
        state = axial_to_state(graph, basis, summary.selfstress_basis[0])
    report = build_report(
        graph, tree=tree, basis=basis, summary=summary, state=state,
        axial_tol=args.tol,
    )
    _emit(_report_text(report, args.format), args.out)
    return 0


def _cmd_check(args) -> int:
    _, graph = _load(args.structure)
    tree = spanning_tree(graph, root=args.tree_root)
    basis = fundamental_cycles(graph, tree)
    state = parse_state(_read_text(args.state))
    report = build_report(
        graph, tree=tree, basis=basis, state=state,
        with_statics=False, axial_tol=args.tol,
    )
    _emit(_report_text(report, args.format), args.out)
    return 0


def _cmd_export(args) -> int:
    _, graph = _load(args.structure)
    tree = spanning_tree(graph, root=args.tree_root)
    basis = fundamental_cycles(graph, tree)
    state = None
    if args.state:
        state = parse_state(_read_text(args.state))
    elif args.axial:
        summary = analyze_statics(graph, rtol=args.tol)
        if summary.s == 0:
            raise StructureError("structure has no axial self-stress to export")
        state = axial_to_state(graph, basis, summary.selfstress_basis[0])
    loops = None
    if state is not None:
        realized = realize_state(
            graph, basis, state,
            per="cycle" if args.loops == "cycles" else "bar",
            tol=args.tol,
            share_vertex=args.share_vertex,
            merge=args.merge_loops,
        )
        loops = realized.loops
        for name in realized.fallbacks:
            print(f"note: {name} is not axial; exported as a rectangle chain",
                  file=sys.stderr)
    paths = export_diagrams(graph, loops, args.out_dir)
    for p in paths:
        print(p)
    return 0


_COMMANDS = {
    "gen": _cmd_gen,
    "cycles": _cmd_cycles,
    "axial": _cmd_axial,
    "check": _cmd_check,
    "export": _cmd_export,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (StructureError, StateError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
