"""Command-line interface.

SPEC arguments are either a path to a group-spec file or the spec text
itself, e.g. ``"builtin q8"`` or ``"group perm degree=3; gen (0 1); gen (0 1 2)"``.
"""

from __future__ import annotations

import argparse
import os
import sys
from typing import Optional

from . import core, mn, reports, tree
from .ac import TupleFilter, ac_classes, generalized_ac_check
from .builtins import BUILTIN_NAMES, CATALOG
from .errors import CapExceededError, GroupSpecError, MNError
from .group import CAPS, PermGroup
from .groupspec import parse_cycles, parse_group_spec


def load_spec(arg: str, one_indexed: bool) -> PermGroup:
    if os.path.isfile(arg):
        with open(arg, encoding="utf-8") as fh:
            return parse_group_spec(fh.read(), one_indexed)
    return parse_group_spec(arg, one_indexed)


def cmd_check(args) -> dict:
    G = load_spec(args.spec, args.one_indexed)
    in_mn = mn.is_in_mn_direct(G)
    cls = core.nilpotency_class(G)
    return reports.envelope("check", {
        "group": G.label,
        "order": str(G.order()),
        "in_mn": in_mn,
        "nilpotent": cls is not None,
        "nilpotency_class": cls,
        "agree": in_mn == (cls is not None),
    })


def cmd_report(args) -> dict:
    return reports.theorem1_dict(mn.theorem1_report(load_spec(args.spec, args.one_indexed)))


def _subgroup_cmd(args, which: str) -> dict:
    G = load_spec(args.spec, args.one_indexed)
    H = core.frattini(G) if which == "frattini" else core.commutator_subgroup(G)
    return reports.envelope(which, {
        "group": G.label,
        "order": str(G.order()),
        "subgroup_order": str(H.order()),
        "generators": [str(g) for g in H.generators],
    })


def cmd_witness(args) -> dict:
    if args.kind == "s3":
        r = mn.s3_witness()
    elif args.kind == "dihedral":
        if args.m is None:
            raise MNError("witness dihedral needs M")
        r = mn.free_product_witness(mn.WitnessKind.FREE_PRODUCT_Z2Z2_IN_DIHEDRAL, m=args.m)
    else:
        if not (args.group and args.x and args.y):
            raise MNError("witness custom needs --group SPEC, --x CYCLES and --y CYCLES")
        G = load_spec(args.group, args.one_indexed)
        x = parse_cycles(args.x, G.degree, args.one_indexed)
        y = parse_cycles(args.y, G.degree, args.one_indexed)
        r = mn.free_product_witness(mn.WitnessKind.FREE_GROUP_RANK2_IN_QUOTIENT, target=G, x=x, y=y)
    return reports.witness_dict(r)


def cmd_ac_classes(args) -> dict:
    G = load_spec(args.spec, args.one_indexed)
    report = generalized_ac_check(G, args.n)
    flt = TupleFilter(args.filter)
    classes = ac_classes(G, args.n, flt)
    return reports.ac_dict(report, {
        "filter": flt.value,
        "filtered_tuple_count": sum(len(c) for c in classes),
        "filtered_class_count": len(classes),
        "filtered_class_sizes": [len(c) for c in classes],
    })


def cmd_tree(args) -> dict:
    if args.automaton == "gupta-sidki":
        if args.p is None:
            raise MNError("tree gupta-sidki needs P")
        A = tree.gupta_sidki(args.p)
        p = args.p
    elif args.automaton == "grigorchuk":
        A = tree.grigorchuk(args.omega)
        p = 2
    else:
        A = tree.basilica()
        p = 2
    G = tree.level_quotient(A, args.level)
    order = G.order()
    nilpotent = core.is_nilpotent(G) if order <= CAPS.enumeration else None
    in_mn = mn.is_in_mn_direct(G) if order <= CAPS.lattice else None
    return reports.envelope("tree", {
        "automaton": A.name,
        "level": args.level,
        "degree": G.degree,
        "order": str(order),
        "p": p,
        "p_group": tree.p_group_check(G, p),
        "nilpotent": nilpotent,
        "in_mn": in_mn,
    })


def cmd_basilica_probe(args) -> dict:
    return reports.dihedral_dict(tree.basilica_dinfty_probe(args.level))


def cmd_catalog(args) -> dict:
    return reports.envelope("catalog", {
        "builtins": [BUILTIN_NAMES[k] for k in sorted(BUILTIN_NAMES)],
        "product": "product (SPEC) (SPEC)   direct product",
        "catalog": CATALOG,
        "automata": ["grigorchuk [--omega PREFIX]", "gupta-sidki P", "basilica"],
    })


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--one-indexed", action="store_true",
                        help="cycle notation in specs uses points 1..D")

    parser = argparse.ArgumentParser(
        prog="mngroups",
        description="Decide whether all maximal subgroups of finite groups are normal, and related experiments.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", parents=[common], help="MN verdict and nilpotency")
    p.add_argument("spec")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("report", parents=[common], help="four-condition equivalence report")
    p.add_argument("spec")
    p.set_defaults(func=cmd_report)

    p = sub.add_parser("frattini", parents=[common], help="Frattini subgroup")
    p.add_argument("spec")
    p.set_defaults(func=lambda a: _subgroup_cmd(a, "frattini"))

    p = sub.add_parser("commutator", parents=[common], help="commutator subgroup")
    p.add_argument("spec")
    p.set_defaults(func=lambda a: _subgroup_cmd(a, "commutator"))

    p = sub.add_parser("witness", parents=[common],
                       help="normally generating but non-generating witness sets")
    p.add_argument("kind", choices=["s3", "dihedral", "custom"])
    p.add_argument("m", nargs="?", type=int, help="M for the dihedral group of order 2M")
    p.add_argument("--group", help="target group SPEC for 'custom'")
    p.add_argument("--x", help="image of the first free generator, cycle notation")
    p.add_argument("--y", help="image of the second free generator, cycle notation")
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("ac-classes", parents=[common], help="Andrews-Curtis classes of n-tuples")
    p.add_argument("spec")
    p.add_argument("-n", type=int, required=True, help="tuple length")
    p.add_argument("--filter", default=TupleFilter.NORMALLY_GENERATING.value,
                   choices=[f.value for f in TupleFilter])
    p.set_defaults(func=cmd_ac_classes)

    p = sub.add_parser("tree", parents=[common], help="level quotients of automaton groups")
    p.add_argument("automaton", choices=["grigorchuk", "gupta-sidki", "basilica"])
    p.add_argument("p", nargs="?", type=int, help="odd prime for gupta-sidki")
    p.add_argument("--level", type=int, required=True)
    p.add_argument("--omega", help="defining sequence prefix over 0,1,2 (grigorchuk)")
    p.set_defaults(func=cmd_tree)

    p = sub.add_parser("basilica-probe", parents=[common], help="dihedral quotients of Basilica levels")
    p.add_argument("--level", type=int, required=True)
    p.set_defaults(func=cmd_basilica_probe)

    p = sub.add_parser("catalog", parents=[common], help="list built-in groups")
    p.set_defaults(func=cmd_catalog)
    return parser


def _emit_error(args, payload: dict, text: str) -> None:
    if getattr(args, "json", False):
        print(reports.to_json(reports.envelope("error", payload)))
    else:
        print(f"error: {text}", file=sys.stderr)


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        result = args.func(args)
    except CapExceededError as exc:
        _emit_error(args, exc.to_dict(), str(exc))
        return 3
    except GroupSpecError as exc:
        _emit_error(args, {"error": "group_spec", "line": exc.line, "column": exc.column,
                           "message": exc.message}, str(exc))
        return 2
    except MNError as exc:
        _emit_error(args, {"error": type(exc).__name__, "message": str(exc)}, str(exc))
        return 1
    if args.json:
        print(reports.to_json(result))
    else:
        print(reports.to_plain(result))
    return 0


if __name__ == "__main__":
    sys.exit(main())
