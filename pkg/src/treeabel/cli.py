"""Command-line front end: JSON trees in, deterministic JSON reports out.

Exit codes: 0 on success, 1 on a domain error (invalid tree, violated
precondition, unreadable file), 2 on a usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .abel import DivisorRep, NodePoint, Point, SmoothPoint, abel_d, e_sequence
from .classify import classify
from .compare import compare_principals
from .curves import CurveTree, InvalidTreeError, validate
from .generator import GenSpec, UnsatisfiableSpecError, random_tree
from .stability import enumerate_quasistable, enumerate_semistable


def _emit(payload: object) -> None:
    sys.stdout.write(json.dumps(payload, sort_keys=True, separators=(",", ":")) + "\n")


def _load_tree(path: str) -> CurveTree:
    with open(path, encoding="utf-8") as handle:
        data = json.load(handle)
    return CurveTree.from_data(data)


def _resolve_principal(tree: CurveTree, override: str | None, force: bool) -> str:
    report = classify(tree)
    if override is None:
        return report.principal
    if override not in tree.ids:
        raise ValueError(f"unknown component '{override}'")
    if override not in report.semicentral and not force:
        raise ValueError(
            f"component '{override}' is neither central nor semicentral; "
            "pass --force to use it anyway"
        )
    return override


def _parse_points(tree: CurveTree, spec: str) -> list[Point]:
    points: list[Point] = []
    for token in spec.split(","):
        token = token.strip()
        if not token:
            continue
        head, sep, rest = token.partition(":")
        if not sep or not head or not rest:
            raise ValueError(f"bad point token '{token}', expected COMP:LABEL or node:ID")
        if head == "node":
            tree.node_ends(rest)
            points.append(NodePoint(rest))
        else:
            if head not in tree.ids:
                raise ValueError(f"unknown component '{head}'")
            points.append(SmoothPoint(head, rest))
    if not points:
        raise ValueError("no points given")
    return points


def _divisor_payload(tree: CurveTree, rep: DivisorRep) -> dict[str, dict[str, int]]:
    payload: dict[str, dict[str, int]] = {cid: {} for cid in tree.ids}
    for sym, coeff in rep.coeffs:
        name = sym.label if isinstance(sym, SmoothPoint) else f"{sym.node}@{sym.component}"
        payload[sym.component][name] = coeff
    return payload


def _cmd_validate(args: argparse.Namespace) -> int:
    with open(args.file, encoding="utf-8") as handle:
        data = json.load(handle)
    report = validate(data)
    _emit({"ok": report.ok, "violations": list(report.violations)})
    return 0 if report.ok else 1


def _cmd_classify(args: argparse.Namespace) -> int:
    tree = _load_tree(args.file)
    report = classify(tree)
    _emit(
        {
            "central": list(report.central),
            "semicentral": list(report.semicentral),
            "in_delta_half": report.in_delta_half,
            "principal": report.principal,
        }
    )
    return 0


def _cmd_tails(args: argparse.Namespace) -> int:
    tree = _load_tree(args.file)
    _emit(
        [
            {"node": tail.node, "side": list(tree.members(tail.side))}
            for tail in tree.tails
        ]
    )
    return 0


def _cmd_enumerate(args: argparse.Namespace) -> int:
    tree = _load_tree(args.file)
    if args.principal:
        component = classify(tree).principal
        result = enumerate_quasistable(tree, args.degree, component)
    elif args.quasistable is not None:
        if args.quasistable not in tree.ids:
            raise ValueError(f"unknown component '{args.quasistable}'")
        result = enumerate_quasistable(tree, args.degree, args.quasistable)
    else:
        result = enumerate_semistable(tree, args.degree)
    _emit([tree.multidegree_as_dict(md) for md in result])
    return 0


def _cmd_eseq(args: argparse.Namespace) -> int:
    tree = _load_tree(args.file)
    xpr = _resolve_principal(tree, args.principal_override, args.force)
    seq = e_sequence(tree, xpr, args.dmax)
    _emit([list(md.degrees) for md in seq])
    return 0


def _cmd_abel(args: argparse.Namespace) -> int:
    tree = _load_tree(args.file)
    xpr = _resolve_principal(tree, args.principal_override, args.force)
    points = _parse_points(tree, args.points)
    rep = abel_d(tree, xpr, points)
    _emit(
        {
            "divisor": _divisor_payload(tree, rep),
            "multidegree": tree.multidegree_as_dict(rep.multidegree(tree)),
        }
    )
    return 0


def _cmd_compare(args: argparse.Namespace) -> int:
    tree = _load_tree(args.file)
    report = compare_principals(tree, args.dmax)
    _emit(
        {
            "x1": report.x1,
            "x2": report.x2,
            "y1": {"node": report.y1.node, "side": list(tree.members(report.y1.side))},
            "y2": {"node": report.y2.node, "side": list(tree.members(report.y2.side))},
            "eta": list(report.eta),
            "ok": report.ok,
            "e1_sequence": [list(md.degrees) for md in report.e1_sequence],
            "e2_sequence": [list(md.degrees) for md in report.e2_sequence],
        }
    )
    return 0


def _cmd_gen(args: argparse.Namespace) -> int:
    spec = GenSpec(
        genus=args.genus,
        max_components=args.max_components,
        seed=args.seed,
        force_delta_half=args.delta_half,
    )
    _emit(random_tree(spec).to_data())
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="treeabel",
        description="Canonical Abel-map multidegrees on stable curves of compact type",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check a tree file against all invariants")
    p.add_argument("file")
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("classify", help="central/semicentral/principal components")
    p.add_argument("file")
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("tails", help="list all tails, two per node")
    p.add_argument("file")
    p.set_defaults(func=_cmd_tails)

    p = sub.add_parser("enumerate", help="semistable or quasistable multidegrees")
    p.add_argument("file")
    p.add_argument("--degree", type=int, required=True)
    group = p.add_mutually_exclusive_group()
    group.add_argument("--quasistable", metavar="COMPONENT")
    group.add_argument("--principal", action="store_true")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("eseq", help="canonical multidegrees e_1 .. e_dmax")
    p.add_argument("file")
    p.add_argument("--dmax", type=int, required=True)
    p.add_argument("--principal-override", metavar="COMPONENT")
    p.add_argument("--force", action="store_true")
    p.set_defaults(func=_cmd_eseq)

    p = sub.add_parser("abel", help="formal divisor image of a point configuration")
    p.add_argument("file")
    p.add_argument(
        "--points",
        required=True,
        help="comma list of COMP:LABEL (smooth point) or node:ID tokens",
    )
    p.add_argument("--principal-override", metavar="COMPONENT")
    p.add_argument("--force", action="store_true")
    p.set_defaults(func=_cmd_abel)

    p = sub.add_parser("compare", help="compare the two principal choices")
    p.add_argument("file")
    p.add_argument("--dmax", type=int, required=True)
    p.set_defaults(func=_cmd_compare)

    p = sub.add_parser("gen", help="generate a random valid tree")
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--max-components", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--delta-half", action="store_true")
    p.set_defaults(func=_cmd_gen)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InvalidTreeError, UnsatisfiableSpecError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, KeyError, OSError) as exc:
        message = exc.args[0] if exc.args else exc
        print(f"error: {message}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
