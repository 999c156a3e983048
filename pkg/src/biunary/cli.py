"""Command-line entry point.

Exit codes: 0 when every requested property holds, 1 when a checked
property fails (the witness is printed), 2 on usage or validation errors.
The default search budget can be set with the BIUNARY_BUDGET environment
variable (seconds).
"""
from __future__ import annotations

import argparse
import json
import os
import sys

from . import construct, laws, relations, search
from .errors import (
    NotCatSemigroup,
    PrerequisiteFailed,
    PseudoproductUndefined,
    WorkbenchError,
)
from .fixtures import FIXTURE_IDS, fixture
from .structures import BiunarySemigroup, parse, serialize

_KIND_FLAG = {"left": laws.LEFT, "right": laws.RIGHT,
              "symmetric": laws.SYMMETRIC, "strong": laws.STRONG}


def _load(path_or_id):
    if path_or_id in FIXTURE_IDS and not os.path.exists(path_or_id):
        return fixture(path_or_id)
    with open(path_or_id, "r", encoding="utf-8") as fh:
        return parse(fh.read())


def _witness_names(structure, witness):
    if witness is None:
        return None
    return [structure.names[i] for i in witness]


def _report_line(structure, rep):
    return rep.describe(structure.names)


def _report_json(structure, rep):
    return {"law": rep.law, "holds": rep.holds,
            "witness": _witness_names(structure, rep.witness)}


def _emit(args, human_lines, payload):
    if getattr(args, "json", False):
        print(json.dumps(payload, indent=2))
    else:
        for line in human_lines:
            print(line)


def _maybe_export(args, text):
    if getattr(args, "export", None):
        with open(args.export, "w", encoding="utf-8") as fh:
            fh.write(text)


def _cmd_check(args):
    structure = _load(args.input)
    requested = [("law", t) for t in args.law or []]
    requested += [("class", t) for t in args.cls or []]
    if not requested:
        print("check requires at least one --law or --class", file=sys.stderr)
        return 2
    is_sgrp = isinstance(structure, BiunarySemigroup)
    checker = laws.check_law if is_sgrp else laws.check_tc
    class_table = laws.SEMIGROUP_CLASSES if is_sgrp else laws.CATEGORY_CLASSES
    lines, records, all_hold = [], [], True
    for what, tag in requested:
        if what == "law":
            rep = checker(structure, tag)
            lines.append(_report_line(structure, rep))
            records.append(_report_json(structure, rep))
            all_hold &= rep.holds
        else:
            if tag not in class_table:
                print("unknown class %r" % tag, file=sys.stderr)
                return 2
            failing = None
            for t in class_table[tag]:
                rep = checker(structure, t)
                if not rep.holds:
                    failing = rep
                    break
            if failing is None:
                lines.append("%s holds" % tag)
                records.append({"class": tag, "holds": True, "witness": None})
            else:
                lines.append("%s fails (%s)" % (tag, _report_line(structure, failing)))
                records.append({"class": tag, "holds": False,
                                "failing_law": failing.law,
                                "witness": _witness_names(structure, failing.witness)})
                all_hold = False
    _emit(args, lines, records)
    return 0 if all_hold else 1


def _cmd_classify(args):
    structure = _load(args.input)
    if isinstance(structure, BiunarySemigroup):
        result = laws.classify(structure)
        table = laws.SEMIGROUP_CLASSES
    else:
        result = laws.classify_category(structure)
        table = laws.CATEGORY_CLASSES
    lines = []
    payload = {"classes": {}, "gate_failure": None}
    for tag in table:
        member = tag in result.classes
        lines.append("%s %s" % (tag, "yes" if member else "no"))
        payload["classes"][tag] = member
    if result.gate_failure is not None:
        lines.append("not a precat-semigroup: "
                     + _report_line(structure, result.gate_failure))
        payload["gate_failure"] = _report_json(structure, result.gate_failure)
    _emit(args, lines, payload)
    return 0


def _cmd_construct(args):
    structure = _load(args.input)
    if isinstance(structure, BiunarySemigroup):
        cat = construct.category_of(structure)
        text = serialize(cat)
        _emit(args, [text.rstrip("\n")],
              {"kind": "category", "text": text})
        _maybe_export(args, text)
        return 0
    if not args.kind:
        print("construct on a category requires --kind", file=sys.stderr)
        return 2
    ext = construct.extension(structure, _KIND_FLAG[args.kind])
    if ext.algebra is not None:
        text = serialize(ext.algebra)
        _emit(args, [text.rstrip("\n")],
              {"kind": "semigroup", "assoc": _report_json(structure, ext.assoc),
               "text": text})
        _maybe_export(args, text)
        return 0
    names = ext.names
    lines = ["# candidate product is not associative: "
             + _report_line(structure, ext.assoc), "mul"]
    for x in range(structure.order):
        lines.append("%s: %s" % (names[x], " ".join(names[v] for v in ext.mul[x])))
    payload = {"kind": "candidate", "assoc": _report_json(structure, ext.assoc),
               "mul": [[names[v] for v in row] for row in ext.mul]}
    _emit(args, lines, payload)
    return 1


def _cmd_roundtrip(args):
    structure = _load(args.input)
    kind = _KIND_FLAG[args.kind]
    try:
        if isinstance(structure, BiunarySemigroup):
            rep = construct.roundtrip_semigroup(structure, kind)
        else:
            rep = construct.roundtrip_category(structure, kind)
    except PrerequisiteFailed as exc:
        wit = _witness_names(structure, exc.witness) if exc.witness else None
        _emit(args, ["prerequisite %s fails%s"
                     % (exc.law, "" if wit is None else " witness=(%s)" % ",".join(wit))],
              {"prerequisite": exc.law, "holds": False, "witness": wit})
        return 1
    _emit(args, [_report_line(structure, rep)], _report_json(structure, rep))
    return 0 if rep.holds else 1


def _cmd_search(args):
    if args.query:
        with open(args.query, "r", encoding="utf-8") as fh:
            toks = " ".join(line.split("#", 1)[0] for line in fh).split()
        if toks and toks[0] == "search":
            toks = toks[1:]
        query = search.parse_query(" ".join(["search"] + toks))
    else:
        if args.order is None:
            print("search requires --order or a query file", file=sys.stderr)
            return 2
        budget = args.budget
        if budget is None and os.environ.get("BIUNARY_BUDGET"):
            budget = float(os.environ["BIUNARY_BUDGET"])
        query = search.SearchQuery(
            kind=args.kind, order=args.order,
            satisfy=frozenset(t for t in (args.satisfy or "").split(",") if t),
            violate=frozenset(t for t in (args.violate or "").split(",") if t),
            up_to_iso=args.up_to_iso, limit=args.limit, budget=budget)
    result = search.enumerate_models(query)
    header = ("# kind=%s order=%d found=%d nodes=%d completed=%s"
              % (query.kind, query.order, len(result.models), result.nodes,
                 "true" if result.completed else "false"))
    if args.json:
        print(json.dumps({"found": len(result.models), "nodes": result.nodes,
                          "completed": result.completed,
                          "models": [serialize(m) for m in result.models]},
                         indent=2))
    else:
        print(header)
        for i, m in enumerate(result.models):
            if i:
                print("---")
            print(serialize(m), end="")
    return 0 if result.completed else 1


def _cmd_fixture(args):
    try:
        structure = fixture(args.id)
    except KeyError as exc:
        print(exc.args[0], file=sys.stderr)
        return 2
    text = serialize(structure)
    print(text, end="")
    _maybe_export(args, text)
    return 0


def _cmd_congruences(args):
    structure = _load(args.input)
    if not isinstance(structure, BiunarySemigroup):
        print("congruences expects a semigroup", file=sys.stderr)
        return 2
    if args.quotient:
        blocks = []
        for blk in args.quotient.split("/"):
            members = [m for m in blk.split(",") if m]
            idx = []
            for m in members:
                if m not in structure.names:
                    print("unknown element %r" % m, file=sys.stderr)
                    return 2
                idx.append(structure.names.index(m))
            blocks.append(tuple(sorted(idx)))
        cong = construct.Congruence(tuple(blocks))
        q = construct.quotient(structure, cong)
        text = serialize(q)
        _emit(args, [text.rstrip("\n")], {"quotient": text})
        _maybe_export(args, text)
        return 0
    found = construct.congruences(structure)
    lines = [c.describe(structure.names) for c in found]
    lines.append("count=%d" % len(found))
    _emit(args, lines,
          {"congruences": [[list(b) for b in c.blocks] for c in found]})
    return 0


def _cmd_rel(args):
    mode = args.mode
    if args.op == "compose":
        rho = relations.parse_relation(args.args[0])
        tau = relations.parse_relation(args.args[1])
        print(relations.serialize_relation(relations.compose(rho, tau, mode)))
        return 0
    if args.op in ("dom", "ran"):
        rho = relations.parse_relation(args.args[0])
        fn = relations.domain_proj if args.op == "dom" else relations.range_proj
        print(relations.serialize_relation(fn(rho)))
        return 0
    if args.op == "close":
        if args.n is None:
            print("rel close requires --n", file=sys.stderr)
            return 2
        gens = [relations.parse_relation(t) for t in args.args]
        gen = relations.generate_subalgebra(args.n, mode, gens, cap=args.cap)
    elif args.op == "full":
        if args.n is None:
            print("rel full requires --n", file=sys.stderr)
            return 2
        gen = relations.full_relation_algebra(args.n, mode,
                                              allow_large=args.allow_large)
    else:
        print("unknown rel operation %r" % args.op, file=sys.stderr)
        return 2
    text = serialize(gen.algebra)
    for name, rel in gen.dictionary().items():
        print("# %s = %s" % (name, rel))
    print(text, end="")
    _maybe_export(args, text)
    return 0


def build_parser():
    ap = argparse.ArgumentParser(
        prog="biunary",
        description="Workbench for finite biunary semigroups and categories "
                    "with identity biaction")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="check laws on a structure")
    p.add_argument("input", help="structure file or fixture id")
    p.add_argument("--law", action="append", help="law tag (repeatable)")
    p.add_argument("--class", dest="cls", action="append",
                   help="class tag (repeatable)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_check)

    p = sub.add_parser("classify", help="report class membership")
    p.add_argument("input")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_classify)

    p = sub.add_parser("construct",
                       help="semigroup -> category, or category -> total "
                            "product via a pseudoproduct")
    p.add_argument("input")
    p.add_argument("--kind", choices=sorted(_KIND_FLAG))
    p.add_argument("--export", metavar="PATH")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_construct)

    p = sub.add_parser("roundtrip", help="check both constructions compose "
                                         "to the identity on this structure")
    p.add_argument("input")
    p.add_argument("--kind", choices=sorted(_KIND_FLAG), required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_roundtrip)

    p = sub.add_parser("search", help="enumerate small models")
    p.add_argument("query", nargs="?", help="query file")
    p.add_argument("--kind", default="semigroup",
                   choices=["semigroup", "category", "biaction-category"])
    p.add_argument("--order", type=int)
    p.add_argument("--satisfy", help="comma-separated law/class tags")
    p.add_argument("--violate", help="comma-separated law/class tags")
    p.add_argument("--up-to-iso", dest="up_to_iso", action="store_true")
    p.add_argument("--limit", type=int)
    p.add_argument("--budget", type=float, metavar="SECS")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_search)

    p = sub.add_parser("fixture", help="print or export a built-in fixture")
    p.add_argument("id")
    p.add_argument("--export", metavar="PATH")
    p.set_defaults(fn=_cmd_fixture)

    p = sub.add_parser("congruences",
                       help="list congruences or build a quotient")
    p.add_argument("input")
    p.add_argument("--quotient", metavar="BLOCKS",
                   help="blocks like 'a/g/e,1' (slash-separated, comma members)")
    p.add_argument("--export", metavar="PATH")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_congruences)

    p = sub.add_parser("rel", help="relation operations and relation algebras",
                       epilog="give the relation arguments first, flags after: "
                              "rel compose 'rel n=3 {(0,1)}' 'rel n=3 {(1,2)}' "
                              "--mode demonic")
    p.add_argument("op", choices=["compose", "dom", "ran", "close", "full"])
    p.add_argument("args", nargs="*", help="relations in pair-list form "
                                           "(positional, before any flags)")
    p.add_argument("--mode", default="angelic",
                   choices=[relations.ANGELIC, relations.DEMONIC])
    p.add_argument("--n", type=int)
    p.add_argument("--cap", type=int, default=256)
    p.add_argument("--allow-large", action="store_true")
    p.add_argument("--export", metavar="PATH")
    p.set_defaults(fn=_cmd_rel)

    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.fn(args)
    except FileNotFoundError as exc:
        print("cannot read %s" % exc.filename, file=sys.stderr)
        return 2
    except (NotCatSemigroup, PseudoproductUndefined) as exc:
        print(str(exc), file=sys.stderr)
        return 1
    except (WorkbenchError, ValueError, KeyError) as exc:
        print(exc.args[0] if exc.args else str(exc), file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
