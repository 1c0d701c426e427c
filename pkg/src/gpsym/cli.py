"""Command-line front end: ``gpsym {aut,classify,subgroups,verify-paper,export}``.

Exit codes: 0 on success, 1 when a verification fails, 2 for bad input.
Every report is either a plain-text table or, with ``--json``, a JSON
document with sorted keys, so identical invocations print identical bytes.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import catalog, claims, grouplab, paperlib
from .autsearch import SearchBudgetError
from .classifier import NotInAutomorphismGroupError, aut_group, classify, classify_all
from .permcore import Permutation, SizeLimitError, closure
from .petersen import ConstructionError, build

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _emit(out, doc) -> None:
    out.write(json.dumps(doc, indent=2, sort_keys=True) + "\n")


def _table(out, header: list[str], rows: list[list]) -> None:
    cells = [header] + [[str(x) for x in r] for r in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
    for r in cells:
        out.write("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() + "\n")


# --- aut ---------------------------------------------------------------------

def cmd_aut(args, out) -> int:
    g = build(args.n, args.k)
    report: dict = {"n": args.n, "k": args.k}
    groups = {}
    if not args.paper:
        groups["oracle"] = aut_group(args.n, args.k)
    if not args.oracle:
        gens = paperlib.recorded_generators(args.n, args.k)
        if gens is None:
            if args.paper:
                raise UsageError(f"no recorded generators for {g!r}")
        else:
            groups["recorded"] = closure(gens, degree=2 * args.n)
    for name, group in groups.items():
        report[name] = {
            "order": group.order,
            "label": grouplab.identify_group(group).name,
            "generators": [p.to_cycle_string() for p in group.generators],
        }
    agree = len(groups) < 2 or groups["oracle"] == groups["recorded"]
    report["agree"] = agree
    if args.json:
        _emit(out, report)
    else:
        for name in groups:
            r = report[name]
            out.write(f"[{name}] |Aut({g!r})| = {r['order']}  {r['label']}\n")
            for s in r["generators"]:
                out.write(f"  {s}\n")
        if len(groups) == 2:
            out.write("oracle and recorded generators agree\n" if agree else "MISMATCH between oracle and recorded generators\n")
    return EXIT_OK if agree else EXIT_FAIL


# --- classify ----------------------------------------------------------------

def _parse_gens(texts: list[str], n: int) -> list[Permutation]:
    try:
        return [Permutation.parse(t, n) for t in texts]
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _verdict_rows(n: int, k: int, rows) -> list[dict]:
    return [r.to_dict(n, k) for r in rows]


def _print_verdicts(out, docs: list[dict]) -> None:
    _table(
        out,
        ["order", "label", "class", "realizable", "positive", "witness"],
        [[d["order"], d["subgroup_label"], d["class_size"], d["realizable"], d["positively_realizable"], d["witness"] or ""] for d in docs],
    )


def cmd_classify(args, out) -> int:
    n, k = args.n, args.k
    build(n, k)
    if args.all:
        docs = _verdict_rows(n, k, classify_all(n, k))
    elif args.group:
        name = catalog.canonical_name(args.group)
        try:
            classes = grouplab.conjugacy_classes_of_subgroups(aut_group(n, k), name)
        except grouplab.UnknownLabelError as exc:
            raise UsageError(str(exc)) from None
        if not classes:
            raise UsageError(f"Aut(P({n},{k})) has no subgroup isomorphic to {name}")
        docs = []
        for c in classes:
            d = classify(n, k, c.representative, label=name).to_dict(n, k, name, c.class_size)
            d["order"] = c.order
            docs.append(d)
    else:
        h = closure(_parse_gens(args.gens, n), degree=2 * n)
        label = grouplab.identify_group(h).name
        d = classify(n, k, h, label=label).to_dict(n, k, label, 1)
        d["order"] = h.order
        docs = [d]
    if args.json:
        _emit(out, docs)
    else:
        _print_verdicts(out, docs)
    return EXIT_OK


# --- subgroups ---------------------------------------------------------------

def _class_doc(c: grouplab.SubgroupClass) -> dict:
    return {
        "order": c.order,
        "label": c.iso_label.name,
        "class_size": c.class_size,
        "element_orders": {str(o): m for o, m in sorted(c.element_order_histogram.items())},
        "generators": [p.to_cycle_string() for p in c.representative.generators],
    }


def cmd_subgroups(args, out) -> int:
    group = aut_group(args.n, args.k)
    try:
        classes = grouplab.conjugacy_classes_of_subgroups(group, args.label)
    except grouplab.UnknownLabelError as exc:
        raise UsageError(str(exc)) from None
    docs = [_class_doc(c) for c in classes]
    if args.json:
        _emit(out, docs)
    else:
        _table(
            out,
            ["order", "label", "class", "element orders"],
            [[d["order"], d["label"], d["class_size"], " ".join(f"{o}:{m}" for o, m in d["element_orders"].items())] for d in docs],
        )
    return EXIT_OK


# --- verify-paper ------------------------------------------------------------

def cmd_verify(args, out) -> int:
    try:
        results = claims.verify(args.scope)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    ok = all(r.status is claims.Status.PASS for r in results)
    if args.json:
        _emit(out, {"all_pass": ok, "results": [r.to_dict() for r in results]})
    else:
        for r in results:
            out.write(f"{r.status.value.upper():4}  {r.claim_id}: {r.citation[1]}\n")
            if r.status is not claims.Status.PASS:
                out.write(f"      expected: {r.expected}\n      computed: {r.computed}\n")
        passed = sum(r.status is claims.Status.PASS for r in results)
        out.write(f"{passed}/{len(results)} claims pass\n")
    return EXIT_OK if ok else EXIT_FAIL


# --- export ------------------------------------------------------------------

def _csv_text(header: list[str], rows: list[list]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def export_text(n: int, k: int, fmt: str, verdicts: bool = False) -> str:
    g = build(n, k)
    if not verdicts:
        if fmt == "dot":
            return g.to_dot()
        if fmt == "json":
            return g.to_json() + "\n"
        return _csv_text(["a", "b", "class"], [[g.label(e.a), g.label(e.b), e.cls.value] for e in g.edges])
    if fmt == "dot":
        raise UsageError("verdict tables export as json or csv, not dot")
    docs = _verdict_rows(n, k, classify_all(n, k))
    if fmt == "json":
        return json.dumps(docs, indent=2, sort_keys=True) + "\n"
    cols = ["order", "subgroup_label", "class_size", "realizable", "positively_realizable", "witness"]
    return _csv_text(cols, [[d[c] if d[c] is not None else "" for c in cols] for d in docs])


def cmd_export(args, out) -> int:
    text = export_text(args.n, args.k, args.format, args.verdicts)
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        out.write(text)
    return EXIT_OK


# --- parser ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    graph = argparse.ArgumentParser(add_help=False)
    graph.add_argument("--n", type=int, required=True)
    graph.add_argument("--k", type=int, required=True)

    parser = argparse.ArgumentParser(prog="gpsym", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("aut", parents=[common, graph], help="automorphism group of P(n,k)")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--oracle", action="store_true", help="brute-force search only")
    mode.add_argument("--paper", action="store_true", help="closure of the recorded generators only")
    p.set_defaults(func=cmd_aut)

    p = sub.add_parser("classify", parents=[common, graph], help="realizability verdicts")
    what = p.add_mutually_exclusive_group(required=True)
    what.add_argument("--group", metavar="LABEL", help="every subgroup class with this isomorphism type")
    what.add_argument("--gens", metavar="CYCLES", nargs="+", help='generators in cycle notation, e.g. "(u1 v4)(u2 u4)"')
    what.add_argument("--all", action="store_true", help="one row per conjugacy class of subgroups")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("subgroups", parents=[common, graph], help="conjugacy classes of subgroups of Aut(P(n,k))")
    p.add_argument("--label", help="only classes of this isomorphism type")
    p.set_defaults(func=cmd_subgroups)

    p = sub.add_parser("verify-paper", parents=[common], help="re-derive every recorded claim")
    p.add_argument("--scope", choices=claims.SCOPES)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("export", parents=[graph], help="graph or verdict table as dot/json/csv")
    p.add_argument("--format", choices=("dot", "json", "csv"), required=True)
    p.add_argument("--verdicts", action="store_true", help="export the verdict table instead of the graph")
    p.add_argument("--output", "-o", help="write to a file instead of stdout")
    p.set_defaults(func=cmd_export)
    return parser


def main(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except (UsageError, ConstructionError, NotInAutomorphismGroupError, KeyError) as exc:
        print(f"gpsym: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (SearchBudgetError, SizeLimitError) as exc:
        print(f"gpsym: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
