"""Command-line front end.

Exit codes: 0 success, 1 numeric or audit failure, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .classify import (
    EXPECTED_SIZES, CLASS_ROWS, audit_all, entangled_graph_from_fingerprint,
    slocc_class_structural,
)
from .hypergraph import (
    HypergraphParseError, Hypergraph, LUClass, enumerate_all, format_hypergraph,
    lu_class_of, parse_hypergraph,
)
from .linalg import NumericError
from .measures import fingerprint_of_state, schmidt_measure
from .states import build_state_gates


SNAP = 1e-12


def _num(x: float) -> float:
    # 12 significant digits; round-off below SNAP prints as 0
    if abs(x) < SNAP:
        return 0.0
    return float(f"{x:.12g}")


def report_record(g: Hypergraph) -> dict:
    s = build_state_gates(g)
    f = fingerprint_of_state(s)
    return {
        "hypergraph": format_hypergraph(g),
        "lu_class": lu_class_of(g).value,
        "slocc_class": slocc_class_structural(g).value,
        "measures": {k: _num(v) for k, v in f.as_dict().items()},
        "entangled_graph": list(entangled_graph_from_fingerprint(f)),
        "schmidt_measure": schmidt_measure(g),
        "state": [_num(a) for a in s],
    }


def to_dot(g: Hypergraph, edges) -> str:
    lines = [f'graph "{format_hypergraph(g)}" {{', "  A;", "  B;", "  C;"]
    lines += [f"  {e[0]} -- {e[1]};" for e in edges]
    lines.append("}")
    return "\n".join(lines) + "\n"


def _parse_or_exit(text: str) -> Hypergraph:
    try:
        return parse_hypergraph(text)
    except HypergraphParseError as exc:
        print(f"hypergraph3: parse error: {exc}", file=sys.stderr)
        raise SystemExit(2)


def cmd_classify(args) -> int:
    g = _parse_or_exit(args.hypergraph)
    record = report_record(g)
    if getattr(args, "dot", False):
        sys.stdout.write(to_dot(g, record["entangled_graph"]))
    else:
        print(json.dumps(record))
    return 0


def cmd_enumerate(args) -> int:
    wanted = LUClass(args.lu_class) if args.lu_class else None
    for g in enumerate_all():
        if wanted is None or lu_class_of(g) is wanted:
            print(json.dumps(report_record(g)))
    return 0


def _format_row(f) -> str:
    return "(" + ", ".join(f"{v:g}" for v in f.as_tuple()) + ")"


def cmd_audit(args) -> int:
    report = audit_all()
    if args.json:
        print(json.dumps(report.to_dict()))
        return 0 if report.passed else 1

    bad = {}
    for m in report.table1_mismatches:
        label = lu_class_of(parse_hypergraph(m.hypergraph))
        bad[label] = bad.get(label, 0) + 1
    print(f"{'class':<6}{'size':>6}  {'expected row (E2_A,E2_B,E2_C,tau,C_AB,C_AC,C_BC)':<50}status")
    for c in LUClass:
        size = report.class_sizes[c.value]
        ok = size == EXPECTED_SIZES[c] and not bad.get(c)
        print(f"{c.value:<6}{size:>6}  {_format_row(CLASS_ROWS[c]):<50}{'pass' if ok else 'FAIL'}")
    print()
    checks = [
        ("partition", report.partition_ok),
        ("class rows", not report.table1_mismatches),
        (f"monogamy (max error {report.monogamy_max_error:.3g})", report.monogamy_max_error < 1e-9),
        (f"no W-type states (count {report.w_type_count})", report.w_type_count == 0),
        ("schmidt measure", report.schmidt_ok),
        ("SLOCC structural = measured", report.slocc_agreement_ok),
        ("entangled graphs", report.entangled_graph_ok),
    ]
    for name, ok in checks:
        print(f"{'pass' if ok else 'FAIL'}  {name}")
    for m in report.table1_mismatches:
        print(f"mismatch  {m.hypergraph or '(edgeless)'}  {m.field}: expected {m.expected:g}, got {m.got:.12g}")
    print("AUDIT PASSED" if report.passed else "AUDIT FAILED")
    return 0 if report.passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hypergraph3",
        description="Entanglement measures and classes of three-qubit hypergraph states.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="measures and classes of one hypergraph (JSON)")
    p.add_argument("hypergraph", help='edge list, e.g. "AB;AC" or "{};ABC"; "" is edgeless')
    p.add_argument("--dot", action="store_true", help="emit the entangled graph as DOT")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("measures", help="same record as classify, JSON only")
    p.add_argument("hypergraph")
    p.set_defaults(func=cmd_classify, dot=False)

    p = sub.add_parser("entangled-graph", help="the entangled graph as DOT")
    p.add_argument("hypergraph")
    p.set_defaults(func=cmd_classify, dot=True)

    p = sub.add_parser("enumerate", help="one JSON record per hypergraph")
    p.add_argument("--class", dest="lu_class", choices=[c.value for c in LUClass])
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("audit", help="exhaustive check of all 256 hypergraphs")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_audit)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except NumericError as exc:
        print(f"hypergraph3: numeric failure: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
