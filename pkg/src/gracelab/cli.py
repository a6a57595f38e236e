"""Command-line interface: every check and enumeration as a subcommand.

Output is deterministic: identical arguments (including --seed) produce
byte-identical output.  Exit status 0 means every check passed, 1 means a
verifiable identity failed and the counterexample was emitted, 2 means a
usage error (unknown subcommand, malformed graph text, out-of-range n).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from gracelab import conjecture as conjecture_mod
from gracelab import digraph as digraph_mod
from gracelab import expansion as expansion_mod
from gracelab import genfun as genfun_mod
from gracelab import neighbors as neighbors_mod
from gracelab import whitty as whitty_mod
from gracelab.polyring import SparsePoly
from gracelab.seeds import integer_matrix

__all__ = ["main", "run"]

# Feasible-n ceilings, enforced before any computation starts.
MAX_N = {
    "graceful": 10,
    "grl": 10,
    "gammas": 12,
    "sp": 7,
    "tau": 7,
    "genfun-f": 9,
    "genfun-p": 10,
    "genfun-oracle": 7,
    "coeff-f": 9,
    "coeff-p": 10,
    "props": 7,
    "tdmtt": 8,
    "whitty": 7,
    "neighbors": 10,
    "neighbors-oracle": 6,
    "conjecture": 7,
}


class UsageError(Exception):
    pass


def _gate(kind: str, n: int, minimum: int = 1) -> None:
    ceiling = MAX_N[kind]
    if not minimum <= n <= ceiling:
        raise UsageError(f"{kind}: n={n} outside feasible range [{minimum}, {ceiling}]")


def _parse_graph(text: str) -> digraph_mod.FunctionalDigraph:
    try:
        return digraph_mod.FunctionalDigraph.parse(text)
    except ValueError as err:
        raise UsageError(str(err)) from None


def _check_limit(args) -> None:
    if getattr(args, "limit", None) is not None and args.limit < 0:
        raise UsageError(f"--limit must be non-negative, got {args.limit}")


def _poly_json(poly: SparsePoly) -> str:
    return json.dumps(poly.to_pairs(), separators=(",", ":"))


def _bool(flag: bool) -> str:
    return "true" if flag else "false"



def _cmd_labels(args) -> tuple[int, dict, list[str]]:
    g = _parse_graph(args.graph)
    labels = digraph_mod.edge_labels(g)
    text = ",".join(str(v) for v in labels)
    doc = {"command": "labels", "graph": g.format(), "labels": list(labels)}
    return 0, doc, [text]


def _cmd_graceful(args) -> tuple[int, dict, list[str]]:
    g = _parse_graph(args.graph)
    _gate("graceful", g.n)
    labeled = digraph_mod.is_gracefully_labeled(g)
    graceful = digraph_mod.is_graceful(g)
    doc = {
        "command": "graceful",
        "graph": g.format(),
        "gracefully_labeled": labeled,
        "graceful": graceful,
    }
    lines = [f"gracefully_labeled: {_bool(labeled)}", f"graceful: {_bool(graceful)}"]
    return 0, doc, lines


def _cmd_grl(args) -> tuple[int, dict, list[str]]:
    g = _parse_graph(args.graph)
    _gate("grl", g.n)
    members = digraph_mod.grl_set(g)
    shown = members if args.limit is None else members[: args.limit]
    lines = [m.format() for m in shown]
    lines.append(f"count: {len(members)}")
    doc = {
        "command": "grl",
        "graph": g.format(),
        "members": [m.format() for m in members],
        "count": len(members),
    }
    return 0, doc, lines


def _cmd_gammas(args) -> tuple[int, dict, list[str]]:
    _gate("gammas", args.n, minimum=2)
    gammas = expansion_mod.enumerate_valid_gammas(args.n)
    count = expansion_mod.count_valid_gammas(args.n)
    agree = len(gammas) == count
    shown = gammas if args.limit is None else gammas[: args.limit]
    lines = [g.format() for g in shown]
    lines.append(f"{len(gammas)} = {(args.n - 1) // 2}!*{args.n // 2}!")
    if not agree:
        lines.append(f"MISMATCH: enumerated {len(gammas)}, formula {count}")
    doc = {
        "command": "gammas",
        "n": args.n,
        "gammas": [g.format() for g in gammas],
        "enumerated": len(gammas),
        "formula": count,
        "status": "pass" if agree else "fail",
    }
    return (0 if agree else 1), doc, lines


def _cmd_sp(args) -> tuple[int, dict, list[str]]:
    _gate("sp", args.n, minimum=2)
    sps = expansion_mod.enumerate_sp(args.n)
    matrix = integer_matrix(args.n, args.seed, 1, 100)
    check = expansion_mod.sp_sum_identity_check(args.n, matrix)
    shown = sps if args.limit is None else sps[: args.limit]
    lines = [sp.format() for sp in shown]
    lines.append(f"count: {len(sps)}")
    lines.append(
        f"identity: left={check.left} right={check.right} equal={_bool(check.equal)}"
    )
    doc = {
        "command": "sp",
        "n": args.n,
        "seed": args.seed,
        "signed_permutations": [sp.format() for sp in sps],
        "count": len(sps),
        "left": check.left,
        "right": check.right,
        "status": "pass" if check.equal else "fail",
    }
    return (0 if check.equal else 1), doc, lines


def _cmd_tau(args) -> tuple[int, dict, list[str]]:
    _gate("tau", args.n, minimum=2)
    lower, upper = expansion_mod.tau_bounds(args.n)
    tau = expansion_mod.tau_bruteforce(args.n)
    ok = lower <= tau <= upper
    lines = [
        f"lower: {lower}",
        f"tau: {tau}",
        f"upper: {upper}",
        f"within_bounds: {_bool(ok)}",
    ]
    doc = {
        "command": "tau",
        "n": args.n,
        "lower": lower,
        "tau": tau,
        "upper": upper,
        "status": "pass" if ok else "fail",
    }
    return (0 if ok else 1), doc, lines


def _cmd_genfun(args) -> tuple[int, dict, list[str]]:
    which = args.which
    _gate(f"genfun-{which}", args.n, minimum=1 if which == "f" else 2)
    if args.oracle:
        _gate("genfun-oracle", args.n)
    if which == "f":
        poly = genfun_mod.compute_F(args.n)
        reference = genfun_mod.compute_F_bruteforce(args.n) if args.oracle else None
    else:
        poly = genfun_mod.compute_P(args.n)
        reference = genfun_mod.compute_P_bruteforce(args.n) if args.oracle else None
    lines = [_poly_json(poly)]
    status = "pass"
    if args.oracle:
        if reference == poly:
            lines.append("oracle: identical")
        else:
            status = "fail"
            lines.append("oracle: MISMATCH")
            lines.append(f"oracle_poly: {_poly_json(reference)}")
    doc = {
        "command": "genfun",
        "which": which,
        "n": args.n,
        "terms": poly.to_pairs(),
        "status": status,
    }
    if args.oracle:
        doc["oracle"] = "identical" if status == "pass" else "mismatch"
    return (0 if status == "pass" else 1), doc, lines


def _cmd_coeff(args) -> tuple[int, dict, list[str]]:
    try:
        labels = tuple(int(part) for part in args.sequence.split(","))
    except ValueError:
        raise UsageError(f"malformed sequence: {args.sequence!r}") from None
    n = len(labels)
    which = args.which
    _gate(f"coeff-{which}", n, minimum=1 if which == "f" else 2)
    base = n + 1 if which == "f" else n
    try:
        exponent = genfun_mod.encode_sequence(labels, base)
    except ValueError as err:
        raise UsageError(str(err)) from None
    poly = genfun_mod.compute_F(n) if which == "f" else genfun_mod.compute_P(n)
    coefficient = poly.coefficient(exponent)
    lines = [f"exponent: {exponent}", f"coefficient: {coefficient}"]
    doc = {
        "command": "coeff",
        "which": which,
        "sequence": list(labels),
        "exponent": str(exponent),
        "coefficient": str(coefficient),
    }
    return 0, doc, lines


def _cmd_props(args) -> tuple[int, dict, list[str]]:
    _gate("props", args.n, minimum=2)
    reports = []
    if args.which in (None, "f"):
        reports.append(genfun_mod.check_F_properties(args.n))
    if args.which in (None, "p"):
        reports.append(genfun_mod.check_P_properties(args.n))
    lines: list[str] = []
    for report in reports:
        for line in report.to_text():
            lines.append(f"{report.which}: {line}")
    ok = all(report.ok for report in reports)
    doc = {
        "command": "props",
        "n": args.n,
        "reports": [report.to_doc() for report in reports],
        "status": "pass" if ok else "fail",
    }
    return (0 if ok else 1), doc, lines


def _cmd_tdmtt(args) -> tuple[int, dict, list[str]]:
    _gate("tdmtt", args.n, minimum=1)
    matrix = integer_matrix(args.n, args.seed, 1, 50)
    check = genfun_mod.tdmtt_check(matrix)
    lines = [
        f"left: {check.left}",
        f"right: {check.right}",
        f"equal: {_bool(check.equal)}",
    ]
    doc = {
        "command": "tdmtt",
        "n": args.n,
        "seed": args.seed,
        "left": check.left,
        "right": check.right,
        "status": "pass" if check.equal else "fail",
    }
    return (0 if check.equal else 1), doc, lines


def _cmd_whitty(args) -> tuple[int, dict, list[str]]:
    _gate("whitty", args.n, minimum=2)
    if args.symbolic:
        matrix = whitty_mod.symbolic_matrix(args.n)
    else:
        # only the upper triangle of A is ever read by either side
        matrix = integer_matrix(args.n, args.seed, 1, 100)
    check = whitty_mod.whitty_check(matrix)
    if args.symbolic:
        lhs_text = _poly_json(check.lhs)
        rhs_text = _poly_json(check.rhs)
    else:
        lhs_text = str(check.lhs)
        rhs_text = str(check.rhs)
    ok = check.equal_up_to_calibrated_sign
    parity = whitty_mod._column_reversal_parity(args.n)
    lines = [
        f"lhs: {lhs_text}",
        f"rhs: {rhs_text}",
        f"column_reversal_parity: {parity:+d}",
        f"epsilon: {check.calibration.epsilon:+d}",
        f"pass: {_bool(ok)}",
        f"label_signature_reading_agrees: {_bool(check.label_signature_reading_agrees)}",
    ]
    doc = {
        "command": "whitty",
        "n": args.n,
        "symbolic": args.symbolic,
        "seed": None if args.symbolic else args.seed,
        "lhs": lhs_text,
        "rhs": rhs_text,
        "column_reversal_parity": parity,
        "calibration": check.calibration.to_doc(),
        "label_signature_reading_agrees": check.label_signature_reading_agrees,
        "status": "pass" if ok else "fail",
    }
    return (0 if ok else 1), doc, lines


def _cmd_neighbors(args) -> tuple[int, dict, list[str]]:
    g = _parse_graph(args.graph)
    _gate("neighbors", g.n)
    if args.oracle:
        _gate("neighbors-oracle", g.n)
    fam = neighbors_mod.expansion_family(g)
    if args.oracle:
        report = neighbors_mod.completeness_check(fam)
        generated = report.generated
    else:
        report = None
        generated = tuple(neighbors_mod.neighbors_via_expansion(fam))
    shown = generated if args.limit is None else generated[: args.limit]
    lines = [h.format() for h in shown]
    doc = {
        "command": "neighbors",
        "graph": g.format(),
        "generated": [h.format() for h in generated],
    }
    code = 0
    if report is not None:
        lines.append("oracle:")
        lines.extend(h.format() for h in report.oracle)
        lines.append("missing:")
        lines.extend(h.format() for h in report.missing)
        lines.append("extra:")
        lines.extend(h.format() for h in report.extra)
        complete = not report.missing and not report.extra
        lines.append(f"complete: {_bool(complete)}")
        doc["oracle"] = [h.format() for h in report.oracle]
        doc["missing"] = [h.format() for h in report.missing]
        doc["extra"] = [h.format() for h in report.extra]
        doc["status"] = "pass" if complete else "fail"
        code = 0 if complete else 1
    return code, doc, lines


def _cmd_conjecture(args) -> tuple[int, dict, list[str]]:
    _gate("conjecture", args.n, minimum=1)
    report = conjecture_mod.check_conjecture_42(args.n)
    missing_by_class: dict[str, list[str]] = {}
    for rep, seq in report.missing:
        missing_by_class.setdefault(rep.format(), []).append(
            ",".join(str(v) for v in seq)
        )
    lines = []
    for cls in report.classes:
        key = cls.representative.format()
        if key in missing_by_class:
            for seq_text in missing_by_class[key]:
                lines.append(f"class {key}: missing {seq_text}")
        else:
            lines.append(f"class {key}: ok")
    lines.append(f"classes: {len(report.classes)}")
    lines.append(f"class_size_total: {report.class_size_total}")
    lines.append(f"holds: {_bool(report.holds)}")
    doc = {
        "command": "conjecture",
        "n": args.n,
        "classes": [
            {"representative": c.representative.format(), "size": c.size}
            for c in report.classes
        ],
        "missing": [
            {"class": rep.format(), "sequence": list(seq)}
            for rep, seq in report.missing
        ],
        "class_size_total": report.class_size_total,
        "status": "pass" if report.holds else "fail",
    }
    return (0 if report.holds else 1), doc, lines


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gracelab",
        description="enumerate, count, and verify graceful labelings of "
        "functional digraphs",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, handler, help_text: str):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(handler=handler)
        p.add_argument(
            "--format",
            choices=("text", "structured"),
            default="text",
            help="plain lines or a single JSON document",
        )
        return p

    p = add("labels", _cmd_labels, "induced subtractive edge label sequence")
    p.add_argument("--graph", required=True)

    p = add("graceful", _cmd_graceful, "gracefully-labeled and graceful predicates")
    p.add_argument("--graph", required=True)

    p = add("grl", _cmd_grl, "distinct gracefully labeled conjugates")
    p.add_argument("--graph", required=True)
    p.add_argument("--limit", type=int)

    p = add("gammas", _cmd_gammas, "enumerate valid gammas and check the count")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--limit", type=int)

    p = add("sp", _cmd_sp, "signed permutations and the entry-product identity")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--limit", type=int)

    p = add("tau", _cmd_tau, "bounds and brute-force count of tau_n")
    p.add_argument("--n", type=int, required=True)

    p = add("genfun", _cmd_genfun, "label-sequence generating function")
    p.add_argument("--which", choices=("f", "p"), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--oracle", action="store_true")

    p = add("coeff", _cmd_coeff, "coefficient of one label sequence")
    p.add_argument("--which", choices=("f", "p"), required=True)
    p.add_argument("--sequence", required=True, help="comma-separated labels")

    p = add("props", _cmd_props, "structural property reports for F and P")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--which", choices=("f", "p"))

    p = add("tdmtt", _cmd_tdmtt, "directed matrix tree theorem spot check")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)

    p = add("whitty", _cmd_whitty, "Whitty determinantal identity check")
    p.add_argument("--n", type=int, required=True)
    group = p.add_mutually_exclusive_group()
    group.add_argument("--symbolic", action="store_true")
    group.add_argument("--seed", type=int, default=0)

    p = add("neighbors", _cmd_neighbors, "edit-distance-one graceful neighbors")
    p.add_argument("--graph", required=True)
    p.add_argument("--oracle", action="store_true")
    p.add_argument("--limit", type=int)

    p = add("conjecture", _cmd_conjecture, "star-sequence inclusion sweep")
    p.add_argument("--n", type=int, required=True)

    return parser


def run(argv: Sequence[str]) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        _check_limit(args)
        code, doc, lines = args.handler(args)
    except UsageError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    if args.format == "structured":
        print(json.dumps(doc, indent=2))
    else:
        for line in lines:
            print(line)
    return code


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
