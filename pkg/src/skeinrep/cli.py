"""Command-line interface: ``skeinrep {verlinde,rep,hopf,check,signature}``.

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys

from .checks import SUITES, run_suites
from .colorings import enumerate_admissible, necklace_graph, standard_graph, verlinde_formula
from .pairing import gram_form, hopf_matrix, signature
from .representation import (
    curve_operator_genus1,
    curve_operator_genus2,
    genus1_rep,
    genus2_rep,
    interpolation_Q,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _level(text: str) -> int:
    r = int(text)
    if r < 2:
        raise argparse.ArgumentTypeError("r must be >= 2")
    return r


def _colors(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad color list {text!r}") from None


def _dump_json(obj) -> str:
    return json.dumps(obj, indent=1, sort_keys=True) + "\n"


def _write(text: str, path: str | None) -> None:
    if path:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_verlinde(args) -> int:
    g, r = args.genus, args.r
    if g < 1:
        raise UsageError("genus must be >= 1")
    if args.boundary_colors:
        if g != 1:
            raise UsageError("marked points are supported in genus 1 only")
        cols = args.boundary_colors
        if any(not 0 <= c <= r - 2 for c in cols):
            raise UsageError(f"boundary colors must lie in 0..{r - 2}")
        graph = necklace_graph(len(cols))
        k = len(cols)
        marks = {k + i: c for i, c in enumerate(cols)}
        count = len(enumerate_admissible(graph, r, marks))
        formula = verlinde_formula(g, r, cols)
    else:
        count = len(enumerate_admissible(standard_graph(g), r))
        formula = verlinde_formula(g, r)
    report = {
        "genus": g,
        "r": r,
        "boundary_colors": list(args.boundary_colors or []),
        "formula": formula,
        "enumeration": count,
        "agree": formula == count,
    }
    _write(_dump_json(report), args.output)
    return EXIT_OK if formula == count else EXIT_FAIL


def _rep_payload(r: int, genus: int):
    graph = standard_graph(genus)
    gram = gram_form(graph, r)
    if genus == 1:
        ops = [curve_operator_genus1(r)]
        twists = list(genus1_rep(r))
    else:
        ops = [curve_operator_genus2(r, ("a", "b")), curve_operator_genus2(r, ("b", "c"))]
        twists = genus2_rep(r)
    return gram, interpolation_Q(r), ops, twists


def _rep_json(r, genus, gram, Q, ops, twists) -> str:
    return _dump_json(
        {
            "r": r,
            "genus": genus,
            "basis": [list(c) for c in gram.basis],
            "gram": gram.to_json(),
            "Q": Q.to_json(),
            "curve_operators": [m.to_json() for m in ops],
            "twists": [m.to_json() for m in twists],
        }
    )


def _coeff_string(x) -> str:
    return " ".join(x.to_strings())


def _rep_csv(r, genus, gram, Q, ops, twists) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["object", "row", "col", "value"])
    for i, c in enumerate(gram.basis):
        w.writerow(["basis", i, "", " ".join(map(str, c))])
    for i, h in enumerate(gram.norms):
        w.writerow(["gram", i, i, _coeff_string(h)])
    for k, c in enumerate(Q.coeffs):
        w.writerow(["Q", k, "", _coeff_string(c)])
    for m in ops + twists:
        for i, row in enumerate(m.entries):
            for j, x in enumerate(row):
                w.writerow([m.name, i, j, _coeff_string(x)])
    return buf.getvalue()


def cmd_rep(args) -> int:
    if args.genus not in (1, 2):
        raise UsageError("rep supports genus 1 and 2 only")
    payload = _rep_payload(args.r, args.genus)
    emit = _rep_json if args.format == "json" else _rep_csv
    _write(emit(args.r, args.genus, *payload), args.output)
    return EXIT_OK


def cmd_hopf(args) -> int:
    P = hopf_matrix(args.r)
    _write(_dump_json(P.to_json()), args.output)
    return EXIT_OK


def cmd_check(args) -> int:
    names = args.suite or None
    unknown = [s for s in names or () if s not in SUITES]
    if unknown:
        raise UsageError(f"unknown suite(s): {', '.join(unknown)}; choose from {', '.join(SUITES)}")
    failed = False
    lines = []
    for name, checks in run_suites(args.r, names):
        for c in checks:
            if c.total == 0:
                status = "SKIP"
            else:
                status = "PASS" if c.ok else "FAIL"
                failed |= not c.ok
            extra = f" ({c.note})" if c.note else ""
            lines.append(f"{status} {name}: {c.name} [{c.passed}/{c.total}]{extra}")
    lines.append("FAILED" if failed else "OK")
    _write("\n".join(lines) + "\n", args.output)
    return EXIT_FAIL if failed else EXIT_OK


def cmd_signature(args) -> int:
    r, m = args.r, args.embedding
    if math.gcd(m, 4 * r) != 1:
        raise UsageError(f"embedding {m} is not coprime to 4r = {4 * r}")
    if args.genus < 1:
        raise UsageError("genus must be >= 1")
    gram = gram_form(standard_graph(args.genus), r)
    p, q = signature(gram, m)
    _write(_dump_json({"r": r, "genus": args.genus, "embedding": m, "signature": [p, q]}), args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="skeinrep", description="Quantum mapping class group representations from skein theory.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, genus=True):
        p.add_argument("--r", type=_level, required=True, help="level r >= 2")
        if genus:
            p.add_argument("--genus", type=int, required=True)
        p.add_argument("--output", "-o", help="write to this file instead of stdout")

    p = sub.add_parser("verlinde", help="dimension by formula and by counting colorings")
    common(p)
    p.add_argument("--boundary-colors", type=_colors, default=None, help="comma-separated marked-point colors (genus 1)")
    p.set_defaults(func=cmd_verlinde)

    p = sub.add_parser("rep", help="twist matrices, curve operators, Q and the Gram form")
    common(p)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.set_defaults(func=cmd_rep)

    p = sub.add_parser("hopf", help="the Hopf matrix")
    common(p, genus=False)
    p.set_defaults(func=cmd_hopf)

    p = sub.add_parser("check", help="run verification suites")
    common(p, genus=False)
    p.add_argument("--suite", action="append", help=f"one of: {', '.join(SUITES)} (repeatable; default all)")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("signature", help="signature of the Gram form under a complex embedding")
    common(p)
    p.add_argument("--embedding", type=int, default=1, help="m with A = exp(i pi m / 2r), gcd(m, 4r) = 1")
    p.set_defaults(func=cmd_signature)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"skeinrep: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
