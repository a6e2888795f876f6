"""Command-line front end.

    appell table <family> <m> [--format json|csv] [--out FILE]
    appell eval <family> <m> <x> [--classical]
    appell gamma <family> <m>
    appell verify [--m-max N] [--seed N] [--families a,b,...]

Exit codes: 0 ok, 1 verification failure, 2 usage error, 3 domain error,
4 singular transfer matrix.
"""

import argparse
import csv
import io
import json
import re
import sys

from .errors import DomainError, NotInvertible
from .families import FAMILY_NAMES, FamilySpec, Kind, default_custom, gamma_coefficients, transfer_matrix
from .matrix import LTMatrix, as_rat, rat_str
from .ops import appell_vector, classical_values, evaluate

EXIT_OK, EXIT_VERIFY, EXIT_USAGE, EXIT_DOMAIN, EXIT_SINGULAR = 0, 1, 2, 3, 4

DOCUMENT_KEYS = ("family", "m", "params", "kind", "data")


class UsageError(Exception):
    pass


def _rational(text):
    try:
        return as_rat(text)
    except (ValueError, ZeroDivisionError, TypeError):
        raise argparse.ArgumentTypeError(f"not an exact rational p/q: {text!r}")


def _degree(text):
    try:
        m = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"degree bound must be an integer: {text!r}")
    if m < 0:
        raise argparse.ArgumentTypeError("degree bound must be >= 0")
    return m


# -- documents ------------------------------------------------------------


def make_document(spec, m, kind, data):
    """``data`` is a vector (flat) or a triangle (list of rows)."""
    if data and isinstance(data[0], (tuple, list)):
        payload = [[rat_str(v) for v in row] for row in data]
    else:
        payload = [rat_str(v) for v in data]
    return {"family": spec.name, "m": m, "params": spec.params(), "kind": kind, "data": payload}


def dump_document(doc, fmt):
    if fmt == "json":
        data = doc["data"]
        if data and isinstance(data[0], list):
            body = "[\n" + ",\n".join("    " + json.dumps(row) for row in data) + "\n  ]"
        else:
            body = json.dumps(data)
        head = ",\n".join(f"  {json.dumps(k)}: {json.dumps(doc[k])}" for k in DOCUMENT_KEYS[:-1])
        return "{\n" + head + ',\n  "data": ' + body + "\n}\n"
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    data = doc["data"]
    if data and isinstance(data[0], list):
        writer.writerows(data)
    else:
        writer.writerow(data)
    return buf.getvalue()


def load_document(text, fmt):
    """Parse a JSON or CSV document back into exact rationals.

    JSON gives the full document with ``data`` as Fractions; CSV gives just
    the data (a vector for one line, a triangle otherwise).
    """
    if fmt == "json":
        doc = json.loads(text)
        if tuple(doc) != DOCUMENT_KEYS:
            raise ValueError(f"unexpected document keys {list(doc)}")
        data = doc["data"]
        if data and isinstance(data[0], list):
            doc["data"] = [[as_rat(v) for v in row] for row in data]
        else:
            doc["data"] = [as_rat(v) for v in data]
        return doc
    rows = [[as_rat(v) for v in row] for row in csv.reader(io.StringIO(text)) if row]
    return rows[0] if len(rows) == 1 else rows


def matrix_from_document(doc):
    return LTMatrix.from_triangle(doc["data"])


# -- commands -------------------------------------------------------------


def _spec_from_args(args):
    name = args.family
    kind = Kind(name)
    if args.alpha is not None and kind is not Kind.LAGUERRE_MODIFIED:
        raise UsageError("--alpha only applies to laguerre-modified")
    if args.gamma_bar is not None and kind is not Kind.GENERALIZED_EULER:
        raise UsageError("--gamma-bar only applies to generalized-euler")
    if args.coeffs is not None and kind is not Kind.CUSTOM:
        raise UsageError("--coeffs only applies to custom")
    coeffs = None
    if args.coeffs is not None:
        try:
            coeffs = [as_rat(c) for c in args.coeffs.split(",")]
        except (ValueError, ZeroDivisionError):
            raise UsageError(f"bad --coeffs list {args.coeffs!r}")
    try:
        spec = FamilySpec.named(name, alpha=args.alpha, gamma_bar=args.gamma_bar, coeffs=coeffs)
    except ValueError as exc:
        raise UsageError(str(exc))
    if kind is Kind.CUSTOM and len(spec.custom_coeffs) < args.m + 1:
        raise UsageError(f"--coeffs needs at least {args.m + 1} values")
    return spec


def cmd_table(args):
    spec = _spec_from_args(args)
    tm = transfer_matrix(spec, args.m)
    return make_document(spec, args.m, "transfer-matrix", tm.matrix.triangle())


def cmd_eval(args):
    spec = _spec_from_args(args)
    if args.classical:
        if spec.kind not in (Kind.HERMITE_MONIC, Kind.LAGUERRE_MODIFIED, Kind.LEGENDRE_MODIFIED,
                             Kind.CHEBYSHEV1_MODIFIED, Kind.CHEBYSHEV2_MODIFIED):
            raise UsageError(f"--classical is not available for {spec.name}")
        values = classical_values(spec, args.m, args.x)
        kind = "classical-values"
    else:
        values = evaluate(appell_vector(spec, args.m), args.x)
        kind = "values"
    doc = make_document(spec, args.m, kind, values)
    doc["params"]["x"] = rat_str(args.x)
    return doc


def cmd_gamma(args):
    spec = _spec_from_args(args)
    return make_document(spec, args.m, "gamma", gamma_coefficients(spec, args.m))


def cmd_verify(args, out):
    from .verify import run_verification

    families = None
    if args.families:
        families = []
        for name in args.families.split(","):
            name = name.strip()
            if name not in FAMILY_NAMES:
                raise UsageError(f"unknown family {name!r}")
            kind = Kind(name)
            if kind is Kind.LAGUERRE_MODIFIED:
                families.append(FamilySpec(kind, alpha=args.alpha if args.alpha is not None else 0))
            elif kind is Kind.GENERALIZED_EULER:
                g = args.gamma_bar if args.gamma_bar is not None else as_rat("1/3")
                families.append(FamilySpec(kind, gamma_bar=g))
            elif kind is Kind.CUSTOM:
                families.append(FamilySpec(kind, custom_coeffs=default_custom(args.m_max + 1)))
            else:
                families.append(FamilySpec(kind))
    report = run_verification(m_max=args.m_max, seed=args.seed, families=families)
    for r in report.results:
        out.write(r.line() + "\n")
    counts = {}
    for r in report.results:
        counts[r.status] = counts.get(r.status, 0) + 1
    summary = ", ".join(f"{k}: {v}" for k, v in sorted(counts.items()))
    out.write(f"m-max={args.m_max} seed={args.seed} -- {summary}\n")
    return EXIT_OK if report.ok else EXIT_VERIFY


def build_parser():
    parser = argparse.ArgumentParser(prog="appell", description="Exact Appell polynomial tables and identities.")
    sub = parser.add_subparsers(dest="command", required=True)

    def family_args(p, with_x=False):
        p.add_argument("family", choices=FAMILY_NAMES)
        p.add_argument("m", type=_degree)
        if with_x:
            p.add_argument("x", type=_rational)
        p.add_argument("--alpha", type=_rational, help="Laguerre parameter")
        p.add_argument("--gamma-bar", type=_rational, help="generalized Euler parameter")
        p.add_argument("--coeffs", help="comma-separated c_0,c_1,... for the custom family")
        p.add_argument("--format", choices=("csv", "json"), default="csv")
        p.add_argument("--out", help="write to FILE instead of stdout")

    family_args(sub.add_parser("table", help="transfer matrix rows (polynomial coefficients)"))
    p = sub.add_parser("eval", help="values p_0(x)..p_m(x)")
    family_args(p, with_x=True)
    p.add_argument("--classical", action="store_true", help="unmodified Hermite/Laguerre/Legendre/Chebyshev values")
    family_args(sub.add_parser("gamma", help="inverse coefficients gamma_0..gamma_m"))

    p = sub.add_parser("verify", help="run the exact identity suite")
    p.add_argument("--m-max", type=_degree, default=16)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--families", help="comma-separated family names (default: all)")
    p.add_argument("--alpha", type=_rational, help="Laguerre parameter when laguerre-modified is listed")
    p.add_argument("--gamma-bar", type=_rational, help="parameter when generalized-euler is listed")
    # let "-1/2" through as a value rather than an option
    for p in [parser, *sub.choices.values()]:
        p._negative_number_matcher = re.compile(r"^-\d+(/\d+)?$")
    return parser


def main(argv=None, stdout=None, stderr=None):
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code
    try:
        if args.command == "verify":
            return cmd_verify(args, stdout)
        doc = {"table": cmd_table, "eval": cmd_eval, "gamma": cmd_gamma}[args.command](args)
    except UsageError as exc:
        stderr.write(f"appell: error: {exc}\n")
        return EXIT_USAGE
    except DomainError as exc:
        stderr.write(f"appell: domain error: {exc}\n")
        return EXIT_DOMAIN
    except NotInvertible:
        stderr.write("appell: transfer matrix singular\n")
        return EXIT_SINGULAR
    text = dump_document(doc, args.format)
    if args.out:
        with open(args.out, "w", newline="") as fh:
            fh.write(text)
    else:
        stdout.write(text)
    return EXIT_OK


def entry():
    sys.exit(main())


if __name__ == "__main__":
    entry()
