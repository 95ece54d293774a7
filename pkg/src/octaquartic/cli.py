"""Command-line front end with byte-stable machine-readable output.

Subcommands: classify (topology report as JSON), verify (oracle report as
JSON, exit code encodes agreement), sweep (CSV phase table), mesh (Wavefront
OBJ), group (the 48 symmetry matrices as JSON).  Exit codes: 0 success,
1 usage error, 2 invalid coefficients, 3 disagreement or classification
conflict, 4 inconclusive or nothing to extract.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from fractions import Fraction

from . import oracle as orc
from .classify import (
    ClassificationConflictError,
    a_zero_nodes,
    b_zero_nodes,
    c_zero_nodes,
    classify,
    eps_nodes,
    frange,
    sweep,
)
from .octgroup import group_dump
from .quadric import NotAQuarticError, QuarticCoefficients

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_BAD_COEFFS = 2
EXIT_DISAGREE = 3
EXIT_INCONCLUSIVE = 4

SWEEP_COLUMNS = [
    "family", "eps1", "eps2", "beta", "k", "d",
    "A", "B", "C", "D",
    "case_label", "components", "unbounded", "nesting_depth",
    "sing_1", "sing_6", "sing_8", "sing_12",
    "error",
]


def parse_rational(text: str) -> Fraction:
    """Exact rational from integer, p/q, or finite decimal notation."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational number: {text!r}") from exc


def parse_coeffs(text: str):
    """Four exact rationals; validity as a quartic is checked separately."""
    parts = text.split(",")
    if len(parts) != 4:
        raise ValueError("expected four comma-separated coefficients A,B,C,D")
    return tuple(parse_rational(p) for p in parts)


def parse_range(text: str) -> list:
    parts = text.split(":")
    if len(parts) != 3:
        raise ValueError("range must be LO:HI:STEP")
    lo, hi, step = (parse_rational(p) for p in parts)
    return frange(lo, hi, step)


def default_resolution(args) -> int:
    if args.resolution is not None:
        return args.resolution
    env = os.environ.get("OCTAQ_RESOLUTION")
    if env:
        try:
            return int(env)
        except ValueError:
            raise ValueError(f"OCTAQ_RESOLUTION must be an integer, got {env!r}")
    return 64


def _emit(text: str, out_path) -> None:
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _report_text(report) -> str:
    lines = [
        f"case:       {report.case_label}",
        f"components: {report.component_count}",
        f"unbounded:  {report.unbounded}",
        f"nesting:    {report.nesting_depth}",
    ]
    for orb in report.singular_orbits:
        coords = ", ".join(str(c) for c in orb.rep)
        lines.append(f"singular:   {orb.size} points ({orb.kind}), rep ({coords})")
    for r in report.sphere_radii:
        lines.append(f"radius:     {r.value:.12g} = {r.exact}")
    lines.append(f"provenance: {report.provenance}")
    return "\n".join(lines) + "\n"


def _coeffs_or_exit(args):
    """Returns (QuarticCoefficients, None) or (None, exit_code)."""
    try:
        parts = parse_coeffs(args.coeffs)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return None, EXIT_USAGE
    try:
        return QuarticCoefficients(*parts), None
    except NotAQuarticError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return None, EXIT_BAD_COEFFS


def cmd_classify(args) -> int:
    q, code = _coeffs_or_exit(args)
    if q is None:
        return code
    try:
        report = classify(q)
    except ClassificationConflictError as exc:
        print(f"conflict: {exc}", file=sys.stderr)
        return EXIT_DISAGREE
    if args.format == "text":
        _emit(_report_text(report), args.out)
    else:
        _emit(json.dumps(report.to_json_dict(), indent=2) + "\n", args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    q, code = _coeffs_or_exit(args)
    if q is None:
        return code
    try:
        report = classify(q)
    except ClassificationConflictError as exc:
        print(f"conflict: {exc}", file=sys.stderr)
        return EXIT_DISAGREE
    try:
        n = default_resolution(args)
        oracle_report = orc.verify(q, report, n=n)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    _emit(json.dumps(oracle_report.to_json_dict(), indent=2) + "\n", args.out)
    if oracle_report.agreement == "agree":
        return EXIT_OK
    if oracle_report.agreement == "disagree":
        return EXIT_DISAGREE
    return EXIT_INCONCLUSIVE


def _orbit_size_counts(report) -> dict:
    counts = {1: 0, 6: 0, 8: 0, 12: 0}
    if report is not None:
        for orb in report.singular_orbits:
            counts[orb.size] = counts.get(orb.size, 0) + orb.size
    return counts


def sweep_rows_to_csv(rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(SWEEP_COLUMNS)
    for row in rows:
        p = row.params
        rep = row.report
        counts = _orbit_size_counts(rep)
        a = b = c = d = ""
        if row.coeffs is not None:
            a, b, c, d = (str(t) for t in row.coeffs.as_tuple())
        writer.writerow([
            p.get("family", ""),
            p.get("eps1", ""), p.get("eps2", ""),
            p.get("beta", ""), p.get("k", ""), p.get("d", ""),
            a, b, c, d,
            rep.case_label if rep else "",
            rep.component_count if rep else "",
            rep.unbounded if rep else "",
            rep.nesting_depth if rep else "",
            counts[1], counts[6], counts[8], counts[12],
            row.error or "",
        ])
    return buf.getvalue()


def cmd_sweep(args) -> int:
    try:
        if args.family == "eps":
            if args.k_range is None or args.beta is None:
                raise ValueError("eps sweep needs --beta and --k-range")
            nodes = eps_nodes(
                args.eps1, args.eps2, parse_rational(args.beta), parse_range(args.k_range)
            )
        elif args.family == "a0":
            if args.d_range is None:
                raise ValueError("a0 sweep needs --d-range")
            nodes = a_zero_nodes(args.eps2, parse_range(args.d_range))
        elif args.family == "b0":
            if args.d_range is None:
                raise ValueError("b0 sweep needs --d-range")
            nodes = b_zero_nodes(args.eps2, parse_range(args.d_range))
        else:  # c0
            if args.d_range is None or args.beta is None:
                raise ValueError("c0 sweep needs --beta and --d-range")
            nodes = c_zero_nodes(args.eps1, parse_rational(args.beta),
                                 parse_range(args.d_range))
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    rows = sweep(nodes)
    _emit(sweep_rows_to_csv(rows), args.out)
    return EXIT_OK


def cmd_mesh(args) -> int:
    q, code = _coeffs_or_exit(args)
    if q is None:
        return code
    try:
        n = default_resolution(args)
        half = orc.choose_box(q)
        mesh = orc.extract_mesh(q, half, n)
    except orc.EmptyMeshError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INCONCLUSIVE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    buf = io.StringIO()
    orc.write_obj(mesh, buf)
    _emit(buf.getvalue(), args.out)
    return EXIT_OK


def cmd_group(args) -> int:
    _emit(json.dumps(group_dump(), indent=2) + "\n", args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="octaq",
        description="Classify and verify octahedrally invariant real quartic surfaces.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, coeffs=True):
        if coeffs:
            p.add_argument("--coeffs", required=True, metavar="A,B,C,D",
                           help="rational coefficients (integers, p/q, or decimals)")
        p.add_argument("--resolution", type=int, default=None,
                       help="grid samples per axis (default 64 or $OCTAQ_RESOLUTION)")
        p.add_argument("--out", default=None, help="output path (default stdout)")
        p.add_argument("--format", default="json",
                       choices=["json", "csv", "obj", "text"])

    p = sub.add_parser("classify", help="exact topological classification")
    common(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("verify", help="numerical oracle check of the classification")
    common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sweep", help="phase table over a parameter range (CSV)")
    common(p, coeffs=False)
    p.add_argument("--family", required=True, choices=["a0", "b0", "c0", "eps"])
    p.add_argument("--eps1", type=int, default=1, choices=[-1, 1])
    p.add_argument("--eps2", type=int, default=1, choices=[-1, 1])
    p.add_argument("--beta", default=None, help="beta = |A/B| (rational)")
    p.add_argument("--k-range", default=None, metavar="LO:HI:STEP")
    p.add_argument("--d-range", default=None, metavar="LO:HI:STEP")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("mesh", help="marching-cubes mesh of the surface (OBJ)")
    common(p)
    p.set_defaults(func=cmd_mesh)

    p = sub.add_parser("group", help="dump the 48 symmetry matrices as JSON")
    p.add_argument("--dump", action="store_true", default=True,
                   help="emit the matrices (default)")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_group)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors; remap to the documented code
        return EXIT_USAGE if exc.code else EXIT_OK
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
