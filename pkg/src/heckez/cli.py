"""
Command-line entry point.

Exit codes: 0 success (all checks pass), 1 a verification failure, 2 a usage
or configuration error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
from pathlib import Path

from . import verify
from .center import (
    CentralElement, class_polynomials, gr_basis_element, gr_element,
    norm_F, norm_one, norm_tsq,
)
from .charmap import character_table, idempotent_coords, latex_tabular, psi
from .combinatorics import parse_partition, partitions_of, render_partition
from .linalg import mat_inverse, mat_mul
from .ratfun import ONE, ZERO
from .symfunc import BASES
from .symgroup import parse_permutation

log = logging.getLogger("heckez")

HECKE_MAX_N = 6
SYMFUNC_MAX_N = 8

FAMILIES = {
    "GR": gr_basis_element,
    "N1": norm_one,
    "NT2": norm_tsq,
    "NF": norm_F,
    "IDEM": idempotent_coords,
}

ELEMENTS = {"gr": "GR", "n1": "N1", "nt2": "NT2", "nf": "NF", "idem": "IDEM"}


class UsageError(Exception):
    pass


def _check_n(args, default: int) -> int:
    n = args.n
    if n < 0:
        raise UsageError("n must be non-negative")
    limit = args.max_n if args.max_n is not None else default
    if n > limit:
        raise UsageError(f"n={n} exceeds the size bound {limit}; raise it with --max-n")
    if n > default:
        log.warning("n=%d is above the default bound %d; expect long run times", n, default)
    return n


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")


def _dump_json(data) -> str:
    return json.dumps(data, indent=2, sort_keys=True) + "\n"


# ---------------------------------------------------------------------------
# matrices between central families


def family_matrix(name: str, n: int) -> list[list]:
    """Row lam: coordinates of the lam-th member of the family in f*."""
    make = FAMILIES[name]
    parts = partitions_of(n)
    return [[make(lam).coeff(mu) for mu in parts] for lam in parts]


def family_transition(source: str, target: str, n: int) -> list[list]:
    """Row lam expands source[lam] in the target family."""
    a = family_matrix(source, n)
    b = family_matrix(target, n)
    return mat_mul(a, mat_inverse(b, one=ONE, zero=ZERO), zero=ZERO)


def matrix_csv(n: int, corner: str, entries) -> str:
    parts = partitions_of(n)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow([corner] + [render_partition(mu) for mu in parts])
    for lam, row in zip(parts, entries):
        writer.writerow([render_partition(lam)] + [str(x) for x in row])
    return buf.getvalue()


def _render_matrix(n: int, source: str, target: str, entries, fmt: str) -> str:
    parts = partitions_of(n)
    if fmt == "csv":
        return matrix_csv(n, f"{source}\\{target}", entries)
    if fmt == "json":
        return _dump_json({"n": n, "from": source, "to": target,
                           "order": [render_partition(p) for p in parts],
                           "entries": [[str(x) for x in row] for row in entries]})
    return latex_tabular(parts, parts, entries, corner=f"{source} \\backslash {target}")


# ---------------------------------------------------------------------------
# renderers shared by the commands and by `export`


def render_chartable(n: int, fmt: str) -> str:
    ct = character_table(n)
    if fmt == "csv":
        return ct.to_csv()
    if fmt == "json":
        return _dump_json(ct.to_json())
    return ct.to_latex()


def render_grbasis(n: int, fmt: str) -> str:
    parts = partitions_of(n)
    if fmt == "json":
        return _dump_json({"n": n, "elements": [
            {"partition": list(lam), "element": gr_element(lam).to_json()}
            for lam in parts]})
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["lambda", "w", "coeff"])
    for lam in parts:
        for w, c in gr_element(lam).sorted_terms():
            writer.writerow([render_partition(lam), " ".join(map(str, w)), str(c)])
    return buf.getvalue()


def render_classpoly_row(n: int, w) -> str:
    row = class_polynomials(n).row(w)
    return ", ".join(f"({render_partition(lam)}): {c}" for lam, c in row.items()) + "\n"


def render_classpoly(n: int, fmt: str) -> str:
    table = class_polynomials(n)
    if fmt == "json":
        return _dump_json({"n": n, "rows": [
            {"w": list(w), "f": {render_partition(lam): str(c)
                                 for lam, c in table.row(w).items()}}
            for w in sorted(table.table)]})
    return table.to_csv()


def parse_element(spec: str, n: int) -> CentralElement:
    tag, sep, rest = spec.partition(":")
    if not sep or tag.lower() not in ELEMENTS:
        raise UsageError(f"element spec {spec!r} must look like gr:2,1 "
                         f"with a prefix in {sorted(ELEMENTS)}")
    try:
        lam = parse_partition(rest)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if sum(lam) != n:
        raise UsageError(f"{render_partition(lam)} is not a partition of {n}")
    return FAMILIES[ELEMENTS[tag.lower()]](lam)


# ---------------------------------------------------------------------------
# commands


def cmd_verify(args) -> int:
    if args.identity not in verify.selectors():
        raise UsageError(f"unknown identity {args.identity!r}; "
                         f"choose from {', '.join(verify.selectors())}")
    n = _check_n(args, HECKE_MAX_N)
    report = verify.run(n, args.identity)
    for line in report.lines():
        print(line)
    ok = report.ok
    print("ALL PASS" if ok else "FAILURES PRESENT")
    return 0 if ok else 1


def cmd_chartable(args) -> int:
    n = _check_n(args, SYMFUNC_MAX_N)
    _emit(render_chartable(n, args.format), args.out)
    return 0


def cmd_grbasis(args) -> int:
    n = _check_n(args, HECKE_MAX_N)
    _emit(render_grbasis(n, args.format), args.out)
    return 0


def cmd_psi(args) -> int:
    n = _check_n(args, HECKE_MAX_N)
    z = parse_element(args.elem, n)
    _emit(str(psi(z).to(args.basis)) + "\n", args.out)
    return 0


def cmd_classpoly(args) -> int:
    n = _check_n(args, HECKE_MAX_N)
    if args.w is not None:
        try:
            w = parse_permutation(args.w)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        if len(w) != n:
            raise UsageError(f"{args.w!r} is not a permutation of 1..{n}")
        _emit(render_classpoly_row(n, w), args.out)
    else:
        _emit(render_classpoly(n, args.format), args.out)
    return 0


def cmd_transition(args) -> int:
    n = _check_n(args, HECKE_MAX_N)
    source, target = args.source.upper(), args.target.upper()
    for tag in (source, target):
        if tag not in FAMILIES:
            raise UsageError(f"unknown family {tag!r}; choose from {', '.join(FAMILIES)}")
    entries = family_transition(source, target, n)
    _emit(_render_matrix(n, source, target, entries, args.format), args.out)
    return 0


def cmd_export(args) -> int:
    """Write every table for degree n into a directory."""
    n = _check_n(args, HECKE_MAX_N)
    root = Path(args.out or f"heckez-n{n}")
    root.mkdir(parents=True, exist_ok=True)
    files = {
        "chartable.csv": render_chartable(n, "csv"),
        "chartable.json": render_chartable(n, "json"),
        "grbasis.json": render_grbasis(n, "json"),
        "classpoly.csv": render_classpoly(n, "csv"),
    }
    for fam in ("N1", "NT2", "NF", "IDEM"):
        files[f"transition-{fam}-GR.csv"] = _render_matrix(
            n, fam, "GR", family_transition(fam, "GR", n), "csv")
    for name, text in sorted(files.items()):
        (root / name).write_text(text, encoding="utf-8")
        print(root / name)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="heckez",
        description="Exact computations in the centers of type A Hecke algebras.")
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_, fmt=True, out=True):
        p = sub.add_parser(name, help=help_)
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--max-n", type=int, default=None,
                       help="raise the size bound (slow above the default)")
        if fmt:
            p.add_argument("--format", choices=["csv", "json", "latex"], default="csv")
        if out:
            p.add_argument("--out", default=None, help="output path (default stdout)")
        p.set_defaults(func=func)
        return p

    p = add("verify", cmd_verify, "run exact identity checks", fmt=False, out=False)
    p.add_argument("--identity", default="all",
                   help="one of: " + ", ".join(verify.selectors()))
    add("chartable", cmd_chartable, "character table of H_n")
    p = add("grbasis", cmd_grbasis, "Geck-Rouquier basis in the T basis")
    p.set_defaults(format="csv")
    p = add("psi", cmd_psi, "Frobenius image of a central element", fmt=False)
    p.add_argument("--elem", required=True, help="gr:LAM, n1:LAM, nt2:LAM, nf:LAM or idem:LAM")
    p.add_argument("--basis", choices=list(BASES), default="m")
    p = add("classpoly", cmd_classpoly, "class polynomials")
    p.add_argument("--w", default=None, help='one-line permutation, e.g. "3 2 1"')
    p = add("transition", cmd_transition, "transition matrix between central families")
    p.add_argument("--from", dest="source", required=True, help=", ".join(FAMILIES))
    p.add_argument("--to", dest="target", required=True, help=", ".join(FAMILIES))
    add("export", cmd_export, "write all tables for degree n to a directory", fmt=False)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s: %(message)s")
    try:
        return args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"heckez: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
