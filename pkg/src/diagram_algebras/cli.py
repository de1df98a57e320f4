"""Command-line interface: ``diagram-algebras <verb> [flags]``."""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from typing import Optional, Sequence

from .algebra import AlgebraElement, multiply
from .combinatorics import predicted_symmetric_count, tl_diagram, tl_subset
from .diagrams import Diagram, DiagramError, Family, enumerate_family, format_diagram, in_family, parse_diagram
from .model import enumerate_symmetric, model_character, representation_matrix
from .scalars import Poly, parse_rational
from .verification import (
    CheckReport,
    check_absorption,
    check_character_recursion,
    check_counts,
    check_disjointness,
    check_module_axiom,
    check_multiplicity_free,
)


class UsageError(Exception):
    pass


def _family(name: str) -> Family:
    try:
        return Family.parse(name)
    except DiagramError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _require(args: argparse.Namespace, *names: str) -> None:
    for n in names:
        if getattr(args, n.replace("-", "_")) is None:
            raise UsageError(f"--{n} is required for {args.verb}")


def _diagram(args: argparse.Namespace, text: str) -> Diagram:
    d = parse_diagram(text, args.k)
    if not in_family(d, args.family):
        raise UsageError(f"{format_diagram(d)} is not a {args.family.value} diagram")
    return d


def _poly_out(p: Poly, x0: Optional[Fraction]):
    return str(p) if x0 is None else str(p.evaluate(x0))


def _csv(rows: list[list]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerows(rows)
    return buf.getvalue()


# -- verbs --------------------------------------------------------------------------


def cmd_enumerate(args) -> tuple[str, int]:
    _require(args, "k")
    if args.rank is not None or args.fixed is not None:
        _require(args, "rank", "fixed")
        diagrams = list(enumerate_symmetric(args.family, args.k, args.rank, args.fixed).diagrams)
    else:
        diagrams = enumerate_family(args.family, args.k)
    if args.format == "json":
        return json.dumps([d.to_json() for d in diagrams]), 0
    if args.format == "csv":
        return _csv([["diagram", "rank"]] + [[format_diagram(d), d.rank] for d in diagrams]), 0
    return "".join(format_diagram(d) + "\n" for d in diagrams), 0


def cmd_multiply(args) -> tuple[str, int]:
    _require(args, "lhs", "rhs")
    a = _diagram(args, args.lhs)
    b = _diagram(args, args.rhs)
    if a.k != b.k:
        raise UsageError(f"operands have k={a.k} and k={b.k}; pass --k")
    prod = multiply(AlgebraElement.basis(args.family, a), AlgebraElement.basis(args.family, b))
    ((d, coeff),) = prod.terms.items()
    if args.family.x_fixed_to_one and args.x is None:
        args.x = Fraction(1)
    value = _poly_out(coeff, args.x)
    if args.format == "json":
        out = {"k": d.k, "family": args.family.value, "diagram": format_diagram(d), "coefficient": coeff.to_json()}
        if args.x is not None:
            out["value"] = value
        return json.dumps(out), 0
    if args.format == "csv":
        return _csv([["coefficient", "diagram"], [value, format_diagram(d)]]), 0
    return f"{value}\t{format_diagram(d)}\n", 0


def cmd_model(args) -> tuple[str, int]:
    _require(args, "k", "rank", "fixed")
    basis = enumerate_symmetric(args.family, args.k, args.rank, args.fixed)
    if args.diagram is None:
        if args.format == "json":
            return json.dumps(basis.to_json()), 0
        return "".join(format_diagram(d) + "\n" for d in basis.diagrams), 0
    m = representation_matrix(basis, _diagram(args, args.diagram))
    if args.format == "json":
        return json.dumps(m.to_json()), 0
    rows = [[_poly_out(p, args.x) for p in row] for row in m.dense()]
    if args.format == "csv":
        return _csv(rows), 0
    return "".join("\t".join(r) + "\n" for r in rows), 0


def cmd_character(args) -> tuple[str, int]:
    _require(args, "k", "diagram")
    d = _diagram(args, args.diagram)
    if args.rank is not None or args.fixed is not None:
        _require(args, "rank", "fixed")
        grades = [(args.rank, args.fixed)]
    else:
        grades = [(r, f) for r in range(args.k + 1) for f in range(r + 1)]
    rows = []
    for r, f in grades:
        basis = enumerate_symmetric(args.family, args.k, r, f)
        if basis.diagrams:
            rows.append((r, f, model_character(basis, d)))
    if args.format == "json":
        return json.dumps(
            [{"r": r, "f": f, "character": p.to_json(), **({"value": _poly_out(p, args.x)} if args.x is not None else {})} for r, f, p in rows]
        ), 0
    if args.format == "csv":
        return _csv([["r", "f", "character"]] + [[r, f, _poly_out(p, args.x)] for r, f, p in rows]), 0
    return "".join(f"r={r} f={f}\t{_poly_out(p, args.x)}\n" for r, f, p in rows), 0


def _families(args) -> list[Family]:
    return [args.family] if args.family is not None else [f for f in Family if f is not Family.PLANAR_PARTITION]


def cmd_verify(args) -> tuple[str, int]:
    if args.max_k is None and args.k is None:
        raise UsageError("verify needs --k or --max-k")
    reports: list[CheckReport] = []
    for fam in _families(args):
        if fam is Family.PLANAR_PARTITION:
            raise UsageError("verification is not available for planar partition algebras")
        ks = [args.k] if args.k is not None else list(range(args.max_k + 1))
        for k in ks:
            reports.append(check_counts(fam, k))
            reports.append(check_module_axiom(fam, k, args.mode, args.seed, args.samples))
            reports.append(check_absorption(fam, k))
            if fam is Family.SYMMETRIC_GROUP or k >= fam.shift:
                reports.append(check_character_recursion(fam, k))
            reports.append(check_multiplicity_free(fam, k, args.x))
            reports.append(check_disjointness(fam, k, args.x))
    code = 0 if all(r.passed for r in reports) else 1
    if args.format == "json":
        return json.dumps([r.to_json() for r in reports]), code
    if args.format == "csv":
        rows = [["check", "family", "k", "status", "ms"]]
        rows += [[r.check, r.family, r.k, r.status, f"{r.ms:.1f}"] for r in reports]
        return _csv(rows), code
    return "".join(r.line() + "\n" for r in reports), code


def cmd_counts(args) -> tuple[str, int]:
    if args.max_k is None and args.k is None:
        raise UsageError("counts needs --k or --max-k")
    ks = [args.k] if args.k is not None else list(range(args.max_k + 1))
    rows = []
    for fam in _families(args):
        if fam is Family.PLANAR_PARTITION:
            raise UsageError("no closed-form counts for planar partition algebras")
        for k in ks:
            for r in range(k + 1):
                for f in range(r + 1):
                    got = len(enumerate_symmetric(fam, k, r, f))
                    want = predicted_symmetric_count(fam, k, r, f)
                    rows.append([fam.value, k, r, f, got, want, "true" if got == want else "false"])
    code = 0 if all(r[-1] == "true" for r in rows) else 1
    header = ["family", "k", "r", "f", "enumerated", "predicted", "match"]
    if args.format == "json":
        return json.dumps([dict(zip(header, r)) for r in rows]), code
    if args.format == "csv":
        return _csv([header] + rows), code
    return "".join(" ".join(map(str, r)) + "\n" for r in rows), code


def cmd_bijection(args) -> tuple[str, int]:
    if args.subset is not None:
        _require(args, "k")
        try:
            subset = frozenset(int(s) for s in args.subset.replace(",", " ").split())
        except ValueError:
            raise UsageError(f"bad subset {args.subset!r}") from None
        d = tl_diagram(subset, args.k)
    elif args.diagram is not None:
        d = parse_diagram(args.diagram, args.k)
        subset = tl_subset(d)
    else:
        raise UsageError("bijection needs --subset or --diagram")
    items = sorted(subset)
    if args.format == "json":
        return json.dumps({"k": d.k, "subset": items, "diagram": format_diagram(d)}), 0
    if args.format == "csv":
        return _csv([["subset", "diagram"], [" ".join(map(str, items)), format_diagram(d)]]), 0
    return f"{{{','.join(map(str, items))}}}\t{format_diagram(d)}\n", 0


VERBS = {
    "enumerate": cmd_enumerate,
    "multiply": cmd_multiply,
    "model": cmd_model,
    "character": cmd_character,
    "verify": cmd_verify,
    "counts": cmd_counts,
    "bijection": cmd_bijection,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="diagram-algebras",
        description="Diagram algebras and their signed-conjugation Gelfand models.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--family", type=_family, help="partition, brauer, rook, rook-brauer, tl, motzkin, planar-rook, symmetric, planar-partition")
    common.add_argument("--k", type=int)
    common.add_argument("--max-k", type=int)
    common.add_argument("--rank", type=int)
    common.add_argument("--fixed", type=int)
    common.add_argument("--x", type=_rational, help="specialise x to a rational p/q")
    common.add_argument("--format", choices=("json", "csv", "text"), default="text")
    common.add_argument("--out", help="write output to this file")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--mode", choices=("exhaustive", "sampled"), default="exhaustive")
    common.add_argument("--samples", type=int, default=10_000)
    sub = parser.add_subparsers(dest="verb", required=True)
    sub.add_parser("enumerate", parents=[common], help="list diagrams or a symmetric basis")
    p = sub.add_parser("multiply", parents=[common], help="product of two diagrams")
    p.add_argument("--lhs")
    p.add_argument("--rhs")
    p = sub.add_parser("model", parents=[common], help="symmetric basis or representation matrix")
    p.add_argument("--diagram")
    p = sub.add_parser("character", parents=[common], help="model characters of a diagram")
    p.add_argument("--diagram")
    sub.add_parser("verify", parents=[common], help="run the structural checks")
    sub.add_parser("counts", parents=[common], help="enumerated vs predicted symmetric-diagram counts")
    p = sub.add_parser("bijection", parents=[common], help="Temperley-Lieb subset bijection")
    p.add_argument("--subset")
    p.add_argument("--diagram")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.verb not in ("verify", "counts", "bijection") and args.family is None:
        args.family = Family.PARTITION
    if args.verb == "bijection":
        args.family = Family.TEMPERLEY_LIEB
    try:
        text, code = VERBS[args.verb](args)
    except (UsageError, DiagramError, ValueError) as exc:
        parser.print_usage(sys.stderr)
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
