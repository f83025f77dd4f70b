"""Command-line surface.

Subcommands: classify, cohomology, enumerate, verify, validate.  Exit codes:
0 success (and, for verify, all-agree), 1 verify found a disagreement,
2 malformed input.  Reports go to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import sys

from .acm import classify_numeric, is_acm_oracle, is_initialized, twist_window
from .catalog import CATALOG_NAMES, LatticeLoadError, resolve, resolve_unvalidated
from .cohomology import cohomology
from .cone import is_effective
from .lattice import DivisorClass, PolarizedK3Lattice, validate_admissible
from .verify import verify_theorem


def _parse_class(text: str, lattice: PolarizedK3Lattice) -> DivisorClass:
    try:
        coords = tuple(int(part.strip()) for part in text.split(","))
    except ValueError as exc:
        raise LatticeLoadError(f"malformed class {text!r}: {exc}") from exc
    if len(coords) != lattice.rank:
        raise LatticeLoadError(
            f"class {text!r} has {len(coords)} coordinates, lattice rank is {lattice.rank}"
        )
    return DivisorClass(coords)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quartic-acm",
        description=(
            "Exact lattice-theoretic cohomology and ACM classification on "
            "quartic-type K3 lattices. --lattice accepts a JSON file path or "
            f"a catalog name ({', '.join(CATALOG_NAMES)}). Write negative "
            "coordinates as --class=-1,2."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="numeric case, flags, and ACM verdict of a class")
    p.add_argument("--lattice", required=True)
    p.add_argument("--class", dest="divisor", required=True, metavar="INTS")

    p = sub.add_parser("cohomology", help="(h0, h1, h2) and chi of a class")
    p.add_argument("--lattice", required=True)
    p.add_argument("--class", dest="divisor", required=True, metavar="INTS")
    p.add_argument("--twist", type=int, default=0, help="twist by this multiple of H")

    p = sub.add_parser("enumerate", help="all effective classes up to a degree bound")
    p.add_argument("--lattice", required=True)
    p.add_argument("--max-degree", type=int, required=True)

    p = sub.add_parser("verify", help="classification-vs-oracle equivalence report")
    p.add_argument("--lattice", required=True)
    p.add_argument("--max-degree", type=int, required=True)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--format", choices=("json", "tsv"), default="json")

    p = sub.add_parser("validate", help="admissibility report for a lattice file")
    p.add_argument("--lattice", required=True)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "validate":
            return _run_validate(args)
        lattice = resolve(args.lattice)
        if args.command == "classify":
            return _run_classify(args, lattice)
        if args.command == "cohomology":
            return _run_cohomology(args, lattice)
        if args.command == "enumerate":
            return _run_enumerate(args, lattice)
        return _run_verify(args, lattice)
    except LatticeLoadError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def _run_classify(args: argparse.Namespace, lattice: PolarizedK3Lattice) -> int:
    d = _parse_class(args.divisor, lattice)
    classification = classify_numeric(lattice, d)
    case = classification.case.value if classification.case else f"none ({classification.reason})"
    print(f"coords: {','.join(str(c) for c in d.coords)}")
    print(f"square: {lattice.square(d)}")
    print(f"degree: {lattice.degree(d)}")
    print(f"effective: {'yes' if is_effective(lattice, d) else 'no'}")
    print(f"initialized: {'yes' if is_initialized(lattice, d) else 'no'}")
    print(f"case: {case}")
    print(f"acm: {'yes' if is_acm_oracle(lattice, d) else 'no'}")
    window = twist_window(lattice, d)
    print(f"twist-window: ({window.l_minus}, {window.l_plus})")
    return 0


def _run_cohomology(args: argparse.Namespace, lattice: PolarizedK3Lattice) -> int:
    d = _parse_class(args.divisor, lattice)
    twisted = d + args.twist * lattice.polarization
    sig = cohomology(lattice, twisted)
    print(f"h0={sig.h0} h1={sig.h1} h2={sig.h2} chi={sig.chi}")
    return 0


def _run_enumerate(args: argparse.Namespace, lattice: PolarizedK3Lattice) -> int:
    from .verify import enumerate_effective

    for d in enumerate_effective(lattice, args.max_degree):
        coords = ",".join(str(c) for c in d.coords)
        print(f"{coords}\tsq={lattice.square(d)}\tdeg={lattice.degree(d)}")
    return 0


def _run_verify(args: argparse.Namespace, lattice: PolarizedK3Lattice) -> int:
    report = verify_theorem(lattice, args.max_degree, jobs=args.jobs)
    out = report.to_json() if args.format == "json" else report.to_tsv()
    sys.stdout.write(out)
    return 0 if report.all_agree else 1


def _run_validate(args: argparse.Namespace) -> int:
    lattice = resolve_unvalidated(args.lattice)
    report = validate_admissible(lattice)
    print(f"lattice: {lattice.name or args.lattice}")
    print(f"signature: {report.signature}")
    print(f"admissible: {'yes' if report.ok else 'no'}")
    for violation in report.violations:
        print(f"violation: {violation}")
    return 0 if report.ok else 1


cli_main = main

if __name__ == "__main__":
    sys.exit(main())
