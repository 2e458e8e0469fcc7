"""Command line entry point.

Every invocation writes one JSON document to stdout (or to --out FILE) and a
short human-readable summary to stderr.

Exit codes: 0 success, 1 certificate rejected by check-cert, 2 invalid input,
3 certify on a dimension the argument does not cover, 4 budget or
enumeration cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import Optional, Sequence

from .certify import (
    NonexistenceCertificate,
    NotApplicable,
    certify_nonexistence,
    compare_bounds,
    density_count,
    scan_modulus,
    verify_certificate,
)
from .groups import LatticeHom, is_perfect_labeling, parse_group, parse_images
from .kim import DEFAULT_SEED, verify_kim_identity
from .lattice import construction_a_lift, kernel_lattice
from .lee import DEFAULT_ENUMERATION_CAP, BallSpec, EnumerationCapExceeded, ball_size, enumerate_ball
from .search import BudgetExceeded, default_budget, search_linear_pl

EXIT_OK = 0
EXIT_REJECTED = 1
EXIT_INVALID = 2
EXIT_NOT_APPLICABLE = 3
EXIT_BUDGET = 4


class InvalidInput(ValueError):
    pass


@dataclass
class CommandConfig:
    subcommand: str
    args: argparse.Namespace
    out: Optional[str]


def _positive(name: str, value: int, minimum: int = 1) -> int:
    if value is None or value < minimum:
        raise InvalidInput(f"--{name} must be >= {minimum}, got {value}")
    return value


def _parse_hom(args) -> LatticeHom:
    try:
        G = parse_group(args.group)
        return LatticeHom(G, parse_images(args.images, G))
    except ValueError as exc:
        raise InvalidInput(str(exc)) from exc


def cmd_ball(args):
    spec = BallSpec(_positive("n", args.n), _positive("e", args.e, 0))
    doc = {"n": spec.n, "e": spec.e, "size": ball_size(spec)}
    if args.list:
        doc["points"] = [list(p) for p in enumerate_ball(spec, cap=args.cap)]
    return doc, f"|B^{spec.n}({spec.e})| = {doc['size']}", EXIT_OK


def cmd_verify(args):
    h = _parse_hom(args)
    e = _positive("e", args.e, 0)
    check = is_perfect_labeling(h, e)
    doc = {"group": args.group, "images": args.images, "n": h.n, "e": e, **check.to_dict()}
    return doc, f"perfect labeling: {check.perfect}", EXIT_OK


def cmd_kernel(args):
    h = _parse_hom(args)
    if args.q is not None:
        try:
            L = construction_a_lift(h, _positive("q", args.q, 2), args.e)
        except ValueError as exc:
            raise InvalidInput(str(exc)) from exc
    else:
        L = kernel_lattice(h)
    doc = {"group": args.group, "images": args.images, "q": args.q,
           "basis": [list(r) for r in L.basis], "determinant": L.determinant()}
    return doc, f"kernel lattice, |det| = {doc['determinant']}", EXIT_OK


def cmd_kim(args):
    if args.low > args.high:
        raise InvalidInput("--low must not exceed --high")
    report = verify_kim_identity(
        _positive("n", args.n), _positive("k", args.k), _positive("trials", args.trials),
        args.seed, (args.low, args.high),
    )
    summary = f"Kim identity: {report.checks} checks, {len(report.counterexamples)} counterexamples"
    return report.to_dict(), summary, EXIT_OK


def cmd_certify(args):
    result = certify_nonexistence(_positive("n", args.n, 3))
    if isinstance(result, NotApplicable):
        return result.to_dict(), f"n = {args.n}: not applicable ({result.reason.value})", EXIT_NOT_APPLICABLE
    return result.to_dict(), f"n = {args.n}: no linear PL(n,2) code (certificate emitted)", EXIT_OK


def cmd_check_cert(args):
    try:
        text = sys.stdin.read() if args.file == "-" else open(args.file, encoding="utf-8").read()
        cert = NonexistenceCertificate.from_json(text)
    except (OSError, ValueError) as exc:
        raise InvalidInput(f"cannot read certificate: {exc}") from exc
    ok = verify_certificate(cert)
    return {"file": args.file, "n": cert.n, "valid": ok}, f"certificate valid: {ok}", (
        EXIT_OK if ok else EXIT_REJECTED
    )


def cmd_scan(args):
    try:
        k_set = [int(t) for t in args.k.split(",")]
        report = scan_modulus(args.p, k_set, bound=args.bound)
    except ValueError as exc:
        raise InvalidInput(str(exc)) from exc
    refuted = sorted(report.residues_refuted)
    return report.to_dict(), f"p = {args.p}: refuted residues mod {args.p**2}: {refuted}", EXIT_OK


def cmd_density(args):
    limit = _positive("limit", args.limit, 3)
    report = density_count(limit)
    x, new, old = compare_bounds(limit)
    doc = report.to_dict()
    doc["compare_bounds"] = {"x": x, "new_bound": float(new), "old_bound": old}
    return doc, f"{report.count} certified dimensions <= {limit} (ratio {float(report.ratio):.6f})", EXIT_OK


def cmd_search(args):
    n, e = _positive("n", args.n), _positive("e", args.e, 0)
    budget = args.budget if args.budget is not None else default_budget()
    report = search_linear_pl(n, e, mode=args.mode, budget=budget, first_only=args.first)
    verdict = "found" if report.exists else "none"
    return report.to_dict(), (
        f"PL({n},{e}) search ({report.mode}): {len(report.witnesses)} witness(es) {verdict}; "
        f"{report.candidates_examined} candidates, exhaustive={report.exhaustive}"
    ), EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", help="write the JSON document to FILE instead of stdout")

    parser = argparse.ArgumentParser(prog="leecodes", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("ball", parents=[common], help="Lee ball size, optionally its points")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--e", type=int, required=True)
    p.add_argument("--list", action="store_true")
    p.add_argument("--cap", type=int, default=DEFAULT_ENUMERATION_CAP)
    p.set_defaults(func=cmd_ball)

    for name, func, help_ in (
        ("verify", cmd_verify, "check that a homomorphism is a perfect labeling"),
        ("kernel", cmd_kernel, "kernel lattice basis (or Construction A lift with --q)"),
    ):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.add_argument("--group", required=True, help='invariant factors, e.g. "13" or "5,5"')
        p.add_argument("--images", required=True, help='basis images, e.g. "1;5" or "1,0;0,1"')
        p.add_argument("--e", type=int, default=None if name == "kernel" else 2)
        if name == "kernel":
            p.add_argument("--q", type=int, default=None)
        p.set_defaults(func=func)

    p = sub.add_parser("kim", parents=[common], help="check the Q_k power-sum identity")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, default=2, help="largest k checked")
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--low", type=int, default=-1000)
    p.add_argument("--high", type=int, default=1000)
    p.set_defaults(func=cmd_kim)

    p = sub.add_parser("certify", parents=[common], help="nonexistence certificate for PL(n,2)")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("check-cert", parents=[common], help="validate a certificate file")
    p.add_argument("file", help='certificate JSON file, or "-" for stdin')
    p.set_defaults(func=cmd_check_cert)

    p = sub.add_parser("scan", parents=[common], help="residues mod p^2 refuted by the congruences")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--k", default="1,2", help="comma-separated exponents k")
    p.add_argument("--bound", type=int, default=101)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("density", parents=[common], help="count certified dimensions up to a limit")
    p.add_argument("--limit", type=int, required=True)
    p.set_defaults(func=cmd_density)

    p = sub.add_parser("search", parents=[common], help="search for linear PL(n,e) codes")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--e", type=int, required=True)
    p.add_argument("--mode", choices=("reduced", "naive"), default="reduced")
    p.add_argument("--budget", type=int, default=None, help="candidate budget (default: $LEE_BUDGET or 10^7)")
    p.add_argument("--first", action="store_true", help="stop at the first witness")
    p.set_defaults(func=cmd_search)
    return parser


def _emit(doc: dict, out: Optional[str]) -> None:
    text = json.dumps(doc, indent=2) + "\n"
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INVALID
    config = CommandConfig(args.subcommand, args, args.out)
    try:
        doc, summary, code = args.func(config.args)
    except (InvalidInput, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except (BudgetExceeded, EnumerationCapExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    _emit(doc, config.out)
    print(summary, file=sys.stderr)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
