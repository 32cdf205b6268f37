"""Command line surface: group info, Hermite tables, Fischer decomposition,
and the verification suites, all as deterministic JSON on standard output.

Exit codes: 0 success, 1 usage, 2 invalid input data, 3 mathematical
precondition violated, 4 verification failures.
"""
from __future__ import annotations

import argparse
import dataclasses
import json
import sys

from .errors import DimensionMismatch, InvalidRootSystem, MathPrecondition
from .groups import (BUILTIN_FAMILIES, RootSystem, builtin_root_system,
                     root_system_from_json)
from .hermite import ch_laguerre, ch_recursion, ch_rodrigues, fischer_decompose, harmonic_basis
from .operators import DunklContext
from .poly import Polynomial, parse_rational, rational_str
from .suites import PROFILES, SUITE_NAMES, run_suite

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INVALID_INPUT = 2
EXIT_PRECONDITION = 3
EXIT_VERIFICATION = 4


class UsageError(Exception):
    """Flag combinations argparse alone cannot reject."""


class InputDataError(Exception):
    """Unreadable or malformed input files and values."""


class _Parser(argparse.ArgumentParser):
    # usage problems must exit 1, not argparse's default 2
    def error(self, message: str) -> None:
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _add_pretty_flag(sub: argparse.ArgumentParser) -> None:
    # SUPPRESS keeps a subcommand-level default from clobbering the top-level flag
    sub.add_argument("--pretty", action="store_true", default=argparse.SUPPRESS,
                     help="indent the JSON output")


def _add_group_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--group", choices=BUILTIN_FAMILIES,
                     help="builtin family of positive root systems")
    sub.add_argument("--m", type=int, help="number of variables")
    sub.add_argument("--kappa", help="comma-separated multiplicities, one per orbit")
    sub.add_argument("--group-file", help="path to a root system JSON file")


def _load_json(path: str):
    try:
        if path == "-":
            return json.loads(sys.stdin.read())
        with open(path, "r", encoding="utf-8") as handle:
            return json.load(handle)
    except OSError as exc:
        raise InputDataError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputDataError(f"{path} is not valid JSON: {exc}") from exc


def _resolve_group(args: argparse.Namespace) -> RootSystem:
    if args.group_file and args.group:
        raise UsageError("use either --group or --group-file, not both")
    if args.group_file:
        return root_system_from_json(_load_json(args.group_file))
    if not args.group:
        raise UsageError("a root system is required: pass --group or --group-file")
    if args.m is None:
        raise UsageError("--group needs --m")
    if args.kappa:
        try:
            kappas = [parse_rational(part) for part in args.kappa.split(",")]
        except ValueError as exc:
            raise InputDataError(f"cannot parse --kappa {args.kappa!r}: {exc}") from exc
    else:
        kappas = []
    return builtin_root_system(args.group, args.m, kappas)


def _emit(payload, pretty: bool) -> None:
    if pretty:
        text = json.dumps(payload, indent=2)
    else:
        text = json.dumps(payload, separators=(",", ":"))
    sys.stdout.write(text + "\n")


def cmd_group_info(args: argparse.Namespace) -> tuple[dict, int]:
    system = _resolve_group(args)
    payload = system.to_json()
    payload["orbits"] = [list(orbit) for orbit in system.orbits]
    payload["gamma"] = rational_str(system.gamma)
    payload["mu"] = rational_str(system.mu)
    return payload, EXIT_OK


_CONSTRUCTIONS = {
    "recursion": lambda ctx, t, ell, h: ch_recursion(ctx, t, h),
    "rodrigues": lambda ctx, t, ell, h: ch_rodrigues(ctx, t, h),
    "laguerre": ch_laguerre,
}


def cmd_hermite(args: argparse.Namespace) -> tuple[dict, int]:
    ctx = DunklContext(_resolve_group(args))
    basis = harmonic_basis(ctx, args.ell).elements
    if not 0 <= args.h_index < len(basis):
        raise InputDataError(
            f"--h-index {args.h_index} out of range: the degree-{args.ell} "
            f"harmonic basis has {len(basis)} elements")
    harmonic = basis[args.h_index]
    if args.construction != "all":
        record = _CONSTRUCTIONS[args.construction](ctx, args.t, args.ell, harmonic)
        return record.to_json(), EXIT_OK
    records = {name: fn(ctx, args.t, args.ell, harmonic)
               for name, fn in _CONSTRUCTIONS.items()}
    first = records["recursion"]
    agree = all(rec.polynomial == first.polynomial
                and rec.radial_coeffs == first.radial_coeffs
                for rec in records.values())
    payload = {"constructions": {name: rec.to_json() for name, rec in records.items()},
               "agree": agree}
    return payload, EXIT_OK if agree else EXIT_VERIFICATION


def cmd_decompose(args: argparse.Namespace) -> tuple[dict, int]:
    ctx = DunklContext(_resolve_group(args))
    try:
        poly = Polynomial.from_json(_load_json(args.poly_file))
    except (KeyError, TypeError, ValueError, DimensionMismatch) as exc:
        raise InputDataError(f"bad polynomial JSON: {exc}") from exc
    if poly.m != ctx.m:
        raise InputDataError(
            f"polynomial has m = {poly.m} but the root system has m = {ctx.m}")
    if poly and not poly.is_homogeneous():
        raise MathPrecondition("Fischer decomposition needs a homogeneous polynomial; "
                               "split the input into homogeneous parts first")
    components = fischer_decompose(ctx, poly)
    payload = {"components": [{"i": i, "component": part.to_json()}
                              for i, part in components]}
    return payload, EXIT_OK


def cmd_verify(args: argparse.Namespace) -> tuple[dict, int]:
    profile = PROFILES[args.profile]
    if args.max_deg is not None:
        if args.max_deg < 0:
            raise UsageError("--max-deg must be nonnegative")
        profile = dataclasses.replace(
            profile, max_deg=args.max_deg,
            clifford_deg=min(profile.clifford_deg, args.max_deg))
    names = SUITE_NAMES if args.suite == "all" else (args.suite,)
    verdicts = []
    for name in names:
        verdict = run_suite(name, profile, args.seed)
        print(f"{name}: {verdict.cases} cases, {len(verdict.failures)} failures, "
              f"{verdict.wall_time_ms:.1f} ms", file=sys.stderr)
        verdicts.append(verdict)
    failures = sum(len(v.failures) for v in verdicts)
    if args.suite == "all":
        payload = {"suites": [v.to_json() for v in verdicts]}
    else:
        payload = verdicts[0].to_json()
    return payload, EXIT_OK if failures == 0 else EXIT_VERIFICATION


def build_parser() -> _Parser:
    parser = _Parser(prog="dunkl-hermite",
                     description="Exact Dunkl operator calculus and Clifford-Hermite polynomials")
    parser.add_argument("--pretty", action="store_true", help="indent the JSON output")
    commands = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    info = commands.add_parser("group-info", help="roots, orbits, gamma and mu of a group")
    _add_group_flags(info)
    _add_pretty_flag(info)
    info.set_defaults(handler=cmd_group_info)

    hermite = commands.add_parser("hermite", help="one Clifford-Hermite polynomial as JSON")
    _add_group_flags(hermite)
    hermite.add_argument("--t", type=int, required=True, help="Hermite index (half the degree rise)")
    hermite.add_argument("--ell", type=int, required=True, help="degree of the harmonic factor")
    hermite.add_argument("--h-index", type=int, default=0,
                         help="which basis harmonic of degree ell (default 0)")
    hermite.add_argument("--construction", choices=("recursion", "rodrigues", "laguerre", "all"),
                         default="recursion")
    _add_pretty_flag(hermite)
    hermite.set_defaults(handler=cmd_hermite)

    decompose = commands.add_parser("decompose", help="Fischer decomposition of a polynomial")
    _add_group_flags(decompose)
    decompose.add_argument("--poly-file", required=True,
                           help="polynomial JSON file, or - for standard input")
    _add_pretty_flag(decompose)
    decompose.set_defaults(handler=cmd_decompose)

    verify = commands.add_parser("verify", help="run a verification suite")
    verify.add_argument("--suite", choices=SUITE_NAMES + ("all",), default="all")
    verify.add_argument("--profile", choices=tuple(PROFILES), default="desk")
    verify.add_argument("--seed", type=int, default=7,
                        help="seed for the multiplicity draws (default 7)")
    verify.add_argument("--max-deg", type=int, default=None,
                        help="override the profile's polynomial degree cap")
    _add_pretty_flag(verify)
    verify.set_defaults(handler=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        payload, code = args.handler(args)
    except UsageError as exc:
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (InputDataError, InvalidRootSystem) as exc:
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return EXIT_INVALID_INPUT
    except MathPrecondition as exc:
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    _emit(payload, args.pretty)
    return code


if __name__ == "__main__":
    sys.exit(main())
