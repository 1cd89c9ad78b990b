"""
Command-line interface: ``boole-witt compute | table | verify | witt``.

Exit codes:
    0  success, including runs whose only failures are expected-fail identities
    1  an identity or congruence failed, or a computation error (zero lambda,
       non-unit denominator, term budget exceeded)
    2  usage error (bad flags, unparsable rationals, invalid parameters)

Negative rationals must be attached to their flag, e.g. ``--x=-1/2``.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Any, List, Optional, Sequence

import pandas as pd

try:  # package import
    from .boole import BooleKind, BooleParams, boole_polys, changhee_polys
    from .config import GridConfig
    from .errors import BooleWittError, InvalidParameter, RationalParseError
    from .euler import euler_polys
    from .padic import PadicContext, witt_check
    from .polynomial import Poly, poly_eval, rational_to_str
    from .rational_parser import parse_grid, parse_int_grid, parse_rational
    from .stirling import table_rows
    from .validator import (
        VALID_FORMATS, VALID_KINDS, VALID_ROUTES, VALID_SEQUENCES, VALID_TABLE_KINDS,
        validate_name, validate_prime,
    )
    from .verify import verify_all
except ImportError:  # script import fallback
    from boole import BooleKind, BooleParams, boole_polys, changhee_polys  # type: ignore
    from config import GridConfig  # type: ignore
    from errors import BooleWittError, InvalidParameter, RationalParseError  # type: ignore
    from euler import euler_polys  # type: ignore
    from padic import PadicContext, witt_check  # type: ignore
    from polynomial import Poly, poly_eval, rational_to_str  # type: ignore
    from rational_parser import parse_grid, parse_int_grid, parse_rational  # type: ignore
    from stirling import table_rows  # type: ignore
    from validator import (  # type: ignore
        VALID_FORMATS, VALID_KINDS, VALID_ROUTES, VALID_SEQUENCES, VALID_TABLE_KINDS,
        validate_name, validate_prime,
    )
    from verify import verify_all  # type: ignore

__all__ = ["build_parser", "main", "TABLE_MAX_N_CAP"]

logger = logging.getLogger(__name__)

TABLE_MAX_N_CAP = 64

# default --format per command
_DEFAULT_FORMAT = {"compute": "plain", "table": "csv", "verify": "plain", "witt": "plain"}


# --- argument types ---

def _rational_arg(text: str):
    try:
        return parse_rational(text)
    except RationalParseError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _grid_arg(text: str):
    try:
        return parse_grid(text)
    except RationalParseError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _int_grid_arg(text: str):
    try:
        return parse_int_grid(text)
    except RationalParseError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _nonneg_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text!r}")
    return value


def _pos_int(text: str) -> int:
    value = _nonneg_int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    return value


# --- parser ---

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=sorted(VALID_FORMATS), help="Output format (plain, json or csv)")
    common.add_argument("--output", help="Write output to this file (UTF-8) instead of stdout")
    common.add_argument("-v", "--verbose", action="store_true", help="Debug logging on stderr")

    parser = argparse.ArgumentParser(
        prog="boole-witt",
        description="Exact Euler, Boole and Changhee polynomials, Stirling tables and identity checks",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_compute = sub.add_parser("compute", parents=[common], help="Compute a polynomial sequence")
    p_compute.add_argument("sequence", choices=sorted(VALID_SEQUENCES))
    p_compute.add_argument("--n", type=_nonneg_int, required=True, help="Highest index")
    p_compute.add_argument("--k", type=_pos_int, default=1, help="Order k (default: 1)")
    p_compute.add_argument("--lambda", dest="lam", type=_rational_arg, help="lambda, required for boole/boole2")
    p_compute.add_argument("--x", type=_rational_arg, help="Evaluate at this rational point")
    p_compute.add_argument("--values", action="store_true", help="Emit values at --x for every index 0..n")
    p_compute.add_argument("--route", choices=sorted(VALID_ROUTES), default="gf", help="Boole route (default: gf)")

    p_table = sub.add_parser("table", parents=[common], help="Dump a Stirling triangle")
    p_table.add_argument("--kind", choices=sorted(VALID_TABLE_KINDS), required=True)
    p_table.add_argument("--max-n", type=_nonneg_int, required=True, help=f"Largest n (at most {TABLE_MAX_N_CAP})")

    p_verify = sub.add_parser("verify", parents=[common], help="Run the identity verification harness")
    p_verify.add_argument("--id", dest="ids", action="append", help="Only this identity id (repeatable)")
    p_verify.add_argument("--lambdas", type=_grid_arg, help='lambda grid, e.g. "1,2,1/2"')
    p_verify.add_argument("--xs", type=_grid_arg, help="x grid of the exact thm1 route")
    p_verify.add_argument("--n-max", type=_nonneg_int)
    p_verify.add_argument("--k-max", type=_pos_int)
    p_verify.add_argument("--primes", type=_int_grid_arg, help='odd primes, e.g. "3,5,7"')
    p_verify.add_argument("--levels", type=_int_grid_arg, help='levels N, e.g. "1,2,3"')
    p_verify.add_argument("--padic-n-max", type=_nonneg_int)
    p_verify.add_argument("--padic-k-max", type=_pos_int)
    p_verify.add_argument("--samples", type=_nonneg_int, help="Random polynomials for the functional equation")
    p_verify.add_argument("--seed", type=int)
    p_verify.add_argument("--slack", type=_nonneg_int)

    p_witt = sub.add_parser("witt", parents=[common], help="Check one Witt-type congruence")
    p_witt.add_argument("--p", type=int, required=True, help="Odd prime")
    p_witt.add_argument("--N", type=_pos_int, required=True, help="Level: sum over [0, p^N)")
    p_witt.add_argument("--M", type=_pos_int, help="Precision (default: N)")
    p_witt.add_argument("--n", type=_nonneg_int, required=True)
    p_witt.add_argument("--lambda", dest="lam", type=_rational_arg, required=True)
    p_witt.add_argument("--x", type=_rational_arg, required=True)
    p_witt.add_argument("--kind", choices=sorted(VALID_KINDS), default="first")
    p_witt.add_argument("--k", type=_pos_int, default=1)
    p_witt.add_argument("--slack", type=_nonneg_int, default=0)
    return parser


# --- rendering ---

def _csv(frame: pd.DataFrame) -> str:
    return frame.to_csv(index=False, lineterminator="\n").rstrip("\n")


def _render_frame(frame: pd.DataFrame, fmt: str) -> str:
    if fmt == "csv":
        return _csv(frame)
    if fmt == "json":
        return json.dumps(frame.to_dict(orient="records"), indent=2)
    return frame.to_string(index=False)


def _emit(text: str, output: Optional[str]) -> None:
    if output:
        Path(output).write_text(text + "\n", encoding="utf-8")
        logger.info("wrote %s", output)
    else:
        sys.stdout.write(text + "\n")


# --- commands ---

def _sequence(args) -> tuple[List[Poly], Any]:
    """Polynomials 0..n of the requested sequence and their JSON dump."""
    if args.sequence == "euler":
        seq = euler_polys(args.k, args.n)
        return list(seq.polys), seq.to_json()
    if args.sequence in ("boole", "boole2"):
        kind = BooleKind.FIRST if args.sequence == "boole" else BooleKind.SECOND
        seq = boole_polys(BooleParams(args.lam, kind, args.k), args.n, route=args.route)
        return list(seq.polys), seq.to_json()
    polys = changhee_polys(args.n)
    return polys, [p.to_json() for p in polys]


def cmd_compute(args, fmt: str) -> tuple[str, int]:
    polys, dump = _sequence(args)

    if args.values:
        frame = pd.DataFrame(
            [{"n": n, "x": rational_to_str(args.x), "value": rational_to_str(poly_eval(p, args.x))}
             for n, p in enumerate(polys)],
            columns=["n", "x", "value"],
        )
        return _render_frame(frame, fmt), 0

    if args.x is not None:
        value = rational_to_str(poly_eval(polys[args.n], args.x))
        if fmt == "json":
            return json.dumps({"sequence": args.sequence, "n": args.n, "x": rational_to_str(args.x), "value": value}), 0
        if fmt == "csv":
            return _csv(pd.DataFrame([{"n": args.n, "x": rational_to_str(args.x), "value": value}])), 0
        return value, 0

    if fmt == "json":
        return json.dumps(dump), 0
    if fmt == "csv":
        frame = pd.DataFrame(
            [{"n": n, "i": i, "coefficient": c} for n, p in enumerate(polys) for i, c in enumerate(p.to_json())],
            columns=["n", "i", "coefficient"],
        )
        return _csv(frame), 0
    coeffs = polys[args.n].to_json()
    return " ".join(coeffs) if coeffs else "0", 0


def cmd_table(args, fmt: str) -> tuple[str, int]:
    if args.max_n > TABLE_MAX_N_CAP:
        raise InvalidParameter(f"--max-n must be at most {TABLE_MAX_N_CAP}, got {args.max_n}")
    frame = pd.DataFrame(table_rows(args.kind, args.max_n), columns=["n", "l", "value"])
    if fmt == "json":
        return json.dumps([[int(n), int(l), int(v)] for n, l, v in frame.itertuples(index=False)]), 0
    return _render_frame(frame, fmt), 0


def _grid_config(args) -> GridConfig:
    for ident in args.ids or []:
        validate_name("identity", ident)
    for p in args.primes or []:
        validate_prime(p)
    for N in args.levels or []:
        if N < 1:
            raise InvalidParameter(f"levels must be positive integers, got {N}")
    return GridConfig().with_overrides(
        ids=args.ids,
        lambdas=args.lambdas,
        thm1_xs=args.xs,
        n_max=args.n_max,
        k_max=args.k_max,
        primes=args.primes,
        levels=args.levels,
        padic_n_max=args.padic_n_max,
        padic_k_max=args.padic_k_max,
        eq2_samples=args.samples,
        seed=args.seed,
        slack=args.slack,
    )


def cmd_verify(args, fmt: str) -> tuple[str, int]:
    report = verify_all(_grid_config(args))
    code = 0 if report.ok else 1
    if fmt == "json":
        return json.dumps(report.to_json(), indent=2), code
    if fmt == "csv":
        return _csv(report.to_frame()), code

    lines = [f"# {key}: {value}" for key, value in report.header.items()]
    summary = report.summary_frame()
    lines += ["", summary[summary.sum(axis=1) > 0].to_string()]
    failing = report.failures(include_expected=True)
    if failing:
        frame = report.to_frame()
        lines += ["", frame[frame["status"] != "pass"].to_string(index=False)]
    genuine = len(report.failures())
    lines += ["", "OK" if report.ok else f"FAILED: {genuine} case(s)"]
    return "\n".join(lines), code


def cmd_witt(args, fmt: str) -> tuple[str, int]:
    ctx = PadicContext(args.p, args.M if args.M is not None else args.N)
    report = witt_check(args.kind, args.k, args.n, args.lam, args.x, ctx, args.N, slack=args.slack)
    code = 0 if report.agree else 1
    if fmt == "json":
        return json.dumps(report.to_json(), indent=2), code
    if fmt == "csv":
        return _csv(pd.DataFrame([report.to_json()])), code
    relation = "=" if report.agree else "!="
    verdict = "agree" if report.agree else "disagree"
    return f"{verdict}: {report.lhs_residue} {relation} {report.rhs_residue} (mod {report.modulus})", code


_COMMANDS = {"compute": cmd_compute, "table": cmd_table, "verify": cmd_verify, "witt": cmd_witt}


def _configure_logging(verbose: bool) -> None:
    level = logging.DEBUG if verbose else logging.WARNING
    logging.basicConfig(stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")
    logging.getLogger().setLevel(level)


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command == "compute":
            if args.sequence in ("boole", "boole2") and args.lam is None:
                parser.error(f"compute {args.sequence} requires --lambda")
            if args.values and args.x is None:
                parser.error("--values requires --x")
    except SystemExit as exc:
        return int(exc.code or 0)

    _configure_logging(args.verbose)

    fmt = args.format or _DEFAULT_FORMAT[args.command]
    try:
        text, code = _COMMANDS[args.command](args, fmt)
    except (InvalidParameter, RationalParseError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except BooleWittError as exc:
        sys.stderr.write(f"error: {type(exc).__name__}: {exc}\n")
        return 1

    _emit(text, args.output)
    return code


if __name__ == "__main__":
    sys.exit(main())
