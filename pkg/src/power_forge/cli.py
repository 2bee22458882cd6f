"""Command-line front end.

Subcommands:

* ``construct``  build f for a set of perfect powers, emit artifacts JSON
* ``verify``     exhaustively scan a construction (or stored artifacts)
* ``trace``      integer bookkeeping and invariant checks at one point
* ``oracle``     bounded equation searches and power scans
* ``power``      decompose one value as a perfect power

JSON goes to stdout (or ``--out``); one human summary line goes to the
other stream.  Exit codes: 0 success / PASS, 1 FAIL (failed verdict,
failed invariant, expectation mismatch, or a non-power answer from
``power``), 2 usage or validation errors.  Validation errors are
reported as a JSON error object on stderr.

Worker counts default to the POWER_FORGE_WORKERS environment variable.
"""

from __future__ import annotations

import argparse
import os
import sys
from fractions import Fraction
from typing import Optional, Sequence

from . import jsonio, oracles
from .construct import (
    CapacityError,
    PowerSetInput,
    SelectionPolicy,
    ValidationError,
    construct,
    element_pairs,
)
from .powers import decompose_integer_power, decompose_rational_power
from .verify import trace_quantities, verify_construction

PROG = "power-forge"


def _parse_fraction(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValidationError(f"cannot parse {text!r} as a rational") from exc


def _parse_set(text: str) -> list[Fraction]:
    text = text.strip()
    if not text:
        return []
    return [_parse_fraction(part) for part in text.split(",")]


def _resolve_workers(value: Optional[int]) -> int:
    if value is None:
        raw = os.environ.get("POWER_FORGE_WORKERS", "1")
        try:
            value = int(raw)
        except ValueError:
            raise ValidationError(
                f"POWER_FORGE_WORKERS must be an integer, got {raw!r}"
            ) from None
    if value < 1:
        raise ValidationError(f"workers must be >= 1, got {value}")
    return value


def _emit(document: dict, out: Optional[str]) -> bool:
    """Write the JSON document; True if stdout was used."""
    text = jsonio.dumps(document)
    if out:
        with open(out, "w", encoding="ascii") as fh:
            fh.write(text)
        return False
    sys.stdout.write(text)
    return True


def _summary(line: str, used_stdout: bool) -> None:
    print(line, file=sys.stderr if used_stdout else sys.stdout)


def _add_workers(p: argparse.ArgumentParser) -> None:
    p.add_argument(
        "--workers",
        type=int,
        default=None,
        help="parallel worker processes (default: POWER_FORGE_WORKERS or 1)",
    )


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog=PROG,
        description="construct integer polynomials whose perfect-power values "
        "are exactly a chosen finite set; verify, trace, and search",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    pc = sub.add_parser("construct", help="build f for a set of perfect powers")
    pc.add_argument("--set", required=True, metavar="VALUES",
                    help='comma-separated perfect powers, e.g. "9/25,4"; "" for the empty set')
    pc.add_argument("--variant", choices=("rational", "integer"), default="rational")
    pc.add_argument("--t-max", type=int, default=64,
                    help="scan depth for capacity estimates (default 64)")
    pc.add_argument("--kappa-cap", type=int, default=20,
                    help="largest kappa tried for the offset 2**kappa - 1 (default 20)")
    pc.add_argument("--out", metavar="FILE", help="write artifacts JSON here instead of stdout")

    pv = sub.add_parser("verify", help="exhaustive bounded scan of a construction")
    src = pv.add_mutually_exclusive_group(required=True)
    src.add_argument("--set", metavar="VALUES", help="construct inline from this set")
    src.add_argument("--artifacts", "--artifact", metavar="FILE",
                     help="load artifacts JSON from construct")
    pv.add_argument("--variant", choices=("rational", "integer"), default="rational",
                    help="used with --set; --artifacts carries its own variant")
    pv.add_argument("--height", type=int, help="height bound for the rational scan")
    pv.add_argument("--bound", type=int, help="absolute-value bound for the integer scan")
    pv.add_argument("--progress", action="store_true", help="progress lines on stderr")
    _add_workers(pv)

    pt = sub.add_parser("trace", help="integer bookkeeping at one rational point")
    pt.add_argument("--set", required=True, metavar="VALUES")
    pt.add_argument("--x", required=True, help="the rational point, e.g. 1/2")
    pt.add_argument("--k", type=int, default=None,
                    help="override the exponent (must be a positive multiple of 4)")

    po = sub.add_parser("oracle", help="bounded equation searches and power scans")
    osub = po.add_subparsers(dest="oracle", required=True)

    ol = osub.add_parser("lebesgue", help="X^2 + 1 = Y^n inside a box")
    ol.add_argument("--bound", "--x", type=int, default=10_000, help="|X| cap (default 10000)")
    ol.add_argument("--n-max", "--n", type=int, default=20, help="largest exponent (default 20)")
    ol.add_argument("--expect", choices=("paper",),
                    help="compare against the known full solution set")
    _add_workers(ol)

    oc = osub.add_parser("catalan", help="X^m - Y^n = 1 inside a box")
    oc.add_argument("--base-bound", "--base", type=int, default=100,
                    help="largest base (default 100)")
    oc.add_argument("--exp-bound", "--exp", type=int, default=20,
                    help="largest exponent (default 20)")
    oc.add_argument("--expect", choices=("paper",),
                    help="compare against the known full solution set")

    of = osub.add_parser("fermat", help="quartic variants inside a box")
    of.add_argument("--bound", type=int, default=150, help="|A|, |B| cap (default 150)")
    of.add_argument("--n-max", "--n", type=int, default=8, help="largest exponent (default 8)")
    of.add_argument("--variant", choices=oracles.FERMAT_VARIANTS, default="cn")
    of.add_argument("--expect", choices=("paper",),
                    help="compare against the known full solution set")
    _add_workers(of)

    orc = osub.add_parser("recurrence", help="perfect powers in a*alpha^t + b*beta^t")
    orc.add_argument("--a", required=True, help="coefficient a (rational)")
    orc.add_argument("--b", required=True, help="coefficient b (rational)")
    orc.add_argument("--alpha", required=True, help="root alpha (rational)")
    orc.add_argument("--beta", required=True, help="root beta (rational)")
    orc.add_argument("--t-max", type=int, default=64)

    og = osub.add_parser("gamma", help="perfect powers among gamma - 2^t")
    og.add_argument("--gamma", required=True, help="the scanned value (rational, nonzero)")
    og.add_argument("--t-max", type=int, default=64)

    pp = sub.add_parser("power", help="decompose one value as a perfect power")
    pp.add_argument("value", help="integer or fraction, e.g. 64 or -8/27")

    return parser


def _cmd_construct(args: argparse.Namespace) -> int:
    inp = PowerSetInput.from_values(_parse_set(args.set), variant=args.variant)
    policy = SelectionPolicy(t_max=args.t_max, kappa_cap=args.kappa_cap)
    art = construct(inp, policy)
    used_stdout = _emit(jsonio.artifacts_to_json(art), args.out)
    bits = max((c.bit_length() for c in art.f.coeffs), default=0)
    kappa = "-" if art.kappa is None else art.kappa
    _summary(
        f"constructed variant={inp.variant} |S|={len(inp)} k={art.k} kappa={kappa} "
        f"s={art.s} deg={art.f.degree} coeff_bits<={bits}",
        used_stdout,
    )
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    workers = _resolve_workers(args.workers)
    if args.artifacts:
        import json

        with open(args.artifacts, "r", encoding="ascii") as fh:
            art = jsonio.artifacts_from_json(json.load(fh))
    else:
        inp = PowerSetInput.from_values(_parse_set(args.set), variant=args.variant)
        art = construct(inp)
    variant = art.input.variant
    if variant == "rational":
        if args.height is None or args.bound is not None:
            raise ValidationError("rational scans take --height (and not --bound)")
        window = args.height
    else:
        if args.bound is None or args.height is not None:
            raise ValidationError("integer scans take --bound (and not --height)")
        window = args.bound
    report = verify_construction(art, window, workers=workers, progress=args.progress)
    used_stdout = _emit(jsonio.report_to_json(report), None)
    _summary(
        f"{report.verdict} points={report.points_scanned} hits={len(report.hits)} "
        f"extras={len(report.extras)} missing={len(report.missing)}",
        used_stdout,
    )
    return 0 if report.passed else 1


def _cmd_trace(args: argparse.Namespace) -> int:
    inp = PowerSetInput.from_values(_parse_set(args.set), variant="rational")
    x = _parse_fraction(args.x)
    rec = trace_quantities(element_pairs(inp), x, args.k)
    used_stdout = _emit(jsonio.trace_to_json(rec), None)
    if rec.ok:
        _summary(f"trace ok at x={x}", used_stdout)
        return 0
    _summary(f"trace FAILED at x={x}: {', '.join(rec.failed_checks())}", used_stdout)
    return 1


def _expectation_gate(sol, expected) -> int:
    got, want = set(sol.solutions), set(expected)
    if got == want:
        print("expectation: match", file=sys.stderr)
        return 0
    only_got = sorted(got - want)
    only_want = sorted(want - got)
    print(
        f"expectation: MISMATCH (unexpected={only_got}, absent={only_want})",
        file=sys.stderr,
    )
    return 1


def _cmd_oracle(args: argparse.Namespace) -> int:
    kind = args.oracle
    if kind == "lebesgue":
        workers = _resolve_workers(args.workers)
        sol = oracles.search_lebesgue(args.bound, args.n_max, workers=workers)
        used_stdout = _emit(jsonio.solutions_to_json(sol), None)
        _summary(f"{sol.equation}: {len(sol.solutions)} solutions in box", used_stdout)
        if args.expect:
            return _expectation_gate(sol, oracles.lebesgue_expected(args.bound, args.n_max))
        return 0
    if kind == "catalan":
        sol = oracles.search_catalan(args.base_bound, args.exp_bound)
        used_stdout = _emit(jsonio.solutions_to_json(sol), None)
        _summary(f"{sol.equation}: {len(sol.solutions)} solutions in box", used_stdout)
        if args.expect:
            return _expectation_gate(
                sol, oracles.catalan_expected(args.base_bound, args.exp_bound)
            )
        return 0
    if kind == "fermat":
        workers = _resolve_workers(args.workers)
        sol = oracles.search_fermat_quartic(
            args.bound, args.n_max, variant=args.variant, workers=workers
        )
        used_stdout = _emit(jsonio.solutions_to_json(sol), None)
        _summary(f"{sol.equation}: {len(sol.solutions)} solutions in box", used_stdout)
        if args.expect:
            return _expectation_gate(
                sol,
                oracles.fermat_quartic_expected(args.bound, args.n_max, variant=args.variant),
            )
        return 0
    if kind == "recurrence":
        hits = oracles.scan_recurrence_powers(
            _parse_fraction(args.a),
            _parse_fraction(args.b),
            _parse_fraction(args.alpha),
            _parse_fraction(args.beta),
            args.t_max,
        )
        params = {
            "a": args.a,
            "b": args.b,
            "alpha": args.alpha,
            "beta": args.beta,
            "t_max": args.t_max,
        }
        used_stdout = _emit(
            jsonio.power_hits_to_json(hits, "a*alpha^t + b*beta^t", params), None
        )
        _summary(f"{len(hits)} perfect powers among t <= {args.t_max}", used_stdout)
        return 0
    if kind == "gamma":
        gamma = _parse_fraction(args.gamma)
        hits = oracles.scan_gamma_minus_pow2(gamma, args.t_max)
        params = {"gamma": args.gamma, "t_max": args.t_max}
        used_stdout = _emit(jsonio.power_hits_to_json(hits, "gamma - 2^t", params), None)
        _summary(f"{len(hits)} perfect powers among t <= {args.t_max}", used_stdout)
        return 0
    raise ValidationError(f"unknown oracle {kind!r}")  # pragma: no cover


def _cmd_power(args: argparse.Namespace) -> int:
    value = _parse_fraction(args.value)
    if value.denominator == 1:
        dec = decompose_integer_power(value.numerator)
    else:
        dec = decompose_rational_power(value)
    _emit(jsonio.power_query_to_json(value, dec), None)
    return 0 if dec is not None else 1


_DISPATCH = {
    "construct": _cmd_construct,
    "verify": _cmd_verify,
    "trace": _cmd_trace,
    "oracle": _cmd_oracle,
    "power": _cmd_power,
}


def _positional_guard(argv: list[str]) -> list[str]:
    """Insert "--" so ``power -8/27`` is not read as an option flag."""
    if argv and argv[0] == "power" and "--" not in argv:
        for i, tok in enumerate(argv[1:], 1):
            if tok.startswith("-") and tok not in ("-h", "--help"):
                return argv[:i] + ["--"] + argv[i:]
    return argv


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    tokens = _positional_guard(list(sys.argv[1:] if argv is None else argv))
    try:
        args = parser.parse_args(tokens)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _DISPATCH[args.command](args)
    except (ValidationError, CapacityError, ValueError, ZeroDivisionError, OSError) as exc:
        code = "capacity" if isinstance(exc, CapacityError) else "validation"
        sys.stderr.write(jsonio.dumps(jsonio.error_to_json(str(exc), code)))
        return 2


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
