"""Command-line front end.

Exit codes: 0 success, 1 usage or input error, 2 a valid run whose algebra
admits no consistent inference, 3 internal numeric error. Errors are written
to stderr as one line of JSON.
"""

from __future__ import annotations

import argparse
import json
import sys
from importlib import resources
from pathlib import Path
from typing import Sequence

from . import __version__
from .algebra import Algebra, TNormKind, check_tnorm_laws
from .bayes import DEFAULT_P_E_GIVEN_H, DEFAULT_RESOLUTION, exceedance_fraction, posterior_grid
from .errors import FuzzyLogicError, LawViolationError, NumericError, TNormEvaluationError
from .formula import DEFAULT_STEP, evaluate, fmt, parse, parse_assignment, truth_table
from .inference import MTPremises, modus_tollens
from .sht import NO_SOUND_INFERENCE, ShtScenario, TestStatistic, p_value_upper, run_sht

EXIT_OK, EXIT_USAGE, EXIT_INCONSISTENT, EXIT_NUMERIC = 0, 1, 2, 3
SCHEMA_VERSION = "1"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse would exit(2), which is reserved
        raise UsageError(message)


def _number(text: str) -> float:
    try:
        return float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None


def _add_algebra_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--tnorm", choices=[k.value for k in TNormKind], default="product")
    p.add_argument("--impl", choices=["s", "r"], default="s", help="implication convention")
    p.add_argument("--neg", choices=["s", "r"], default="s", help="negation convention")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="fuzzytollens", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("eval", help="evaluate a formula")
    p.add_argument("--formula", required=True)
    p.add_argument("--assign", default="", help="atom values, e.g. a=0.3,b=0.9")
    _add_algebra_flags(p)

    p = sub.add_parser("table", help="CSV truth table of a formula")
    p.add_argument("--formula", required=True)
    p.add_argument("--step", type=_number, default=DEFAULT_STEP)
    _add_algebra_flags(p)

    p = sub.add_parser("mt", help="fuzzy Modus Tollens from premise valuations")
    p.add_argument("--nu-p1", type=_number, required=True)
    p.add_argument("--nu-p2", type=_number, required=True)
    _add_algebra_flags(p)

    p = sub.add_parser("sht", help="hypothesis test as a fuzzy inference")
    p.add_argument("--alpha", type=_number, required=True)
    p.add_argument("--p-err", type=_number, default=0.0)
    p.add_argument("--n", type=_number, default=1.0, dest="model_n")
    p.add_argument("--observed", type=_number)
    p.add_argument("--null-mean", type=_number)
    p.add_argument("--null-sd", type=_number)
    _add_algebra_flags(p)

    p = sub.add_parser("bayes-map", help="posterior map over (P(H), P(E|not H))")
    p.add_argument("--p-e-h", type=_number, default=DEFAULT_P_E_GIVEN_H)
    p.add_argument("--resolution", type=int, default=DEFAULT_RESOLUTION)
    p.add_argument("--threshold", type=_number, default=0.2)
    p.add_argument("--format", choices=["csv", "pgm"], default="csv")
    p.add_argument("--output", type=Path, required=True)

    p = sub.add_parser("check", help="check the t-norm axioms on random samples")
    p.add_argument("--tnorm", choices=[k.value for k in TNormKind], required=True)
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    return parser


def _algebra(args) -> Algebra:
    return Algebra.of(args.tnorm, args.impl, args.neg)


def load_schema(kind: str) -> dict:
    """The published JSON schema for output ``kind`` (mt, verdict, law-report, bayes-map, error)."""
    text = resources.files("fuzzytollens").joinpath("schemas", f"{kind}.schema.json").read_text()
    return json.loads(text)


def _emit_json(kind: str, record: dict) -> None:
    payload = {"schema": f"fuzzytollens.{kind}/{SCHEMA_VERSION}", **record}
    sys.stdout.write(json.dumps(payload) + "\n")


def _cmd_eval(args) -> int:
    f = parse(args.formula)
    value = evaluate(f, parse_assignment(args.assign), _algebra(args))
    sys.stdout.write(fmt(value) + "\n")
    return EXIT_OK


def _cmd_table(args) -> int:
    sys.stdout.write(truth_table(parse(args.formula), _algebra(args), args.step).to_csv())
    return EXIT_OK


def _cmd_mt(args) -> int:
    premises = MTPremises(args.nu_p1, args.nu_p2)
    result = modus_tollens(_algebra(args), premises)
    _emit_json("mt", {
        "tnorm": args.tnorm, "impl": args.impl, "neg": args.neg,
        "nu_p1": premises.nu_p1, "nu_p2": premises.nu_p2,
        **result.to_record(),
    })
    return EXIT_OK if result.consistent else EXIT_INCONSISTENT


def _cmd_sht(args) -> int:
    stat_flags = (args.observed, args.null_mean, args.null_sd)
    if any(v is not None for v in stat_flags) and not all(v is not None for v in stat_flags):
        raise UsageError("--observed, --null-mean and --null-sd must be given together")
    scenario = ShtScenario(args.alpha, args.p_err, args.model_n, _algebra(args))
    p_value = None
    if args.observed is not None:
        p_value = p_value_upper(TestStatistic(args.observed, args.null_mean, args.null_sd))
    verdict = run_sht(scenario, p_value)
    _emit_json("verdict", verdict.to_record())
    return EXIT_INCONSISTENT if verdict.verdict == NO_SOUND_INFERENCE else EXIT_OK


def _cmd_bayes_map(args) -> int:
    grid = posterior_grid(args.p_e_h, args.resolution)
    fraction = exceedance_fraction(grid, args.threshold)
    if args.format == "csv":
        args.output.write_text(grid.to_csv(), encoding="ascii")
    else:
        args.output.write_bytes(grid.to_pgm())
    _emit_json("bayes-map", {
        "p_e_given_h": grid.p_e_given_h,
        "resolution": grid.resolution,
        "threshold": args.threshold,
        "exceedance_fraction": fraction,
        "undefined_count": grid.undefined_count,
        "format": args.format,
        "output": str(args.output),
    })
    return EXIT_OK


def _cmd_check(args) -> int:
    if args.samples < 1:
        raise UsageError("--samples must be >= 1")
    report = check_tnorm_laws(TNormKind(args.tnorm), args.samples, args.seed)
    _emit_json("law-report", report.to_record())
    return EXIT_OK


_COMMANDS = {
    "eval": _cmd_eval,
    "table": _cmd_table,
    "mt": _cmd_mt,
    "sht": _cmd_sht,
    "bayes-map": _cmd_bayes_map,
    "check": _cmd_check,
}


def _fail(code: str, message: str, exit_code: int) -> int:
    record = {"schema": f"fuzzytollens.error/{SCHEMA_VERSION}", "error": code,
              "message": message, "exit_code": exit_code}
    sys.stderr.write(json.dumps(record) + "\n")
    return exit_code


def run(argv: Sequence[str] | None = None) -> int:
    """Parse ``argv``, dispatch, and return the exit code."""
    try:
        args = build_parser().parse_args(argv)
        return _COMMANDS[args.command](args)
    except UsageError as exc:
        return _fail("usage", str(exc), EXIT_USAGE)
    except (NumericError, TNormEvaluationError, LawViolationError) as exc:
        return _fail(exc.code, str(exc), EXIT_NUMERIC)
    except FuzzyLogicError as exc:
        return _fail(exc.code, str(exc), EXIT_USAGE)
    except (ValueError, OSError) as exc:
        return _fail("input", str(exc), EXIT_USAGE)
    except ArithmeticError as exc:
        return _fail("numeric", str(exc), EXIT_NUMERIC)


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
