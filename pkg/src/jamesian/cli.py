"""Command-line interface.

Exit codes: 0 success, 1 usage, 2 domain error, 3 numerical failure,
4 condition violations.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional

from .core import DomainError, JamesianError, NumericalError, ParamError, unit
from .curves import (
    field_csv,
    integrate_level_curve_ode,
    max_deviation,
    sample_gradient_field,
    sample_level_curve,
)
from .generators import jamesian_from_generator, tabulate
from .registry import MODEL_IDS, ModelSpec, generator_for, get_model
from .reports import fmt
from .verify import algebraic_identity_checks, check_conditions, mc_estimate, mc_text, z_score

EXIT_OK, EXIT_USAGE, EXIT_DOMAIN, EXIT_NUMERIC, EXIT_VIOLATION = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _g15(x: float) -> str:
    return f"{x:.15g}"


def _emit(args, text: str, payload: dict) -> None:
    if getattr(args, "format", "text") == "json":
        print(json.dumps(payload, sort_keys=False))
    else:
        print(text)


def cmd_eval(args) -> int:
    model = get_model(args.model)
    value = model(args.a, args.b)
    _emit(args, _g15(value), {"model": model.name, "a": args.a, "b": args.b, "value": value})
    return EXIT_OK


def cmd_grad(args) -> int:
    model = get_model(args.model)
    da, db = model.grad(args.a, args.b)
    ua, ub = unit((da, db))
    text = "\n".join([
        f"dJ/da={_g15(da)}",
        f"dJ/db={_g15(db)}",
        f"direction=({_g15(ua)}, {_g15(ub)})",
    ])
    _emit(args, text, {"model": model.name, "a": args.a, "b": args.b,
                       "dJ_da": da, "dJ_db": db, "direction": [ua, ub]})
    return EXIT_OK


def _write(path: Optional[str], text: str) -> None:
    if path is None:
        sys.stdout.write(text)
        return
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


def cmd_curve(args) -> int:
    spec = ModelSpec.parse(args.model)
    model = get_model(args.model)
    if args.ode:
        gen = generator_for(spec)
        if gen is None or gen.g_prime is None:
            raise DomainError(f"model {spec.key!r} has no generator to integrate")
        samples = integrate_level_curve_ode(gen, args.c, (args.a_min, args.a_max), args.step)
        dev = max_deviation(samples, model)
        _write(args.out, samples.to_csv() + f"# max_deviation={fmt(dev)}\n")
        if args.out is not None:
            print(f"max_deviation={fmt(dev)}")
        return EXIT_OK
    if args.fast:
        gen = generator_for(spec)
        if gen is None or gen.evaluation_mode != "quadrature":
            raise UsageError("--fast only applies to power:<n> models")
        model = jamesian_from_generator(tabulate(gen))
    samples = sample_level_curve(model, args.c, args.n)
    _write(args.out, samples.to_csv())
    return EXIT_OK


def cmd_field(args) -> int:
    model = get_model(args.model)
    _write(args.out, field_csv(sample_gradient_field(model, 1.0 / args.mesh)))
    return EXIT_OK


def cmd_mc(args) -> int:
    model = get_model(args.model)
    est = mc_estimate(args.a, args.b, args.trials, args.seed, args.max_rounds)
    value = model(args.a, args.b)
    payload = dict(est.to_dict(), model=model.name, model_value=value, z=z_score(est, value))
    _emit(args, mc_text(est, model.name, value), payload)
    return EXIT_OK


def cmd_check(args) -> int:
    model = get_model(args.model)
    report = check_conditions(model, args.list, 1.0 / args.mesh, args.tol)
    _emit(args, report.to_text(), report.to_dict())
    return EXIT_OK if report.passed else EXIT_VIOLATION


def cmd_identities(args) -> int:
    results = algebraic_identity_checks()
    text = "\n".join(f"{r.name}: max_residual={fmt(r.max_residual)} tol={fmt(r.tolerance)} "
                     f"{'PASS' if r.passed else 'FAIL'}" for r in results)
    _emit(args, text, {"checks": [{"name": r.name, "max_residual": r.max_residual,
                                   "tolerance": r.tolerance, "passed": r.passed} for r in results]})
    return EXIT_OK if all(r.passed for r in results) else EXIT_VIOLATION


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="jamesian", description="James function and Jamesian models.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    model_help = f"model id: {', '.join(MODEL_IDS)}"

    def fmt_opt(p):
        p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("eval", help="evaluate a model at (a, b)")
    p.add_argument("--model", default="james", help=model_help)
    p.add_argument("--a", type=float, required=True)
    p.add_argument("--b", type=float, required=True)
    fmt_opt(p)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("grad", help="analytic gradient and its direction")
    p.add_argument("--model", default="james", help=model_help)
    p.add_argument("--a", type=float, required=True)
    p.add_argument("--b", type=float, required=True)
    fmt_opt(p)
    p.set_defaults(func=cmd_grad)

    p = sub.add_parser("curve", help="sample one level curve as CSV")
    p.add_argument("--model", default="james", help=model_help)
    p.add_argument("--c", type=float, required=True)
    p.add_argument("--n", type=int, default=101)
    p.add_argument("--ode", action="store_true", help="integrate db/da = g'(a)/g'(b) with RK4")
    p.add_argument("--step", type=float, default=1e-3)
    p.add_argument("--a-min", type=float, default=0.01)
    p.add_argument("--a-max", type=float, default=0.99)
    p.add_argument("--fast", action="store_true", help="tabulated generator (power models, plotting only)")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_curve)

    p = sub.add_parser("field", help="unit gradient directions on an interior mesh as CSV")
    p.add_argument("--model", default="james", help=model_help)
    p.add_argument("--mesh", type=int, default=20, help="cells per side")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_field)

    p = sub.add_parser("mc", help="Monte Carlo estimate of the win probability")
    p.add_argument("--a", type=float, required=True)
    p.add_argument("--b", type=float, required=True)
    p.add_argument("--trials", type=int, default=100_000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-rounds", type=int, default=10 ** 6)
    p.add_argument("--model", default="james", help=model_help)
    fmt_opt(p)
    p.set_defaults(func=cmd_mc)

    p = sub.add_parser("check", help="audit a model against a condition list")
    p.add_argument("--model", default="james", help=model_help)
    p.add_argument("--list", choices=("james", "proto", "involutive"), default="james")
    p.add_argument("--mesh", type=int, default=50, help="cells per side")
    p.add_argument("--tol", type=float, default=1e-8)
    fmt_opt(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("identities", help="algebraic identities behind the closed form")
    fmt_opt(p)
    p.set_defaults(func=cmd_identities)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except DomainError as exc:
        code, msg = EXIT_DOMAIN, str(exc)
    except NumericalError as exc:
        code, msg = EXIT_NUMERIC, str(exc)
    except (ParamError, UsageError, ValueError, OSError, JamesianError) as exc:
        code, msg = EXIT_USAGE, str(exc)
    print(f"error: {msg}", file=sys.stderr)
    return code

if __name__ == "__main__":
    sys.exit(main())
