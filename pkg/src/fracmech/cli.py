"""Command line entry point: ``python -m fracmech <command>``.

Exit codes: 0 success, 1 invalid input or configuration, 2 numerical failure
(singular gradient, interval leaving the body, non-finite result).
"""

from __future__ import annotations

import argparse
import sys

import numpy as np

from . import experiments as ex
from .errors import ConfigError, DomainExitError, FracmechError, IntervalError, OrderError
from .frac_core import DEFAULT_M, Fn1D, rc_derivative

EXIT_OK, EXIT_INVALID, EXIT_NUMERICAL = 0, 1, 2

FUNCTIONS = {
    "exp": Fn1D(np.exp, np.exp),
    "sin": Fn1D(np.sin, np.cos),
    "cos": Fn1D(np.cos, lambda t: -np.sin(t)),
    "linear": Fn1D(lambda t: t, lambda t: np.ones_like(t)),
    "cubic": Fn1D(lambda t: t ** 3, lambda t: 3 * t ** 2),
    "const": Fn1D(lambda t: np.ones_like(t), lambda t: np.zeros_like(t)),
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INVALID, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="fracmech", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name, help_ in (("example1", "linear motion: numeric vs closed-form F~_X"),
                        ("example2", "exponential motion: strain curves"),
                        ("sweep", "strain table for any configured motion")):
        p = sub.add_parser(name, help=help_)
        p.add_argument("--config", metavar="PATH", required=name == "sweep")
        p.add_argument("--out", metavar="PATH", help="CSV destination (default: stdout)")
        p.add_argument("--clamp-boundary", action="store_true",
                       help="truncate intervals at the body box instead of failing")
    d = sub.add_parser("derive", help="one Riesz-Caputo derivative")
    d.add_argument("--function", choices=sorted(FUNCTIONS), default="exp")
    d.add_argument("--t", type=float, required=True)
    d.add_argument("--alpha", type=float, required=True)
    d.add_argument("--ell-left", type=float, required=True)
    d.add_argument("--ell-right", type=float, required=True)
    d.add_argument("--m", type=int, default=DEFAULT_M)
    return parser


def _load(args, defaults: ex.ExperimentConfig) -> ex.ExperimentConfig:
    overrides = {"clamp_boundary": True} if args.clamp_boundary else {}
    if args.config:
        return ex.parse_config(args.config, **overrides)
    return defaults.replace(**overrides)


def _emit(rows, row_type, out):
    if out:
        ex.emit_csv(rows, out, row_type)
    else:
        fields = [f for f in row_type.__dataclass_fields__]
        ex.write_csv(rows, sys.stdout, fields)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "derive":
            value = rc_derivative(FUNCTIONS[args.function], args.t, args.ell_left,
                                  args.ell_right, args.alpha, args.m)
            print(format(value, ".17g"))
            return EXIT_OK
        if args.command == "example1":
            cfg = _load(args, ex.EXAMPLE1_DEFAULTS)
            rows = ex.run_example1(cfg, path=False)
            row_type = ex.Example1Row
        elif args.command == "example2":
            cfg = _load(args, ex.EXAMPLE2_DEFAULTS)
            rows = ex.run_example2(cfg, path=False)
            row_type = ex.ResultRow
        else:
            cfg = _load(args, ex.ExperimentConfig())
            rows = ex.run_sweep(cfg, path=False)
            row_type = ex.ResultRow
        _emit(rows, row_type, args.out or cfg.output_path)
    except (ConfigError, OrderError, IntervalError) as exc:
        print(f"fracmech: invalid input: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except (DomainExitError, ArithmeticError, FracmechError) as exc:
        print(f"fracmech: numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    except OSError as exc:
        print(f"fracmech: {exc}", file=sys.stderr)
        return EXIT_INVALID
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
