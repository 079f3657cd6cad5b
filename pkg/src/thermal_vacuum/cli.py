"""Command-line front end: ``sweep``, ``state`` and ``verify``.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 I/O error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import sweep as sweep_mod
from .bogolyubov import SqueezeParams, StateClass
from .errors import DomainError, TruncationError
from .oscillator_core import OscillatorConfig, PhysicalConstants, ThermalContext
from .stochastic_thermo import effective_temperature, planck_energy
from .vacuum_states import (
    energy_balance,
    holistic_influence,
    schrodinger_residual,
    state_from_params,
    state_from_temperature,
    up_product,
)
from .verification import SUITES, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3


def _units(args):
    return PhysicalConstants(args.hbar, args.kb), OscillatorConfig(args.omega)


def _add_units(p):
    p.add_argument("--omega", type=float, default=1.0, help="oscillator angular frequency")
    p.add_argument("--hbar", type=float, default=1.0)
    p.add_argument("--kb", type=float, default=1.0, help="Boltzmann constant")


def _class(value):
    return StateClass[value.upper()]


def build_parser():
    parser = argparse.ArgumentParser(
        prog="thermal-vacuum",
        description="Gaussian vacuum states of an oscillator and the saturated Schrodinger uncertainty relation.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sw = sub.add_parser("sweep", help="tabulate thermal states over a temperature range")
    sw.add_argument("--t-min", type=float, default=0.0)
    sw.add_argument("--t-max", type=float, default=10.0)
    sw.add_argument("--points", type=int, default=11)
    sw.add_argument("--spacing", choices=("linear", "log"), default="linear")
    sw.add_argument("--class", dest="state_class", choices=("scs", "ccs"), default="ccs")
    sw.add_argument("--format", choices=("csv", "json"), default="csv")
    sw.add_argument("--out", default="-", help="output path, '-' for stdout")
    _add_units(sw)

    ver = sub.add_parser("verify", help="run the identity and oracle checks")
    ver.add_argument("suite", nargs="?", default="all", choices=("all",) + SUITES)
    ver.add_argument("--dim", type=int, default=200, help="Fock truncation")
    ver.add_argument("--tol", type=float, default=None,
                     help="override every upper-bound tolerance")

    stt = sub.add_parser("state", help="print a single-state report")
    stt.add_argument("--tau", type=float)
    stt.add_argument("--phi", type=float)
    stt.add_argument("--temperature", type=float)
    stt.add_argument("--class", dest="state_class", choices=("scs", "ccs"))
    _add_units(stt)
    return parser


def _write(text, out):
    if out == "-":
        sys.stdout.write(text)
        return EXIT_OK
    try:
        Path(out).write_text(text, encoding="utf-8", newline="\n")
    except OSError as exc:
        print(f"error: cannot write {out}: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


def cmd_sweep(args):
    try:
        constants, oscillator = _units(args)
        temps = sweep_mod.temperature_grid(args.t_min, args.t_max, args.points, args.spacing)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    cls = _class(args.state_class)
    rows = sweep_mod.sweep(temps, cls, constants, oscillator)
    if args.format == "csv":
        text = sweep_mod.to_csv(rows)
    else:
        text = sweep_mod.to_json(rows, cls, oscillator.omega, constants.hbar, constants.k_boltzmann)
    return _write(text, args.out)


def cmd_verify(args):
    try:
        report = run_suite(args.suite, dim=args.dim, tol=args.tol)
    except TruncationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    print(report.format())
    return EXIT_OK if report.passed else EXIT_FAIL


def _state_card(s, ctx=None):
    bal = energy_balance(s)
    lines = [
        f"class                 {s.state_class.value}",
        f"tau                   {s.params.tau:.10g}",
        f"phi                   {s.params.phi:.10g}",
        f"beta                  {s.beta:.10g}",
        f"var_q                 {s.var_q:.10g}",
        f"var_p                 {s.var_p:.10g}",
        f"cov                   {s.cov:.10g}",
        f"up_product            {up_product(s):.10g}",
        f"influence_J           {holistic_influence(s):.10g}",
        f"schrodinger_residual  {schrodinger_residual(s):.3e}",
        f"mean_system_energy    {bal.mean_system:.10g}",
        f"mean_influence_energy {bal.mean_influence:.10g}",
        f"energy_residual       {bal.residual:.3e}",
    ]
    if ctx is not None:
        lines[0:0] = [f"T                     {ctx.temperature:.10g}", f"x                     {ctx.x:.10g}"]
        lines += [
            f"planck_energy         {planck_energy(ctx):.10g}",
            f"t_effective           {effective_temperature(ctx).value:.10g}",
        ]
    return "\n".join(lines) + "\n"


def cmd_state(args):
    by_params = args.tau is not None or args.phi is not None
    by_temp = args.temperature is not None or args.state_class is not None
    if by_params == by_temp:
        print("error: give either --tau/--phi or --temperature/--class", file=sys.stderr)
        return EXIT_USAGE
    try:
        constants, oscillator = _units(args)
        if by_params:
            if args.tau is None:
                raise DomainError("--tau is required with --phi")
            params = SqueezeParams(args.tau, args.phi or 0.0)
            print(_state_card(state_from_params(params, oscillator.omega, constants.hbar)), end="")
        else:
            if args.temperature is None or args.state_class is None:
                raise DomainError("--temperature and --class go together")
            ctx = ThermalContext.from_temperature(args.temperature, constants, oscillator)
            s = state_from_temperature(ctx, _class(args.state_class))
            print(_state_card(s, ctx), end="")
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK


def main(argv=None):
    args = build_parser().parse_args(argv)
    handler = {"sweep": cmd_sweep, "verify": cmd_verify, "state": cmd_state}[args.command]
    return handler(args)


if __name__ == "__main__":
    raise SystemExit(main())
