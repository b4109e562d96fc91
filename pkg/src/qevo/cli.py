"""Command-line interface.

    qevo scenario <id> [--steps N] [--samples N] [--seed S] [--out DIR] [--format csv|json]
    qevo build optimal|suboptimal --state-a F --state-b F [--delta-e X | --delta D --energy E]
    qevo analyze-gate --file F [--samples N] [--seed S]

Times are reported in units of ħ/E and energies in units of E. Exit status is
0 on success, 2 on invalid input or a domain error, 3 on an I/O failure.
"""
import argparse
import os
import sys
from pathlib import Path

import numpy as np

from . import io
from .errors import QevoError
from .gates import analyze_propagator
from .geometry import geometry_report
from .hamiltonians import build_optimal, build_suboptimal
from .scenarios import run_scenario, write_series_csv

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_IO = 3


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _default_seed():
    raw = os.environ.get("QEVO_SEED")
    if raw is None:
        return 0
    try:
        return int(raw)
    except ValueError:
        raise _UsageError(f"QEVO_SEED must be an integer, got {raw!r}") from None


def _positive(kind):
    def parse(text):
        try:
            value = kind(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"invalid value {text!r}") from None
        if value <= 0:
            raise argparse.ArgumentTypeError(f"must be positive, got {text}")
        return value

    return parse


def build_parser():
    p = _Parser(prog="qevo", description="Entanglement along stationary two-qubit evolutions.")
    sub = p.add_subparsers(dest="command", required=True)

    sc = sub.add_parser("scenario", help="reproduce a named evolution")
    sc.add_argument("id")
    sc.add_argument("--steps", type=_positive(int), default=1024)
    sc.add_argument("--samples", type=int, default=0, help="Monte Carlo samples for the final propagator")
    sc.add_argument("--seed", type=int, default=None)
    sc.add_argument("--out", type=Path, default=None)
    sc.add_argument("--format", choices=("csv", "json"), default="csv")
    sc.add_argument("--energy-scale", type=_positive(float), default=1.0)
    sc.add_argument("--hbar", type=_positive(float), default=1.0)

    b = sub.add_parser("build", help="build a Hamiltonian joining two states")
    b.add_argument("kind", choices=("optimal", "suboptimal"))
    b.add_argument("--state-a", type=Path, required=True)
    b.add_argument("--state-b", type=Path, required=True)
    b.add_argument("--delta-e", type=_positive(float), default=None)
    b.add_argument("--delta", type=_positive(float), default=None)
    b.add_argument("--energy", type=_positive(float), default=1.0)

    g = sub.add_parser("analyze-gate", help="entangling analysis of a two-qubit unitary")
    g.add_argument("--file", type=Path, required=True)
    g.add_argument("--samples", type=int, default=100_000)
    g.add_argument("--seed", type=int, default=None)
    return p


def _series_dict(series, t_unit):
    out = {
        "t": np.asarray(series.times) / t_unit,
        "concurrence": series.concurrence,
        "yukalov": series.yukalov,
    }
    if series.zanardi is not None:
        out["zanardi"] = series.zanardi
    out["c_vector"] = [list(c) for c in series.c_vectors]
    return out


def cmd_scenario(args, out):
    seed = _default_seed() if args.seed is None else args.seed
    report = run_scenario(
        args.id,
        n_steps=args.steps,
        energy=args.energy_scale,
        hbar=args.hbar,
        n_samples=args.samples or None,
        seed=seed,
    )
    text = io.dumps(report.to_dict())
    if args.out is not None:
        args.out.mkdir(parents=True, exist_ok=True)
        (args.out / "report.json").write_text(text)
        t_unit = args.hbar / args.energy_scale
        if args.format == "csv":
            write_series_csv(report.series, args.out / "series.csv", t_unit)
        else:
            (args.out / "series.json").write_text(io.dumps(_series_dict(report.series, t_unit)))
    out.write(text)
    return EXIT_OK


def cmd_build(args, out):
    a = io.load_state(args.state_a)
    b = io.load_state(args.state_b)
    if args.kind == "optimal":
        if args.delta_e is None:
            raise _UsageError("build optimal requires --delta-e")
        setup = build_optimal(a, b, args.delta_e)
    else:
        if args.delta is None:
            raise _UsageError("build suboptimal requires --delta")
        setup = build_suboptimal(a, b, args.energy, args.delta)
    geometry = geometry_report(setup.hamiltonian, setup.A, setup.B, setup.travel_time)
    out.write(
        io.dumps(
            {
                "kind": args.kind,
                "hamiltonian": io.operator_to_json(setup.hamiltonian),
                "travel_time": setup.travel_time,
                "params": setup.params,
                "geometry": geometry.to_dict(),
            }
        )
    )
    return EXIT_OK


def cmd_analyze_gate(args, out):
    u = io.load_operator(args.file)
    seed = _default_seed() if args.seed is None else args.seed
    analysis = analyze_propagator(u, n_samples=args.samples or None, seed=seed)
    out.write(io.dumps(analysis.to_dict()))
    return EXIT_OK


_COMMANDS = {"scenario": cmd_scenario, "build": cmd_build, "analyze-gate": cmd_analyze_gate}


def _one_line(exc):
    return " ".join(str(exc).split()) or type(exc).__name__


def main(argv=None, out=None, err=None):
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        return _COMMANDS[args.command](args, out)
    except _UsageError as exc:
        err.write(f"error: {_one_line(exc)}\n")
        return EXIT_INVALID
    except OSError as exc:
        err.write(f"error: {_one_line(exc)}\n")
        return EXIT_IO
    except (QevoError, ValueError, ArithmeticError) as exc:
        err.write(f"error: {type(exc).__name__}: {_one_line(exc)}\n")
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
