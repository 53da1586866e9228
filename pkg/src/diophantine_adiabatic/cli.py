"""Command-line front-end.

Subcommands::

    dim     smallest truncation m meeting a norm-defect tolerance
    run     full T-sweep; writes <out>_trajectory.csv and <out>_verdict.json
    oracle  exhaustive search for solutions in {0..bound}^k

``run`` exits 0 for a witness, 1 for no solution within the truncation,
2 for an inconclusive sweep and 3 for invalid input.
"""
from __future__ import annotations

import argparse
import csv
import json
import logging
import sys

from . import fock
from .decision import (Inconclusive, NoSolutionWithinTruncation, SolvableWithWitness,
                       SweepConfig, Verdict, run_algorithm)
from .diophantine import brute_force_search, parse
from .errors import DiophantineSyntaxError, NegativeExponent, ValueOverflow
from .hamiltonian import ProblemSetup

log = logging.getLogger(__name__)

EXIT_CODES = {SolvableWithWitness: 0, NoSolutionWithinTruncation: 1, Inconclusive: 2}
EXIT_USAGE = 3
PROBABILITY_COLUMN_LIMIT = 16

RUN_DEFAULTS = {
    "dt": 1.0, "t_initial": 5.0, "t_increment": 5.0, "t_max": 200.0,
    "midpoint": True, "out": "run",
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def format_tuple(t) -> str:
    return "(" + ",".join(str(n) for n in t) + ")"


def parse_zs(text) -> list[complex]:
    if isinstance(text, (int, float, complex)):
        return [complex(text)]
    if isinstance(text, list):
        return [complex(v) for v in text]
    try:
        return [complex(part.strip().replace(" ", "")) for part in str(text).split(",")]
    except ValueError as exc:
        raise UsageError(f"bad --z value {text!r}") from exc


def _z_json(z: complex):
    return z.real if z.imag == 0 else [z.real, z.imag]


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="diophantine-adiabatic",
                     description="Adiabatic ground-state search for Diophantine equations.")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("dim", help="truncation needed for a coherent label")
    p.add_argument("--z", required=True)
    p.add_argument("--epsilon", type=float, required=True)

    p = sub.add_parser("oracle", help="brute-force solutions in {0..bound}^k")
    p.add_argument("--eq", required=True)
    p.add_argument("--bound", type=int, required=True)

    # defaults are None so that config-file values can fill the gaps
    p = sub.add_parser("run", help="run the adiabatic decision sweep")
    p.add_argument("--config", help="JSON file with any of the run options")
    p.add_argument("--eq")
    p.add_argument("--z")
    p.add_argument("--m", type=int)
    p.add_argument("--epsilon", type=float)
    p.add_argument("--dt", type=float)
    p.add_argument("--t-initial", dest="t_initial", type=float)
    p.add_argument("--t-increment", dest="t_increment", type=float)
    p.add_argument("--t-max", dest="t_max", type=float)
    p.add_argument("--no-midpoint", dest="midpoint", action="store_false", default=None)
    p.add_argument("--out")
    return parser


def resolve_run_options(args: argparse.Namespace) -> dict:
    """Merge defaults, then the config file, then explicit flags."""
    options = dict(RUN_DEFAULTS)
    if args.config:
        try:
            with open(args.config, encoding="utf-8") as fh:
                from_file = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise UsageError(f"cannot read config {args.config}: {exc}") from exc
        unknown = set(from_file) - set(RUN_DEFAULTS) - {"eq", "z", "m", "epsilon"}
        if unknown:
            raise UsageError(f"unknown config keys: {sorted(unknown)}")
        options.update(from_file)
    for key in ("eq", "z", "m", "epsilon", *RUN_DEFAULTS):
        value = getattr(args, key, None)
        if value is not None:
            options[key] = value
    if args.m is not None and args.epsilon is None:
        options.pop("epsilon", None)
    if args.epsilon is not None and args.m is None:
        options.pop("m", None)

    if not options.get("eq"):
        raise UsageError("--eq is required")
    if options.get("z") is None:
        raise UsageError("--z is required")
    if (options.get("m") is None) == (options.get("epsilon") is None):
        raise UsageError("give exactly one of --m and --epsilon")
    return options


def write_trajectory_csv(path: str, verdict: Verdict, setup: ProblemSetup) -> None:
    with_probs = setup.total_dim <= PROBABILITY_COLUMN_LIMIT
    header = ["T", "step", "t", "p_max", "argmax_tuple", "norm_drift"]
    if with_probs:
        header += ["p" + format_tuple(setup.index_to_tuple(i)) for i in range(setup.total_dim)]
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, lineterminator="\r\n")
        writer.writerow(header)
        for T, traj in verdict.trajectories.items():
            probs = traj.probabilities() if with_probs else None
            for j in range(1, traj.n_steps + 1):
                row = [repr(float(T)), j, repr(float(traj.times[j])), repr(float(traj.p_max[j])),
                       format_tuple(traj.argmax[j]), repr(float(traj.norm_drift[j]))]
                if probs is not None:
                    row += [repr(float(p)) for p in probs[j]]
                writer.writerow(row)


def verdict_report(verdict: Verdict, setup: ProblemSetup, options: dict) -> dict:
    outcome = verdict.outcome
    report = {
        "outcome": type(outcome).__name__,
        "equation": options["eq"],
        "variables": list(setup.equation.variables),
        "witness": None, "ground_tuple": None, "reason": None,
        "crossing_T": verdict.crossing_T,
        "final_p_max": verdict.final_p_max,
        "degenerate": verdict.degenerate,
        "m": setup.m,
        "z": [_z_json(z) for z in setup.zs],
        "epsilon_defect": max((fock.norm_defect(z, setup.m) for z in setup.zs), default=0.0),
        "dt": options["dt"],
        "midpoint_rule": options["midpoint"],
    }
    if isinstance(outcome, SolvableWithWitness):
        report["witness"] = list(outcome.witness)
    elif isinstance(outcome, NoSolutionWithinTruncation):
        report["ground_tuple"] = list(outcome.ground)
        report["bound"] = outcome.bound
    else:
        report["reason"] = outcome.reason
    return report


def cmd_dim(args) -> int:
    (z,) = parse_zs(args.z)[:1]
    if not args.epsilon > 0:
        raise UsageError("--epsilon must be positive")
    m = fock.truncation_dimension(z, args.epsilon)
    print(f"m = {m}")
    print(f"defect = {fock.norm_defect(z, m):.6e}")
    return 0


def cmd_oracle(args) -> int:
    eq = parse(args.eq)
    if args.bound < 0:
        raise UsageError("--bound must be non-negative")
    solutions = brute_force_search(eq, args.bound)
    if not solutions:
        print("(none)")
    for s in solutions:
        print(format_tuple(s))
    return 0


def cmd_run(args) -> int:
    options = resolve_run_options(args)
    eq = parse(options["eq"])
    zs = parse_zs(options["z"])
    if len(zs) not in (1, eq.k):
        raise UsageError(f"--z needs 1 or {eq.k} values, got {len(zs)}")
    if options.get("epsilon") is not None:
        if not options["epsilon"] > 0:
            raise UsageError("--epsilon must be positive")
        m = max(fock.truncation_dimension(z, options["epsilon"]) for z in zs)
    else:
        m = int(options["m"])
    try:
        setup = ProblemSetup(eq, m, zs)
        sweep = SweepConfig(options["t_initial"], options["t_increment"], options["t_max"],
                            options["dt"], bool(options["midpoint"]))
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    log.info("k=%d m=%d dim=%d zs=%s", setup.k, m, setup.total_dim, setup.zs)

    verdict = run_algorithm(setup, sweep)
    prefix = options["out"]
    write_trajectory_csv(f"{prefix}_trajectory.csv", verdict, setup)
    report = verdict_report(verdict, setup, options)
    with open(f"{prefix}_verdict.json", "w", encoding="utf-8") as fh:
        json.dump(report, fh, indent=2)
        fh.write("\n")

    print(f"{report['outcome']}", end="")
    if report["witness"] is not None:
        print(f" witness={format_tuple(report['witness'])}", end="")
    if report["ground_tuple"] is not None:
        print(f" ground={format_tuple(report['ground_tuple'])} bound={m}", end="")
    if report["reason"] is not None:
        print(f" ({report['reason']})", end="")
    print(f" crossing_T={verdict.crossing_T} p_max={verdict.final_p_max:.4f}")
    return EXIT_CODES[type(verdict.outcome)]


COMMANDS = {"dim": cmd_dim, "oracle": cmd_oracle, "run": cmd_run}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return COMMANDS[args.command](args)
    except (UsageError, DiophantineSyntaxError, NegativeExponent, ValueOverflow) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except Exception as exc:  # noqa: BLE001
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_USAGE + 1


if __name__ == "__main__":
    sys.exit(main())
