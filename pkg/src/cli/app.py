"""Command-line front end: solves, spectra, scans, Euler checks, perturbations, self-checks.

Every command prints exactly one JSON envelope (or a CSV table with --out csv)
on standard output; logs and summaries go to standard error.

Exit codes: 0 success, 2 invalid input, 3 numerical failure.
"""

import argparse
import logging
import sys
import time

from importlib.metadata import PackageNotFoundError, version
from typing import Any, Callable, Dict, List, Optional, Sequence, TypeVar

import numpy as np

from pydantic import BaseModel, Field, ValidationError

from src.cli.checks import run_checks
from src.cli.settings import RunSettings
from src.core import InvalidInputError, MassVector, NormalizationKind, NumericalError, central_residual, split_items
from src.euler3 import euler_configuration, euler_quintic, euler_root, euler_unit_configuration, euler_value
from src.permutations import Ordering, identity, parse_ordering
from src.solver import SolverOptions, minimize_W, moulton_configuration
from src.spectrum import (
    SamplerSpec,
    compute_spectrum,
    perturb_experiment,
    perturbation_csv,
    scan_csv,
    scan_masses,
    spectrum_csv,
    theorem_witness,
    to_json,
    to_payload,
)
from src.utils import explorer


logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_NUMERICAL = 3

SOLVER_AGREEMENT_TOL = 1e-8

T = TypeVar("T")


class OutputEnvelope(BaseModel):
    """The single document a command writes to standard output."""

    command: str
    inputs: Dict[str, Any] = Field(default_factory=dict, description="Echo of the parsed flags")
    results: Any = None
    versions: Dict[str, Any] = Field(default_factory=dict)
    wall_time_seconds: float = 0.0


class CommandOutput(BaseModel):
    """What a command hands back: the JSON results and, when tabular, its CSV rendering."""

    results: Any
    csv: Optional[str] = None


def _artifact_version() -> str:
    try:
        return version("moulton")
    except PackageNotFoundError:
        return "0.1.0"


def versions(settings: RunSettings) -> Dict[str, Any]:
    return {
        "moulton": _artifact_version(),
        "default_gradient_tolerance": SolverOptions().gradient_tolerance,
        "default_distinct_tolerance": settings.distinct_tolerance,
    }


def _flag(name: str, parse: Callable[[str], T], text: str) -> T:
    """Parse a flag value, naming the flag in the error and keeping its error class."""
    try:
        return parse(text)
    except InvalidInputError as e:
        raise type(e)(f"{name}: {e}") from e
    except (ValueError, ValidationError) as e:
        raise InvalidInputError(f"{name}: {e}") from e


def _floats(text: str) -> List[float]:
    return [float(item) for item in split_items(text)]


def _solver_options(args: argparse.Namespace) -> SolverOptions:
    values = {}
    if getattr(args, "tol", None) is not None and args.command == "solve":
        values["gradient_tolerance"] = args.tol
    if getattr(args, "max_iter", None) is not None:
        values["max_iterations"] = args.max_iter
    try:
        return SolverOptions(**values)
    except ValidationError as e:
        raise InvalidInputError(f"--tol/--max-iter: {e}") from e


def _distinct_tol(args: argparse.Namespace, settings: RunSettings) -> float:
    tol = settings.distinct_tolerance if args.tol is None else args.tol
    if not tol > 0:
        raise InvalidInputError(f"--tol: must be positive, got {tol}")
    return tol


def cmd_solve(args: argparse.Namespace, settings: RunSettings) -> CommandOutput:
    masses = _flag("--masses", MassVector.parse, args.masses)
    sigma = _flag("--order", parse_ordering, args.order)
    if sigma.size != masses.size:
        raise InvalidInputError(f"--order: has {sigma.size} bodies but --masses has {masses.size}")
    opts = _solver_options(args)

    if args.normalization == NormalizationKind.UNIT_LAMBDA.value:
        solution = minimize_W(masses, sigma, opts)
    else:
        solution = moulton_configuration(masses, sigma, opts)
    explorer.show_solution(solution)

    results = to_payload(solution)
    results["central_residual"] = central_residual(solution.positions, masses)
    return CommandOutput(results=results)


def cmd_spectrum(args: argparse.Namespace, settings: RunSettings) -> CommandOutput:
    masses = _flag("--masses", MassVector.parse, args.masses)
    if args.parallel < 1:
        raise InvalidInputError(f"--parallel: must be at least 1, got {args.parallel}")
    report = compute_spectrum(masses, _solver_options(args), _distinct_tol(args, settings), args.parallel)
    explorer.show_spectrum(report)
    return CommandOutput(results=to_payload(report), csv=spectrum_csv(report))


def cmd_scan(args: argparse.Namespace, settings: RunSettings) -> CommandOutput:
    if args.samples < 1:
        raise InvalidInputError(f"--samples: must be at least 1, got {args.samples}")
    sampler = _flag("--sampler", lambda kind: SamplerSpec(kind=kind), args.sampler)
    report = scan_masses(
        args.n,
        args.samples,
        args.seed,
        sampler,
        _solver_options(args),
        _distinct_tol(args, settings),
        max(1, args.parallel),
    )
    explorer.show_scan(report)
    return CommandOutput(results=to_payload(report), csv=scan_csv(report))


def cmd_euler3(args: argparse.Namespace, settings: RunSettings) -> CommandOutput:
    masses = _flag("--masses", MassVector.parse, args.masses)
    if masses.size != 3:
        raise InvalidInputError(f"--masses: exactly three masses are required, got {masses.size}")

    quintic = euler_quintic(masses)
    root = euler_root(masses)
    unit = euler_unit_configuration(masses)
    solved = moulton_configuration(masses, identity(3))
    deviation = float(np.max(np.abs(unit - solved.positions)))
    agreement = "pass" if deviation <= SOLVER_AGREEMENT_TOL else "fail"
    if agreement == "fail":
        logger.warning(f"Euler configuration and solver differ by {deviation:.3e}")

    results = {
        "coefficients": list(quintic.coefficients),
        "root": root,
        "residual": quintic(root),
        "configuration": euler_configuration(masses).tolist(),
        "unit_configuration": unit.tolist(),
        "critical_value": euler_value(masses),
        "solver_critical_value": solved.critical_value,
        "solver_deviation": deviation,
        "solver_agreement": agreement,
    }
    explorer.console.print(f"root {root!r}, solver-agreement: {agreement}")
    return CommandOutput(results=results)


def cmd_perturb(args: argparse.Namespace, settings: RunSettings) -> CommandOutput:
    base = _flag("--base-masses", MassVector.parse, args.base_masses)
    sigma0 = _flag("--base-order", parse_ordering, args.base_order)
    tau = _flag("--ext-order", parse_ordering, args.ext_order)
    extra = _flag("--extra-masses", _floats, args.extra_masses)
    epsilons = _flag("--epsilons", _floats, args.epsilons)

    table = perturb_experiment(base, sigma0, tau, extra, epsilons, _solver_options(args))
    explorer.show_perturbation(table)
    results = to_payload(table)
    results["final_gap"] = table.final_gap
    return CommandOutput(results=results, csv=perturbation_csv(table))


def cmd_witness(args: argparse.Namespace, settings: RunSettings) -> CommandOutput:
    sigma = _flag("--sigma", parse_ordering, args.sigma)
    tau = _flag("--tau", parse_ordering, args.tau)
    epsilons = _flag("--epsilons", _floats, args.epsilons)

    plan = theorem_witness(sigma, tau, args.mu)
    outcome = plan.run(epsilons, _solver_options(args), _distinct_tol(args, settings))
    explorer.show_witness(outcome)
    return CommandOutput(results={"plan": to_payload(plan), "outcome": to_payload(outcome)})


def cmd_check(args: argparse.Namespace, settings: RunSettings) -> CommandOutput:
    report = run_checks(quick=args.quick)
    explorer.show_checks(report)
    results = to_payload(report)
    results["total_assertions"] = report.total_assertions
    return CommandOutput(results=results)


COMMANDS: Dict[str, Callable[[argparse.Namespace, RunSettings], CommandOutput]] = {
    "solve": cmd_solve,
    "spectrum": cmd_spectrum,
    "scan": cmd_scan,
    "euler3": cmd_euler3,
    "perturb": cmd_perturb,
    "witness": cmd_witness,
    "check": cmd_check,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="moulton", description="Collinear central configurations of the N-body problem")
    parser.add_argument("--log-level", default=None, help="DEBUG, INFO, WARNING, ERROR or CRITICAL")
    sub = parser.add_subparsers(dest="command", required=True)

    solve = sub.add_parser("solve", help="Solve one ordering cone")
    solve.add_argument("--masses", required=True, help="Comma-separated masses, e.g. 1,9,1")
    solve.add_argument("--order", required=True, help="Comma-separated 1-based bodies left to right, e.g. 1,2,3")
    solve.add_argument(
        "--normalization",
        choices=[kind.value for kind in NormalizationKind],
        default=NormalizationKind.UNIT_INERTIA.value,
    )
    solve.add_argument("--tol", type=float, default=None, help="Relative gradient tolerance")
    solve.add_argument("--max-iter", type=int, default=None)

    spectrum = sub.add_parser("spectrum", help="Critical values of every reversal class")
    spectrum.add_argument("--masses", required=True)
    spectrum.add_argument("--tol", type=float, default=None, help="Relative distinctness tolerance")
    spectrum.add_argument("--parallel", type=int, default=1, help="Worker processes")
    spectrum.add_argument("--out", choices=["json", "csv"], default="json")

    scan = sub.add_parser("scan", help="Random mass vectors and their distinct-value counts")
    scan.add_argument("--n", type=int, required=True)
    scan.add_argument("--samples", type=int, required=True)
    scan.add_argument("--seed", type=int, required=True)
    scan.add_argument("--sampler", default="log-uniform", help="log-uniform, equal or two-equal")
    scan.add_argument("--tol", type=float, default=None)
    scan.add_argument("--parallel", type=int, default=1)
    scan.add_argument("--out", choices=["json", "csv"], default="json")

    euler3 = sub.add_parser("euler3", help="Euler's quintic for three masses")
    euler3.add_argument("--masses", required=True)

    perturb = sub.add_parser("perturb", help="Critical values as extra masses vanish")
    perturb.add_argument("--base-masses", required=True)
    perturb.add_argument("--base-order", required=True)
    perturb.add_argument("--ext-order", required=True)
    perturb.add_argument("--extra-masses", required=True)
    perturb.add_argument("--epsilons", required=True, help="Strictly decreasing, e.g. 1e-1,1e-2,1e-3")
    perturb.add_argument("--out", choices=["json", "csv"], default="json")

    witness = sub.add_parser("witness", help="Experiment separating the critical values of two orderings")
    witness.add_argument("--sigma", required=True)
    witness.add_argument("--tau", required=True)
    witness.add_argument("--mu", type=float, default=9.0)
    witness.add_argument("--epsilons", default="1e-1,1e-2,1e-3,1e-4")
    witness.add_argument("--tol", type=float, default=None)

    check = sub.add_parser("check", help="Run the invariant self-checks")
    check.add_argument("--quick", action="store_true", help="Fewer random points, skip the slow checks")

    return parser


def run(argv: Optional[Sequence[str]] = None, stdout=None) -> int:
    """Parse arguments, run one command and write its output. Returns the exit code."""
    stdout = stdout or sys.stdout
    args = build_parser().parse_args(argv)

    try:
        settings = RunSettings.from_env()
        if args.log_level is not None:
            settings = RunSettings(distinct_tolerance=settings.distinct_tolerance, log_level=args.log_level)
    except ValidationError as e:
        explorer.show_error(e)
        return EXIT_INVALID

    logging.basicConfig(
        level=getattr(logging, settings.log_level),
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        stream=sys.stderr,
    )

    started = time.perf_counter()
    try:
        output = COMMANDS[args.command](args, settings)
    except (InvalidInputError, ValidationError) as e:
        explorer.show_error(e)
        return EXIT_INVALID
    except NumericalError as e:
        explorer.show_error(e)
        return EXIT_NUMERICAL

    if getattr(args, "out", "json") == "csv" and output.csv is not None:
        stdout.write(output.csv)
        return EXIT_OK

    envelope = OutputEnvelope(
        command=args.command,
        inputs={key: value for key, value in vars(args).items() if key != "command"},
        results=output.results,
        versions=versions(settings),
        wall_time_seconds=time.perf_counter() - started,
    )
    stdout.write(to_json(to_payload(envelope)) + "\n")
    return EXIT_OK


def main() -> int:
    return run()


if __name__ == "__main__":
    sys.exit(main())
