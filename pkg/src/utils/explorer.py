"""Human-readable summaries of solutions and reports, printed to standard error."""

from typing import Optional

from rich.console import Console
from rich.markup import escape
from rich.panel import Panel
from rich.table import Table

from src.cli.checks import CheckReport
from src.solver import CentralConfigSolution
from src.spectrum import PerturbationTable, ScanReport, SpectrumReport, WitnessOutcome

console = Console(stderr=True)


def show_solution(solution: CentralConfigSolution, out: Optional[Console] = None) -> None:
    """Print a solved configuration body by body."""
    out = out or console
    table = Table(title=f"Ordering {solution.ordering} ({solution.normalization.value})", show_header=True, header_style="bold magenta")
    table.add_column("Body", style="cyan")
    table.add_column("Mass", style="white")
    table.add_column("Position", style="white")

    for body, (mass, position) in enumerate(zip(solution.masses.masses, solution.configuration), start=1):
        table.add_row(str(body), f"{mass:.6g}", f"{position:.12f}")

    out.print(table)
    out.print(
        f"critical value [bold]{solution.critical_value:.12f}[/bold], lambda {solution.lambda_value:.15f}, "
        f"{solution.iterations} iterations, |grad W| {solution.final_gradient_norm:.2e}"
    )


def show_spectrum(report: SpectrumReport, out: Optional[Console] = None) -> None:
    """Print the critical value of every reversal class, marking the minimum."""
    out = out or console
    table = Table(title=f"Spectrum for masses {report.mass_vector}", show_header=True, header_style="bold magenta")
    table.add_column("Class", style="cyan")
    table.add_column("Critical value", style="white")
    table.add_column("Iterations", style="white")

    for entry in sorted(report.entries, key=lambda e: e.critical_value):
        style = "bold green" if entry.ordering == report.min_class else None
        table.add_row(str(entry.ordering), f"{entry.critical_value:.12f}", str(entry.iterations), style=style)

    out.print(table)
    uniqueness = "[green]unique[/green]" if report.min_is_unique else "[yellow]not unique[/yellow]"
    out.print(f"{report.distinct_count} distinct of {len(report.entries)}; minimum {uniqueness}")


def show_scan(report: ScanReport, out: Optional[Console] = None) -> None:
    """Print the scan summary and any degenerate samples."""
    out = out or console
    out.print(
        Panel(
            f"N = {report.N}, {report.samples} samples, seed {report.seed}, sampler {report.sampler.kind}\n"
            f"full spectrum fraction {report.full_spectrum_fraction:.4f}, incomplete {report.incomplete_samples}",
            style="bold cyan",
        )
    )
    if not report.degenerate_samples:
        return

    table = Table(title="Degenerate samples", show_header=True, header_style="bold magenta")
    table.add_column("Masses", style="cyan")
    table.add_column("Distinct", style="white")
    for sample in report.degenerate_samples:
        table.add_row(str(sample.masses), str(sample.distinct_count))
    out.print(table)


def show_perturbation(table_data: PerturbationTable, out: Optional[Console] = None) -> None:
    """Print the values against epsilon and the limit."""
    out = out or console
    table = Table(
        title=f"{table_data.extended_ordering} -> {table_data.base_ordering}, limit {table_data.limit_value:.12f}",
        show_header=True,
        header_style="bold magenta",
    )
    table.add_column("epsilon", style="cyan")
    table.add_column("value", style="white")
    table.add_column("gap", style="white")

    for eps, value in zip(table_data.epsilons, table_data.values):
        table.add_row(f"{eps:.1e}", f"{value:.12f}", f"{value - table_data.limit_value:.3e}")

    out.print(table)
    if not table_data.monotone:
        out.print("[yellow]distance to the limit is not monotone[/yellow]")


def show_witness(outcome: WitnessOutcome, out: Optional[Console] = None) -> None:
    out = out or console
    for table_data in (outcome.sigma_table, outcome.tau_table):
        if table_data is not None:
            show_perturbation(table_data, out)
    verdict = "[green]separate[/green]" if outcome.limits_separate else "[red]coincide[/red]"
    out.print(f"limits {outcome.sigma_limit:.12f} and {outcome.tau_limit:.12f} {verdict}")
    out.print(f"compared at masses {escape(str(outcome.separating_masses))}")


def show_checks(report: CheckReport, out: Optional[Console] = None) -> None:
    out = out or console
    table = Table(title="Self-checks", show_header=True, header_style="bold magenta")
    table.add_column("Check", style="cyan")
    table.add_column("Assertions", style="white")
    for result in report.checks:
        table.add_row(result.name, str(result.assertions))
    out.print(table)


def show_error(error: Exception, out: Optional[Console] = None) -> None:
    out = out or console
    out.print(f"[red]{type(error).__name__}: {escape(str(error))}[/red]")
