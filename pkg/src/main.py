import json
import logging
from pathlib import Path
from typing import List, Optional

import typer
from rich import print as rprint
from rich.console import Console
from rich.table import Table

from src.config import setup_logging
from src.core.errors import InputFileError, PauliMinimaxError
from src.core.exactnum import rat_render
from src.core.minimax import analyze_many, full_report
from src.core.models import DiscriminationReport, OutputFormat
from src.oracle import unitary_bayes_risk, unitary_minimax_risk
from src.oracle.helstrom import minimax_states
from src.utils.io import load_pair_file, load_state_file, write_atomic
from src.utils.sweep import write_sweep_csv
from src.utils.verification import run_verification

app = typer.Typer(help="Minimax discrimination of Pauli channels")

logger = logging.getLogger(__name__)
err_console = Console(stderr=True)

EXIT_INVARIANT = 1
EXIT_INPUT = 2
EXIT_OUTPUT = 3


def _fail_input(error: Exception) -> None:
    err_console.print(f"[bold red]:x: {error}[/bold red]")
    raise typer.Exit(code=EXIT_INPUT)


def _fail_analysis(error: PauliMinimaxError) -> None:
    err_console.print(f"[bold red]:x: Analysis failed: {error}[/bold red]")
    raise typer.Exit(code=EXIT_INVARIANT)


def _fail_output(path: Path, error: OSError) -> None:
    err_console.print(f"[bold red]:x: Cannot write {path}: {error}[/bold red]")
    raise typer.Exit(code=EXIT_OUTPUT)


@app.callback()
def main(
    log_level: str = typer.Option(
        "WARNING", "--log-level", help="Logging level (DEBUG, INFO, WARNING, ...)."
    ),
):
    """Exact minimax risks for two Pauli channels, with and without ancilla."""
    setup_logging(log_level)


def _render_text(report: DiscriminationReport) -> None:
    console = Console()
    title = report.label or "channel pair"
    rprint(f"[bold cyan]Minimax analysis of {title}[/bold cyan]")

    table = Table(title="Breakpoints (sorted)")
    table.add_column("alpha", justify="right")
    table.add_column("Pauli")
    table.add_column("p_alpha", justify="right")
    table.add_column("t_alpha", justify="right")
    for index, p_alpha, t_alpha in zip(
        report.sorted_indices, report.breakpoints, report.slopes
    ):
        table.add_row(
            str(index),
            "IXYZ"[index],
            rat_render(p_alpha) if p_alpha is not None else "-",
            rat_render(t_alpha),
        )
    console.print(table)

    risks = Table(title="Minimax risks")
    risks.add_column("input")
    risks.add_column("risk", justify="right")
    risks.add_column("worst prior", justify="right")
    risks.add_row(
        "entangled",
        f"{rat_render(report.R_M)} ({float(report.R_M):.12g})",
        rat_render(report.p_star),
    )
    risks.add_row(
        "single qubit",
        f"{rat_render(report.R_M_prime)} ({float(report.R_M_prime):.12g})",
        rat_render(report.p_star_prime),
    )
    console.print(risks)

    case = report.case
    rprint(f"Case: [bold]{case.name}[/bold]  {case.detail}")
    rprint(f"Verdict: [bold]{case.verdict.value}[/bold]")
    if report.entanglement_strictly_helps:
        rprint("[yellow]Entanglement strictly lowers the minimax risk.[/yellow]")
    else:
        rprint(
            "[green]A single-qubit input already reaches the entangled "
            "minimax risk.[/green]"
        )

    rprint("Optimal single-qubit inputs:")
    for state in report.optimal_inputs_no_ancilla:
        nx, ny, nz = state.n
        rprint(f"  n = ({nx:+.12f}, {ny:+.12f}, {nz:+.12f})")
    if report.mixing_weight is not None:
        rprint(f"  mixing tan^2 = {rat_render(report.mixing_weight)}")
    if not report.optimal_inputs_unique:
        rprint(
            "[yellow]  three curves meet at the worst prior; "
            "list not proven complete[/yellow]"
        )
    rprint(f"Optimal entangled input: {report.optimal_input_entangled}")


@app.command(name="analyze")
def analyze(
    input_file: Path = typer.Argument(..., help="Channel pair JSON file."),
    output_format: OutputFormat = typer.Option(
        OutputFormat.JSON, "--format", "-f", help="Output format."
    ),
):
    """
    Minimax risks, case classification and optimal inputs for a channel pair.
    """
    try:
        spec, pair = load_pair_file(input_file)
    except InputFileError as error:
        _fail_input(error)
    try:
        report = full_report(pair, label=spec.label)
    except PauliMinimaxError as error:
        _fail_analysis(error)
    if output_format is OutputFormat.JSON:
        typer.echo(report.model_dump_json(indent=2))
    else:
        _render_text(report)


@app.command(name="sweep")
def sweep(
    input_file: Path = typer.Argument(..., help="Channel pair JSON file."),
    points: int = typer.Option(
        201, "--points", "-n", min=2, help="Uniform grid size."
    ),
    out: Path = typer.Option(..., "--out", "-o", help="CSV file to write."),
):
    """
    Tabulate the entangled and single-qubit risk curves as CSV.
    """
    try:
        _, pair = load_pair_file(input_file)
    except InputFileError as error:
        _fail_input(error)
    try:
        rows = write_sweep_csv(pair, points, out)
    except OSError as error:
        _fail_output(out, error)
    rprint(f":white_check_mark: Wrote {rows} rows to [italic]{out}[/italic]")


@app.command(name="verify")
def verify(
    trials: int = typer.Option(100, "--trials", "-t", min=1, help="Random pairs."),
    seed: int = typer.Option(42, "--seed", "-s", help="Random seed."),
    pair_file: Optional[Path] = typer.Option(
        None, "--pair", help="Pair file used as the first trial."
    ),
    suites: Optional[List[str]] = typer.Option(
        None, "--suite", help="Run only this suite (repeat for several)."
    ),
):
    """
    Run the oracle-equivalence and invariant suites on seeded random pairs.
    """
    pair = None
    if pair_file is not None:
        try:
            _, pair = load_pair_file(pair_file)
        except InputFileError as error:
            _fail_input(error)

    try:
        summary = run_verification(trials, seed, pair, suites or None)
    except ValueError as error:
        raise typer.BadParameter(str(error), param_hint="--suite") from error

    table = Table(title=f"Verification (trials={trials}, seed={seed})")
    table.add_column("suite")
    table.add_column("passed", justify="right")
    table.add_column("max deviation", justify="right")
    for suite in summary.suites:
        status = "green" if suite.passed else "red"
        table.add_row(
            suite.name,
            f"[{status}]{suite.checks - suite.failures}/{suite.checks}[/{status}]",
            f"{suite.max_deviation:.3e}",
        )
    Console().print(table)
    rprint(f"Max observed deviation: {summary.max_deviation:.3e}")

    if not summary.passed:
        for suite in summary.suites:
            if suite.first_failure is not None:
                err_console.print(
                    f"[bold red]{suite.name}: {suite.failure_message}[/bold red]"
                )
                typer.echo(suite.first_failure.model_dump_json(indent=2))
        raise typer.Exit(code=EXIT_INVARIANT)


@app.command(name="states")
def states(
    input_file: Path = typer.Argument(..., help="JSON file with rho1 and rho2."),
):
    """
    Minimax discrimination of two density matrices with an equalizer measurement.
    """
    try:
        _, rho1, rho2 = load_state_file(input_file)
    except InputFileError as error:
        _fail_input(error)
    try:
        result = minimax_states(rho1, rho2)
    except PauliMinimaxError as error:
        _fail_analysis(error)
    rprint(f"R_M = {result.value:.12g}")
    rprint(f"p_star = {result.p_star:.12g}")
    for name, effect in (("B1", result.povm.B1), ("B2", result.povm.B2)):
        rprint(f"{name} =")
        for row in effect.entries:
            cells = (f"{value.real:+.9f}{value.imag:+.9f}j" for value in row)
            rprint("  " + "  ".join(cells))
    rprint(f"Equalization residual |Tr[rho1 B2] - Tr[rho2 B1]| = {result.residual:.3e}")


@app.command(name="batch")
def batch(
    input_dir: Path = typer.Argument(..., help="Directory of pair JSON files."),
    out_dir: Path = typer.Option(..., "--out-dir", help="Directory for reports."),
    workers: int = typer.Option(1, "--workers", "-w", min=1, help="Worker threads."),
):
    """
    Analyze every *.json pair file in a directory, one report file each.
    """
    if not input_dir.is_dir():
        _fail_input(InputFileError(f"{input_dir}: not a directory"))
    files = sorted(input_dir.glob("*.json"))
    loaded = []
    for path in files:
        try:
            loaded.append((path, *load_pair_file(path)))
        except InputFileError as error:
            _fail_input(error)

    try:
        reports = analyze_many(
            [pair for _, _, pair in loaded],
            labels=[spec.label or path.stem for path, spec, _ in loaded],
            workers=workers,
        )
    except PauliMinimaxError as error:
        _fail_analysis(error)
    try:
        out_dir.mkdir(parents=True, exist_ok=True)
        for (path, _, _), report in zip(loaded, reports):
            target = out_dir / f"{path.stem}.report.json"
            write_atomic(target, report.model_dump_json(indent=2))
    except OSError as error:
        _fail_output(out_dir, error)
    rprint(
        f":white_check_mark: Wrote {len(reports)} reports to [italic]{out_dir}[/italic]"
    )


def _parse_eigenvalue(text: str) -> complex:
    try:
        real, imag = (float(part) for part in text.split(","))
    except ValueError as error:
        raise typer.BadParameter(f"expected RE,IM, got {text!r}") from error
    return complex(real, imag)


@app.command(name="unitary")
def unitary(
    eigenvalues: List[str] = typer.Option(
        ..., "--eigenvalue", "-e", help="Eigenvalue of U^dagger V as RE,IM (repeat)."
    ),
    prior: float = typer.Option(
        0.5, "--prior", "-p", help="Prior of the first unitary."
    ),
):
    """
    Bayes and minimax risk for discriminating two unitaries.
    """
    values = [_parse_eigenvalue(text) for text in eigenvalues]
    try:
        bayes = unitary_bayes_risk(values, prior)
        minimax = unitary_minimax_risk(values)
    except (PauliMinimaxError, ValueError) as error:
        _fail_input(error)
    payload = {"prior": prior, "bayes_risk": bayes, "minimax_risk": minimax}
    typer.echo(json.dumps(payload))


if __name__ == "__main__":
    app()
