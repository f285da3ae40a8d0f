# this_file: src/cyclab/cli/app.py
"""Unified cyclab CLI application."""

import sys
from pathlib import Path

import fire
from loguru import logger
from rich.console import Console
from rich.table import Table

from ..errors import CyclabError, ManifestError, UnknownSuiteError
from .manifest import load_manifest
from .runner import RunRecord, run
from .suites import SUITES, SuiteResult, list_suites, run_suite

console = Console()

EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_COMPUTATION = 3
EXIT_ACCEPTANCE = 4


class AcceptanceFailure(CyclabError):
    """A suite ran to completion but at least one criterion failed."""

    def __init__(self, result: SuiteResult) -> None:
        failed = [row.criterion for row in result.rows if not row.passed]
        super().__init__(f"Suite {result.name} failed criteria: {', '.join(failed)}")
        self.result = result


def configure_logging(verbose: bool = False) -> None:
    """Route loguru through the rich console."""
    logger.remove()
    logger.add(console.print, format="{message}", level="DEBUG" if verbose else "INFO")


class CyclabCLI:
    """Cyclicity experiments from the command line.

    Args:
        out: Output directory for CSV and JSON files
        threads: Worker threads for scans, sweeps and suites
        tolerance_scale: Multiplies every tolerance (recorded in each run record)
        verbose: Enable debug logging
    """

    def __init__(
        self,
        out: str = "./cyclab-out",
        threads: int = 1,
        tolerance_scale: float = 1.0,
        verbose: bool = False,
    ) -> None:
        self._out = Path(out)
        self._threads = max(1, int(threads))
        self._scale = float(tolerance_scale)
        configure_logging(verbose)

    def run(self, manifest: str) -> RunRecord:
        """Run one experiment manifest (path or inline JSON).

        Args:
            manifest: Path to a manifest JSON file, or the JSON text itself
        """
        parsed = load_manifest(manifest)
        record = run(parsed, self._out, self._threads, self._scale)

        console.print(f"[bold blue]═══ {parsed.kind}: {parsed.name} ═══[/]")
        console.print(f"[bold]Manifest hash:[/] {record.manifest_hash}")
        console.print(f"[bold]Time:[/] {record.timing:.2f}s")
        if self._scale != 1.0:
            console.print(f"[yellow]⚠ Tolerances scaled by {self._scale:g}[/]")
        for warning in record.warnings:
            console.print(f"[yellow]⚠[/] {warning}")
        for path in record.outputs:
            console.print(f"[green]✓[/] {path}")
        return record

    def suite(self, name: str) -> SuiteResult:
        """Run a curated suite and print one row per acceptance criterion.

        Args:
            name: Suite id, see ``list-suites``
        """
        result = run_suite(name, self._out, self._threads, self._scale)

        console.print(f"[bold blue]═══ Suite {name} ═══[/]")
        table = Table(show_header=True, header_style="bold")
        table.add_column("Criterion")
        table.add_column("Title")
        table.add_column("Result", justify="center")
        table.add_column("Detail")
        for row in result.rows:
            mark = "[green]✓[/]" if row.passed else "[red]✗[/]"
            table.add_row(row.criterion, row.title, mark, row.detail)
        console.print(table)
        console.print(f"[bold]Manifests:[/] {len(result.records)}")
        console.print(f"[bold]Time:[/] {result.timing:.1f}s")
        if not result.passed:
            raise AcceptanceFailure(result)
        return result

    def list_suites(self) -> list[str]:
        """List the known suite ids."""
        console.print("[bold blue]═══ Suites ═══[/]")
        for name in list_suites():
            count = len(SUITES[name]())
            console.print(f"  • {name} ({count} criteria)")
        return list_suites()

    def version(self) -> str:
        """Show version information."""
        from .. import __version__

        console.print(f"cyclab version {__version__}")
        return __version__


def exit_code(error: BaseException) -> int:
    """Exit code for an exception escaping a CLI verb."""
    if isinstance(error, AcceptanceFailure):
        return EXIT_ACCEPTANCE
    if isinstance(error, ManifestError | UnknownSuiteError):
        return EXIT_VALIDATION
    return EXIT_COMPUTATION


def main(argv: list[str] | None = None) -> None:
    """Main CLI entry point."""
    try:
        fire.Fire(CyclabCLI, command=argv, serialize=lambda _: None)
    except (CyclabError, ArithmeticError, ValueError) as e:
        code = exit_code(e)
        console.print(f"[red]Error:[/] {e}")
        logger.error(f"cyclab failed with exit code {code}: {e}")
        sys.exit(code)
    sys.exit(EXIT_OK)


if __name__ == "__main__":
    main()
