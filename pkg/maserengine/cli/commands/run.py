"""Command to run configurations and presets."""

import logging
import os
from argparse import Namespace
from concurrent.futures import ProcessPoolExecutor, as_completed
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from rich.progress import BarColumn, Progress, TextColumn, TimeElapsedColumn
from rich.table import Table

from ..commands.base import BaseCommand
from ...config import load_config
from ...config.models import RunConfig
from ...core.errors import ConfigError
from ...core.runner import EXIT_CONFIG, RunResult, get_preset, run
from ...shared.constants import WORKERS_ENV_VAR
from ...shared.utils.formatting import format_quantity

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RunSummary:
    """What a worker process reports back about one run."""
    name: str
    exit_code: int
    run_dir: str
    records: int = 0
    n_mean: Optional[float] = None
    eta_E: Optional[float] = None
    error: Optional[str] = None

    @classmethod
    def from_result(cls, result: RunResult) -> "RunSummary":
        traj = result.trajectory
        return cls(
            name=result.name,
            exit_code=result.exit_code,
            run_dir=str(result.run_dir),
            records=len(traj) if traj is not None else 0,
            n_mean=float(traj.column("n_mean")[-1]) if traj is not None and len(traj) else None,
            eta_E=result.efficiency.eta_E if result.efficiency is not None else None,
        )


def execute_config(config: RunConfig, out_dir: Path, base_dir: Optional[Path] = None) -> RunSummary:
    """Run one configuration in a worker process."""
    try:
        return RunSummary.from_result(run(config, out_dir, base_dir=base_dir))
    except ConfigError as e:
        logger.error(f"Run '{config.name}' rejected: {e}")
        return RunSummary(config.name, EXIT_CONFIG, str(out_dir / config.name), error=str(e))


def worker_count() -> int:
    """Pool size from MASERENGINE_WORKERS, default 1.

    Raises:
        ConfigError: If the variable is not a positive integer
    """
    raw = os.environ.get(WORKERS_ENV_VAR, "1")
    try:
        workers = int(raw)
    except ValueError as e:
        raise ConfigError(f"{WORKERS_ENV_VAR}={raw!r} is not an integer", criterion="workers") from e
    if workers < 1:
        raise ConfigError(f"{WORKERS_ENV_VAR} must be at least 1, got {workers}", criterion="workers")
    return workers


class RunCommand(BaseCommand):
    """Integrate configurations or presets and write their run directories."""

    def execute(self, args: Namespace) -> int:
        """Execute the run command.

        Args:
            args: config (path or None), presets (names), out (directory)

        Returns:
            int: Largest exit code over all runs
        """
        try:
            configs, base_dir = self._collect(args)
            workers = worker_count()
        except (ConfigError, KeyError) as e:
            self.console.print(f"[red]Error:[/red] {e}")
            return EXIT_CONFIG

        out_dir = Path(args.out)
        if workers == 1 or len(configs) == 1:
            summaries = self._run_sequential(configs, out_dir, base_dir)
        else:
            summaries = self._run_pool(configs, out_dir, base_dir, workers)

        self._display(summaries)
        return max(summary.exit_code for summary in summaries)

    def _collect(self, args: Namespace) -> tuple[list[RunConfig], Optional[Path]]:
        if bool(args.config) == bool(args.presets):
            raise ConfigError("Give either --config or at least one --preset", criterion="usage")
        if args.config:
            path = Path(args.config)
            return [load_config(path)], path.parent
        names = list(dict.fromkeys(args.presets))
        return [get_preset(name) for name in names], None

    def _progress(self) -> Progress:
        return Progress(
            TextColumn("{task.description}"),
            BarColumn(),
            TextColumn("{task.completed:g}/{task.total:g}"),
            TimeElapsedColumn(),
            console=self.console,
        )

    def _run_sequential(
        self, configs: list[RunConfig], out_dir: Path, base_dir: Optional[Path]
    ) -> list[RunSummary]:
        summaries = []
        with self._progress() as progress:
            for config in configs:
                task = progress.add_task(config.name, total=config.t_final)

                def advance(name: str, t: float, t_final: float, task=task) -> None:
                    progress.update(task, completed=t)

                try:
                    result = run(config, out_dir, progress=advance, base_dir=base_dir)
                    summaries.append(RunSummary.from_result(result))
                except ConfigError as e:
                    logger.error(f"Run '{config.name}' rejected: {e}")
                    summaries.append(
                        RunSummary(config.name, EXIT_CONFIG, str(out_dir / config.name), error=str(e))
                    )
        return summaries

    def _run_pool(
        self, configs: list[RunConfig], out_dir: Path, base_dir: Optional[Path], workers: int
    ) -> list[RunSummary]:
        logger.info(f"Running {len(configs)} configurations on {workers} worker processes")
        summaries = []
        with self._progress() as progress, ProcessPoolExecutor(max_workers=workers) as pool:
            task = progress.add_task("runs", total=len(configs))
            futures = [pool.submit(execute_config, config, out_dir, base_dir) for config in configs]
            for future in as_completed(futures):
                summaries.append(future.result())
                progress.advance(task)
        order = {config.name: k for k, config in enumerate(configs)}
        return sorted(summaries, key=lambda s: order[s.name])

    def _display(self, summaries: list[RunSummary]) -> None:
        table = Table(title="Runs")
        table.add_column("Name")
        table.add_column("Status")
        table.add_column("Records", justify="right")
        table.add_column("<n>", justify="right")
        table.add_column("eta_E", justify="right")
        table.add_column("Directory")
        labels = {0: "[green]ok[/green]", 1: "[red]config error[/red]", 2: "[yellow]audit failed[/yellow]"}
        for s in summaries:
            table.add_row(
                s.name,
                labels.get(s.exit_code, str(s.exit_code)),
                str(s.records),
                format_quantity(s.n_mean),
                format_quantity(s.eta_E, digits=6),
                s.run_dir,
            )
        self.console.print(table)
