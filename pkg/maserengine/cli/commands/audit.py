"""Command to re-run the thermodynamic audits on a stored trajectory."""

from argparse import Namespace
from pathlib import Path

from rich.table import Table

from ..commands.base import BaseCommand
from ...core.errors import ConfigError, SteadyStateError
from ...core.runner import EXIT_AUDIT, EXIT_CONFIG, EXIT_OK, load_trajectory
from ...core.thermo import second_law_audit, subadditivity_audit
from ...config import load_config
from ...shared.utils.formatting import format_quantity


class AuditCommand(BaseCommand):
    """Audit the second law of a run directory and report sub-additivity."""

    def execute(self, args: Namespace) -> int:
        """Execute the audit command.

        Args:
            args: trajectory (run directory)

        Returns:
            int: 0 if the second law holds, 2 if it fails, 1 if the run cannot be read
        """
        run_dir = Path(args.trajectory)
        try:
            traj = load_trajectory(run_dir)
            config = load_config(run_dir / "config.json")
        except (ConfigError, FileNotFoundError, ValueError) as e:
            self.console.print(f"[red]Error:[/red] {e}")
            return EXIT_CONFIG
        if len(traj) < 3:
            self.console.print(f"[red]Error:[/red] {run_dir} holds only {len(traj)} records")
            return EXIT_CONFIG

        table = Table(title=f"Audit of {config.name}")
        table.add_column("Check")
        table.add_column("Result")
        table.add_column("Value", justify="right")

        second_law = second_law_audit(traj)
        table.add_row(
            "second law",
            "pass" if second_law.passed else "FAIL",
            f"min sigma {format_quantity(second_law.sigma_min)} at t={second_law.worst_time:g}",
        )

        try:
            window = config.window.resolve(float(traj.t[-1]))
            subadditivity = subadditivity_audit(traj, window)
            table.add_row(
                "sub-additivity (diagnostic)",
                "holds" if subadditivity.passed else "violated",
                f"margin {format_quantity(subadditivity.margin)} at t={subadditivity.worst_time:g}",
            )
        except SteadyStateError as e:
            table.add_row("sub-additivity (diagnostic)", "skipped", str(e))

        self.console.print(table)
        return EXIT_OK if second_law.passed else EXIT_AUDIT
