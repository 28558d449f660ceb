"""Command to list the named presets."""

import json
from argparse import Namespace

from rich.table import Table

from ..commands.base import BaseCommand
from ...core.maser import classify_regime
from ...core.runner import presets


class ListPresetsCommand(BaseCommand):
    """List the named run presets."""

    def execute(self, args: Namespace) -> int:
        """Execute the list-presets command.

        Args:
            args: json (bool) selects machine-readable output

        Returns:
            int: Always 0
        """
        configs = presets()
        if args.json:
            payload = [config.model_dump(mode="json") for config in configs]
            self.console.print_json(json.dumps(payload))
            return 0

        table = Table(title="Presets")
        for column in ("Name", "Kind", "omega3", "n_field", "t_final", "dt", "Regime"):
            table.add_column(column, justify="left" if column in ("Name", "Kind", "Regime") else "right")
        for config in configs:
            p = config.params
            dynamics = config.kind == "dynamics"
            table.add_row(
                config.name,
                config.kind,
                f"{p.omega3:g}",
                str(p.n_field if dynamics else config.landscape.n_field),
                f"{config.t_final:g}" if dynamics else "-",
                f"{config.dt:g}" if dynamics else "-",
                classify_regime(p).value if dynamics else "-",
            )
        self.console.print(table)
        return 0
