"""Base command class for all CLI commands."""

from abc import ABC, abstractmethod
from argparse import Namespace

from rich.console import Console


class BaseCommand(ABC):
    """Base class for all CLI commands."""

    def __init__(self, console: Console | None = None) -> None:
        """Initialize the command.

        Args:
            console: Console for tables and progress (default: stdout)
        """
        self.name: str = self.__class__.__name__.lower().replace('command', '')
        self.help: str = self.__doc__ or ''
        self.console = console or Console()

    @abstractmethod
    def execute(self, args: Namespace) -> int:
        """Execute the command with the given arguments.

        Args:
            args: The command line arguments

        Returns:
            int: The exit code (0 success, 1 configuration error, 2 audit failure)
        """
        raise NotImplementedError

    def __call__(self, args: Namespace) -> int:
        return self.execute(args)
