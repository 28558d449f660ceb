"""Command implementations for the maserengine CLI."""

from .base import BaseCommand
from .run import RunCommand
from .presets import ListPresetsCommand
from .audit import AuditCommand

__all__ = [
    'BaseCommand',
    'RunCommand',
    'ListPresetsCommand',
    'AuditCommand',
]
