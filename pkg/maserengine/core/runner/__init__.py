"""Presets, run execution and run-directory files."""

__all__ = [
    'presets',
    'preset_names',
    'get_preset',
    'RunService',
    'RunResult',
    'RunProgress',
    'run',
    'EXIT_OK',
    'EXIT_CONFIG',
    'EXIT_AUDIT',
    'AuditReport',
    'Manifest',
    'build_initial_state',
    'ground_vacuum',
    'standard_observers',
    'field_ledger',
    'load_trajectory',
    'read_ledger',
]

from .presets import get_preset, preset_names, presets
from .observers import field_ledger, standard_observers
from .reports import AuditReport, Manifest
from .states import build_initial_state, ground_vacuum
from .outputs import load_trajectory, read_ledger
from .service import EXIT_AUDIT, EXIT_CONFIG, EXIT_OK, RunProgress, RunResult, RunService, run
