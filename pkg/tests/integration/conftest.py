"""Fixtures for integration tests that run whole presets."""
from typing import Callable

import pytest

from maserengine.core.runner import RunResult, get_preset, run


@pytest.fixture(scope="session")
def preset_run(tmp_path_factory) -> Callable[[str], RunResult]:
    """Run a preset once per session and hand out its result."""
    out_dir = tmp_path_factory.mktemp("presets")
    results: dict[str, RunResult] = {}

    def get(name: str) -> RunResult:
        if name not in results:
            results[name] = run(get_preset(name), out_dir)
        return results[name]

    return get
