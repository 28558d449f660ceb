"""Unit tests for configuration models and loading."""
import json
from pathlib import Path

import pytest
import yaml
from pydantic import ValidationError

from maserengine.config import load_config, write_config
from maserengine.config.models import (
    EngineParams,
    InitialStateConfig,
    RunConfig,
    WindowConfig,
)
from maserengine.config.validation import check_timing
from maserengine.core.errors import ConfigError
from maserengine.shared.constants import UNITS_TAG
from maserengine.shared.types import Frame, OutputKind


def run_config(**overrides) -> RunConfig:
    values = dict(
        name="test",
        units=UNITS_TAG,
        params=EngineParams(n_field=8),
        t_final=2.0,
        dt=0.01,
        record_every=0.5,
    )
    values.update(overrides)
    return RunConfig(**values)


def test_engine_params_defaults():
    """Test derived frequencies and efficiencies of the default scheme."""
    p = EngineParams()
    assert p.omega_h == 150.0
    assert p.omega_c == 120.0
    assert p.eta_maser == pytest.approx(0.2)
    assert p.eta_carnot == pytest.approx(0.8)
    assert p.dim == 120


@pytest.mark.parametrize("values", [
    {"omega3": 20.0},
    {"omega_f": 25.0},
    {"T_h": 10.0},
    {"n_field": 1},
    {"gamma_h": 0.0},
    {"g": -1.0},
    {"unknown": 1.0},
])
def test_engine_params_rejects(values):
    """Test invalid level schemes, temperatures and truncations."""
    with pytest.raises(ValidationError):
        EngineParams(**values)


def test_engine_params_are_frozen():
    """Test parameters cannot be mutated."""
    p = EngineParams()
    with pytest.raises(ValidationError):
        p.g = 1.0


def test_check_timing():
    """Test steps per record and record counts."""
    assert check_timing(100.0, 5e-3, 0.25) == (50, 400)
    with pytest.raises(ConfigError):
        check_timing(1.0, 0.3, 0.5)
    with pytest.raises(ConfigError):
        check_timing(1.0, 0.1, 0.3)
    with pytest.raises(ConfigError):
        check_timing(1.0, 0.5, 2.0)


def test_run_config_requires_units():
    """Test a configuration without the units tag is rejected."""
    with pytest.raises(ValidationError):
        RunConfig(name="test")
    with pytest.raises(ValidationError):
        RunConfig(name="test", units="SI")


def test_run_config_defaults():
    """Test default outputs, frame and window."""
    config = run_config()
    assert config.frame is Frame.ROTATING
    assert OutputKind.LEDGER_CSV in config.outputs
    assert OutputKind.LANDSCAPE_CSV not in config.outputs
    assert config.window.resolve(config.t_final) == (1.5, 2.0)


def test_run_config_rejects_bad_timing():
    """Test the timing check runs on dynamics configurations."""
    with pytest.raises(ValidationError):
        run_config(dt=0.3)


def test_run_config_landscape_rules():
    """Test landscape runs need their section and dynamics runs refuse its output."""
    with pytest.raises(ValidationError):
        run_config(kind="landscape")
    with pytest.raises(ValidationError):
        run_config(outputs=[OutputKind.LANDSCAPE_CSV])


def test_run_config_rejects_bad_name_and_snapshots():
    """Test run names must be path components and snapshots lie inside the run."""
    with pytest.raises(ValidationError):
        run_config(name="a/b")
    with pytest.raises(ValidationError):
        run_config(snapshot_times=[3.0])


def test_initial_state_requirements():
    """Test each initial-state kind demands its fields."""
    with pytest.raises(ValidationError):
        InitialStateConfig(kind="gibbs")
    with pytest.raises(ValidationError):
        InitialStateConfig(kind="gibbs_poisson", temperature=10.0)
    with pytest.raises(ValidationError):
        InitialStateConfig(kind="custom")
    assert InitialStateConfig(kind="gibbs", temperature=10.0).temperature == 10.0


def test_window_config():
    """Test explicit bounds and their validation."""
    assert WindowConfig(t_start=1.0, t_end=2.0).resolve(10.0) == (1.0, 2.0)
    with pytest.raises(ValidationError):
        WindowConfig(t_start=1.0)
    with pytest.raises(ValidationError):
        WindowConfig(start_fraction=1.0)


def test_write_and_load_config(tmp_path: Path):
    """Test a written configuration loads back equal."""
    config = run_config(frame=Frame.LAB, snapshot_times=[1.0])
    path = write_config(config, tmp_path / "config.json")
    assert load_config(path) == config


def test_load_yaml_config(tmp_path: Path):
    """Test YAML files are accepted."""
    path = tmp_path / "run.yaml"
    path.write_text(yaml.safe_dump({
        "name": "yaml_run",
        "units": UNITS_TAG,
        "params": {"n_field": 8},
        "t_final": 1.0,
        "dt": 0.01,
        "record_every": 0.5,
    }))
    config = load_config(path)
    assert config.name == "yaml_run"
    assert config.params.n_field == 8


def test_load_config_missing_file(tmp_path: Path):
    """Test a missing file is a configuration error."""
    with pytest.raises(ConfigError) as exc_info:
        load_config(tmp_path / "missing.json")
    assert exc_info.value.criterion == "file"


def test_load_config_not_a_mapping(tmp_path: Path):
    """Test a file holding a list is rejected."""
    path = tmp_path / "list.json"
    path.write_text("[1, 2, 3]")
    with pytest.raises(ConfigError) as exc_info:
        load_config(path)
    assert exc_info.value.criterion == "file"


def test_load_config_schema_error(tmp_path: Path):
    """Test schema violations are reported as configuration errors."""
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"name": "bad", "params": {"n_field": 8}}))
    with pytest.raises(ConfigError) as exc_info:
        load_config(path)
    assert exc_info.value.criterion == "schema"
    assert "units" in str(exc_info.value)
