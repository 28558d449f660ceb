"""Integration tests for the command line interface."""
import json
from argparse import Namespace
from pathlib import Path

import numpy as np
import pytest
import yaml
from click.testing import CliRunner

from maserengine.cli.commands import RunCommand
from maserengine.cli.main import cli
from maserengine.config import write_config
from maserengine.config.models import RunConfig
from maserengine.core.dynamics import Trajectory
from maserengine.core.runner.outputs import write_ledger
from maserengine.shared.constants import WORKERS_ENV_VAR


@pytest.fixture
def runner() -> CliRunner:
    return CliRunner()


@pytest.fixture
def config_file(tmp_path: Path, small_run_config: RunConfig) -> Path:
    return write_config(small_run_config, tmp_path / "small.json")


def test_list_presets(runner):
    """Test the preset table names every preset."""
    result = runner.invoke(cli, ["list-presets"])
    assert result.exit_code == 0
    for name in ("below", "at_threshold", "above", "above_long", "landscape"):
        assert name in result.output


def test_list_presets_json(runner):
    """Test the JSON listing carries full configurations."""
    result = runner.invoke(cli, ["list-presets", "--json"])
    assert result.exit_code == 0
    assert '"above_long"' in result.output
    assert '"units"' in result.output


def test_run_needs_exactly_one_source(runner, config_file):
    """Test --config and --preset exclude each other and one is required."""
    result = runner.invoke(cli, ["run", "--config", str(config_file), "--preset", "above"])
    assert result.exit_code == 1
    assert runner.invoke(cli, ["run"]).exit_code == 1


def test_run_unknown_preset(runner, tmp_path):
    """Test an unknown preset name is a configuration error."""
    result = runner.invoke(cli, ["run", "--preset", "sideways", "--out", str(tmp_path)])
    assert result.exit_code == 1


def test_run_rejects_config_without_units(runner, tmp_path):
    """Test a configuration missing the units tag exits with status 1."""
    path = tmp_path / "bad.yaml"
    path.write_text(yaml.safe_dump({
        "name": "bad", "params": {"n_field": 8}, "t_final": 1.0, "dt": 0.01, "record_every": 0.5,
    }))
    result = runner.invoke(cli, ["run", "--config", str(path), "--out", str(tmp_path / "out")])
    assert result.exit_code == 1
    assert not (tmp_path / "out" / "bad").exists()


def test_run_config_and_audit(runner, tmp_path, config_file):
    """Test a configuration runs to completion and its directory audits cleanly."""
    out_dir = tmp_path / "runs"
    result = runner.invoke(cli, ["run", "--config", str(config_file), "--out", str(out_dir)])
    assert result.exit_code == 0, result.output

    manifest = json.loads((out_dir / "small" / "manifest.json").read_text())
    assert manifest["exit_status"] == 0
    assert "ledger.csv" in manifest["files"]

    audit = runner.invoke(cli, ["audit", "--trajectory", str(out_dir / "small")])
    assert audit.exit_code == 0, audit.output


def test_audit_missing_directory(runner, tmp_path):
    """Test auditing a directory without a run is a configuration error."""
    result = runner.invoke(cli, ["audit", "--trajectory", str(tmp_path / "nothing")])
    assert result.exit_code == 1


def test_audit_reports_subadditivity_without_failing(runner, tmp_path, small_run_config):
    """Test a joint entropy outgrowing the field entropy is shown but keeps exit status 0."""
    p = small_run_config.params
    t = np.linspace(0.0, 2.0, 9)
    J_h, J_c = 1.0, -0.8
    columns = {
        "P1": np.full(t.size, 0.5),
        "P2": np.full(t.size, 0.3),
        "P3": np.full(t.size, 0.2),
        "J_h": np.full(t.size, J_h),
        "J_c": np.full(t.size, J_c),
        "S_af": 1.0 + 0.1 * t,
        "S_f": 0.5 + 0.05 * t,
        "sigma": np.full(t.size, 0.1 - J_h / p.T_h - J_c / p.T_c),
    }
    run_dir = tmp_path / "small"
    run_dir.mkdir()
    write_config(small_run_config, run_dir / "config.json")
    write_ledger(Trajectory.from_columns(t, columns, params=p), run_dir / "ledger.csv")

    result = runner.invoke(cli, ["audit", "--trajectory", str(run_dir)])
    assert result.exit_code == 0, result.output
    assert "violated" in result.output


def test_run_rejects_bad_worker_count(runner, tmp_path, monkeypatch):
    """Test an invalid worker count is refused before anything runs."""
    monkeypatch.setenv(WORKERS_ENV_VAR, "many")
    result = runner.invoke(cli, ["run", "--preset", "landscape", "--out", str(tmp_path)])
    assert result.exit_code == 1
    assert not (tmp_path / "landscape").exists()


def test_run_pool(tmp_path, small_run_config):
    """Test a batch on worker processes keeps the configuration order."""
    configs = [
        small_run_config,
        small_run_config.model_copy(update={"name": "small_b"}),
    ]
    summaries = RunCommand()._run_pool(configs, tmp_path, None, workers=2)
    assert [s.name for s in summaries] == ["small", "small_b"]
    assert all(s.exit_code == 0 for s in summaries)
    assert (tmp_path / "small_b" / "manifest.json").exists()


def test_run_preset_batch_exit_code(tmp_path):
    """Test a batch reports the worst exit code of its runs."""
    exit_code = RunCommand()(Namespace(config=None, presets=("landscape", "landscape"), out=str(tmp_path)))
    assert exit_code == 0
    assert (tmp_path / "landscape" / "landscape.csv").exists()
