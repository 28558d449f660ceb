"""Configuration management for maserengine."""

from pathlib import Path

import yaml
from pydantic import ValidationError

from ..core.errors import ConfigError
from .models import RunConfig
from .parsing import parse_config_file, write_config

__all__ = ["RunConfig", "load_config", "write_config"]

def load_config(config_path: Path) -> RunConfig:
    """Load a run configuration from file.

    Args:
        config_path: Path to a JSON or YAML config file

    Returns:
        RunConfig: Validated configuration object

    Raises:
        ConfigError: If the file is missing, unreadable or invalid
    """
    config_path = Path(config_path)
    try:
        config_dict = parse_config_file(config_path)
    except (FileNotFoundError, ValueError, yaml.YAMLError) as e:
        raise ConfigError(str(e), criterion="file") from e

    try:
        return RunConfig.model_validate(config_dict)
    except ValidationError as e:
        raise ConfigError(f"Invalid configuration {config_path}:\n{e}", criterion="schema") from e
