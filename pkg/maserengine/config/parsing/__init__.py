"""Configuration parsing utilities."""

from pathlib import Path
from typing import Any, Dict
import yaml
import logging

from ..models import RunConfig

logger = logging.getLogger(__name__)

def parse_config_file(config_path: Path) -> Dict[str, Any]:
    """Parse configuration file.

    JSON is a subset of YAML, so both formats are accepted.

    Args:
        config_path: Path to configuration file

    Returns:
        Dict containing parsed configuration

    Raises:
        FileNotFoundError: If config file doesn't exist
        yaml.YAMLError: If config file is invalid YAML
    """
    if not config_path.exists():
        raise FileNotFoundError(f"Configuration file not found: {config_path}")

    try:
        with open(config_path, "r", encoding="utf-8") as f:
            config = yaml.safe_load(f)
    except yaml.YAMLError as e:
        logger.error(f"Failed to parse configuration file: {e}")
        raise

    if not isinstance(config, dict):
        raise ValueError(f"Configuration file {config_path} does not hold a mapping")
    return config

def write_config(config: RunConfig, config_path: Path) -> Path:
    """Write a resolved configuration as indented JSON.

    Args:
        config: Configuration to write
        config_path: Destination file

    Returns:
        The written path
    """
    config_path.parent.mkdir(parents=True, exist_ok=True)
    config_path.write_text(config.model_dump_json(indent=2) + "\n", encoding="utf-8")
    logger.debug(f"Wrote configuration to {config_path}")
    return config_path
