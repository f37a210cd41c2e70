import os
from pathlib import Path
from typing import Dict, Optional

import yaml

from src.errors import DomainError

DEFAULT_CONFIG_PATH = Path(__file__).with_name("config.yaml")


def load_config(config_path: Optional[str] = None) -> Dict:
    """
    Load configuration from YAML file.

    Args:
        config_path: Path to a YAML file; falls back to $TEICH_CONFIG, then the
            packaged config.yaml

    Returns:
        Configuration dictionary (empty sections are dicts, never None)
    """
    path = Path(config_path or os.getenv("TEICH_CONFIG") or DEFAULT_CONFIG_PATH)
    if not path.exists():
        raise DomainError(f"Config file not found: {path}")
    with open(path, "r") as f:
        config = yaml.safe_load(f) or {}
    if not isinstance(config, dict):
        raise DomainError(f"Config file {path} must contain a mapping")
    return config


def section(config: Dict, name: str) -> Dict:
    return config.get(name) or {}


def resolve_jobs(cli_jobs: Optional[int], config: Dict) -> int:
    """Worker count: --jobs, then $TEICH_JOBS, then run.jobs, then 1."""
    if cli_jobs is not None:
        jobs = cli_jobs
    elif os.getenv("TEICH_JOBS"):
        try:
            jobs = int(os.environ["TEICH_JOBS"])
        except ValueError:
            raise DomainError(f"TEICH_JOBS must be an integer, got {os.environ['TEICH_JOBS']!r}")
    else:
        jobs = int(section(config, "run").get("jobs", 1))
    if jobs < 1:
        raise DomainError(f"jobs must be at least 1, got {jobs}")
    return jobs
