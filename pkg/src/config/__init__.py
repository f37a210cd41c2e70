from src.config.loader import DEFAULT_CONFIG_PATH, load_config, resolve_jobs, section

__all__ = ["DEFAULT_CONFIG_PATH", "load_config", "resolve_jobs", "section"]
