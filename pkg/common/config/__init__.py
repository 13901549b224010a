"""Configuration helpers for runtime settings and CLI options."""

from .cli import CliConfig
from .settings import ConfigurationError, Settings, load_settings

__all__ = ["CliConfig", "ConfigurationError", "Settings", "load_settings"]
