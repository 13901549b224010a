"""Runtime settings: caps, cache/fixture locations, network policy.

Values come from ``config/catalan_ears.yml`` (or the file named by
``CATALAN_EARS_CONFIG``) and are then overridden by environment variables.
Every field has a default, so the file is optional.
"""
from __future__ import annotations

import os
from dataclasses import dataclass, field, fields, replace
from pathlib import Path
from typing import Any, Dict, Optional

import yaml

from common.logging import get_logger
from common.paths import get_cache_dir, get_config_path, get_fixtures_dir, get_repo_root

LOGGER = get_logger(__name__)

CONFIG_ENV_KEY = "CATALAN_EARS_CONFIG"
OEIS_BASE_URL = "https://oeis.org"


class ConfigurationError(ValueError):
    """Raised when settings or CLI bounds are inconsistent."""


def _safe_int(value: Any, default: int) -> int:
    try:
        return int(value)
    except (TypeError, ValueError):
        return int(default)


def _safe_float(value: Any, default: float) -> float:
    try:
        return float(value)
    except (TypeError, ValueError):
        return float(default)


def _as_bool(value: Any) -> bool:
    if isinstance(value, bool):
        return value
    if isinstance(value, str):
        return value.strip().lower() in {"true", "1", "yes", "on"}
    return bool(value)


def _anchor(value: Any) -> Path:
    # relative paths in the settings file are relative to the repository root
    path = Path(value).expanduser()
    return path if path.is_absolute() else get_repo_root() / path


@dataclass(frozen=True)
class Settings:
    """Normalized runtime settings."""

    enumeration_cap: int = 14
    arithmetic_cap: int = 200
    cache_dir: Path = field(default_factory=get_cache_dir)
    fixtures_dir: Optional[Path] = field(default_factory=get_fixtures_dir)
    allow_network: bool = False
    oeis_base_url: str = OEIS_BASE_URL
    timeout: float = 10.0

    @classmethod
    def from_raw(cls, raw: Optional[Dict[str, Any]]) -> "Settings":
        raw = raw or {}
        base = cls()
        known = {item.name for item in fields(cls)}
        unknown = sorted(set(raw) - known)
        if unknown:
            LOGGER.warning("Ignoring unknown settings keys: %s", unknown)
        fixtures_raw = raw.get("fixtures_dir", base.fixtures_dir)
        settings = cls(
            enumeration_cap=max(1, _safe_int(raw.get("enumeration_cap"), base.enumeration_cap)),
            arithmetic_cap=max(1, _safe_int(raw.get("arithmetic_cap"), base.arithmetic_cap)),
            cache_dir=_anchor(raw.get("cache_dir") or base.cache_dir),
            fixtures_dir=_anchor(fixtures_raw) if fixtures_raw else None,
            allow_network=_as_bool(raw.get("allow_network", base.allow_network)),
            oeis_base_url=str(raw.get("oeis_base_url") or base.oeis_base_url).rstrip("/"),
            timeout=_safe_float(raw.get("timeout"), base.timeout),
        )
        return settings

    def with_env(self) -> "Settings":
        """Apply environment overrides on top of file values."""

        cache_override = os.environ.get("CATALAN_EARS_CACHE")
        if cache_override and cache_override.strip():
            return replace(self, cache_dir=Path(cache_override.strip()).expanduser())
        return self


def _load_yaml(path: Path) -> Dict[str, Any]:
    data = yaml.safe_load(path.read_text(encoding="utf-8")) or {}
    if not isinstance(data, dict):
        raise ConfigurationError(f"Settings file {path} must contain a mapping")
    return data


def load_settings(path: Optional[Path] = None) -> Settings:
    """Return settings from ``path`` (or the default locations) plus env overrides."""

    candidate = path
    if candidate is None:
        env_path = os.environ.get(CONFIG_ENV_KEY)
        candidate = Path(env_path) if env_path else get_config_path()
    raw: Dict[str, Any] = {}
    if candidate.exists():
        raw = _load_yaml(candidate)
        LOGGER.debug("Settings loaded from %s", candidate)
    elif path is not None:
        raise ConfigurationError(f"Settings file not found: {candidate}")
    return Settings.from_raw(raw).with_env()
