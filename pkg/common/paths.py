"""Path helpers to keep directory layout consistent."""
from __future__ import annotations

import os
from pathlib import Path


CACHE_ENV_KEY = "CATALAN_EARS_CACHE"


def get_repo_root() -> Path:
    return Path(__file__).resolve().parents[1]


def get_fixtures_dir() -> Path:
    """Bundled OEIS b-files committed with the repository."""

    return get_repo_root() / "data" / "oeis"


def get_cache_dir() -> Path:
    override = os.environ.get(CACHE_ENV_KEY)
    if override and override.strip():
        return Path(override.strip()).expanduser()
    return get_repo_root() / ".cache" / "oeis"


def get_config_path() -> Path:
    return get_repo_root() / "config" / "catalan_ears.yml"


def ensure_dir(path: Path) -> Path:
    path.mkdir(parents=True, exist_ok=True)
    return path
