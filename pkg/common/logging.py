"""Shared logging configuration.

Everything goes to standard error so that command output on standard output
stays byte-for-byte reproducible.
"""
from __future__ import annotations

import logging
import os
import sys
from typing import Optional

LEVEL_ENV_KEY = "CATALAN_EARS_LOG_LEVEL"
LOG_FORMAT = "%(asctime)s | %(levelname)s | %(name)s | %(message)s"
DEFAULT_LOGGER = "catalan_ears"

# only relevant when the OEIS download is enabled
_NOISY = ("urllib3", "requests")


def _level_from_name(name: Optional[str]) -> Optional[int]:
    if not name:
        return None
    candidate = logging.getLevelName(name.strip().upper())
    return candidate if isinstance(candidate, int) else None


def resolve_level(value: int | str | None = None) -> int:
    """Explicit value first, then ``CATALAN_EARS_LOG_LEVEL``, then INFO."""

    if isinstance(value, int):
        return value
    for name in (value, os.environ.get(LEVEL_ENV_KEY)):
        level = _level_from_name(name)
        if level is not None:
            return level
    return logging.INFO


def configure_logging(level: int | str | None = None) -> int:
    resolved = resolve_level(level)
    root = logging.getLogger()
    if root.hasHandlers():
        root.setLevel(resolved)
    else:
        logging.basicConfig(level=resolved, format=LOG_FORMAT, stream=sys.stderr)
    for name in _NOISY:
        logging.getLogger(name).setLevel(max(resolved, logging.INFO))
    return resolved


def get_logger(name: Optional[str] = None) -> logging.Logger:
    configure_logging()
    return logging.getLogger(name or DEFAULT_LOGGER)
